#include "gfangular/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gfangular {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

}  // namespace

Harmonic Harmonic::from_general(const GeneralParams& g) {
  NUResult r = nu_reduce(g);
  Harmonic h;
  h.a0 = r.reduction.a0;
  h.C = g.C;
  h.alpha_exp = r.reduction.alpha_exp;
  h.beta_exp = r.reduction.beta_exp;
  h.a = g.a;
  h.quantized = false;
  h.hyper = r.hyper;
  h.general = g;
  return h;
}

Harmonic Harmonic::from_quantized(double B, double C, int N) {
  const double a0 = compute_a0(B, C);
  GeneralParams g{quantization_a(a0, N), 0.0, B, C};
  Harmonic h = from_general(g);
  h.quantized = true;
  h.N = N;
  return h;
}

Complex eval_Z(const Harmonic& h, double phi, double theta) {
  if (theta <= 0.0 || theta >= kPi)
    throw std::domain_error("eval_Z: theta outside (0, pi)");
  const double z = std::cos(theta);
  const double u = h.quantized ? quantized_solution(h.N, h.general, z)
                               : solve_A0(h.general, z);
  return std::exp(kI * (h.alpha_exp * phi)) * u;
}

AngularGrid AngularGrid::make(double h) {
  AngularGrid g;
  g.h_theta = h;
  g.h_phi = h;
  g.theta_min = h;
  g.n_theta = int(std::round(kPi / h)) - 1;
  g.n_phi = int(std::round(2.0 * kPi / h));
  g.data.assign(std::size_t(g.n_theta) * g.n_phi, Complex{});
  return g;
}

namespace {

AngularGrid like(const AngularGrid& g) {
  AngularGrid r = g;
  std::fill(r.data.begin(), r.data.end(), Complex{});
  return r;
}

// centered periodic in phi
AngularGrid d_phi(const AngularGrid& g) {
  AngularGrid r = like(g);
  const double inv = 1.0 / (2.0 * g.h_phi);
  for (int i = 0; i < g.n_theta; ++i)
    for (int j = 0; j < g.n_phi; ++j) {
      int jp = (j + 1) % g.n_phi, jm = (j + g.n_phi - 1) % g.n_phi;
      r.at(i, j) = (g.at(i, jp) - g.at(i, jm)) * inv;
    }
  return r;
}

AngularGrid d2_phi(const AngularGrid& g) {
  AngularGrid r = like(g);
  const double inv = 1.0 / (g.h_phi * g.h_phi);
  for (int i = 0; i < g.n_theta; ++i)
    for (int j = 0; j < g.n_phi; ++j) {
      int jp = (j + 1) % g.n_phi, jm = (j + g.n_phi - 1) % g.n_phi;
      r.at(i, j) = (g.at(i, jp) - 2.0 * g.at(i, j) + g.at(i, jm)) * inv;
    }
  return r;
}

// centered in theta, second-order one-sided on the boundary rows
AngularGrid d_theta(const AngularGrid& g) {
  AngularGrid r = like(g);
  const double inv = 1.0 / (2.0 * g.h_theta);
  const int n = g.n_theta;
  for (int j = 0; j < g.n_phi; ++j) {
    r.at(0, j) = (-3.0 * g.at(0, j) + 4.0 * g.at(1, j) - g.at(2, j)) * inv;
    r.at(n - 1, j) =
        (3.0 * g.at(n - 1, j) - 4.0 * g.at(n - 2, j) + g.at(n - 3, j)) * inv;
  }
  for (int i = 1; i < n - 1; ++i)
    for (int j = 0; j < g.n_phi; ++j)
      r.at(i, j) = (g.at(i + 1, j) - g.at(i - 1, j)) * inv;
  return r;
}

AngularGrid d2_theta(const AngularGrid& g) {
  AngularGrid r = like(g);
  const double inv = 1.0 / (g.h_theta * g.h_theta);
  const int n = g.n_theta;
  for (int j = 0; j < g.n_phi; ++j) {
    r.at(0, j) = (2.0 * g.at(0, j) - 5.0 * g.at(1, j) + 4.0 * g.at(2, j) -
                  g.at(3, j)) *
                 inv;
    r.at(n - 1, j) = (2.0 * g.at(n - 1, j) - 5.0 * g.at(n - 2, j) +
                      4.0 * g.at(n - 3, j) - g.at(n - 4, j)) *
                     inv;
  }
  for (int i = 1; i < n - 1; ++i)
    for (int j = 0; j < g.n_phi; ++j)
      r.at(i, j) = (g.at(i + 1, j) - 2.0 * g.at(i, j) + g.at(i - 1, j)) * inv;
  return r;
}

AngularGrid apply_Lx(const AngularGrid& g, double a0) {
  AngularGrid dt = d_theta(g), dp = d_phi(g);
  AngularGrid r = like(g);
  for (int i = 0; i < g.n_theta; ++i) {
    const double th = g.theta(i);
    const double ct = 1.0 / std::tan(th);
    const double vp = a0 * std::sin(th) / (1.0 + std::cos(th));
    for (int j = 0; j < g.n_phi; ++j) {
      const double ph = g.phi(j);
      r.at(i, j) = kI * std::sin(ph) * dt.at(i, j) +
                   kI * std::cos(ph) * ct * dp.at(i, j) -
                   vp * std::cos(ph) * g.at(i, j);
    }
  }
  return r;
}

AngularGrid apply_Ly(const AngularGrid& g, double a0) {
  AngularGrid dt = d_theta(g), dp = d_phi(g);
  AngularGrid r = like(g);
  for (int i = 0; i < g.n_theta; ++i) {
    const double th = g.theta(i);
    const double ct = 1.0 / std::tan(th);
    const double vp = a0 * std::sin(th) / (1.0 + std::cos(th));
    for (int j = 0; j < g.n_phi; ++j) {
      const double ph = g.phi(j);
      r.at(i, j) = -kI * std::cos(ph) * dt.at(i, j) +
                   kI * std::sin(ph) * ct * dp.at(i, j) -
                   vp * std::sin(ph) * g.at(i, j);
    }
  }
  return r;
}

}  // namespace

AngularGrid apply_Lz(const AngularGrid& g, double a0) {
  AngularGrid dp = d_phi(g);
  AngularGrid r = like(g);
  for (std::size_t idx = 0; idx < g.data.size(); ++idx)
    r.data[idx] = -kI * dp.data[idx] - a0 * g.data[idx];
  return r;
}

Complex Lz_eigenvalue(const Harmonic& h) {
  return Complex(h.alpha_exp - h.a0, 0.0);
}

AngularGrid apply_L2_closed(const AngularGrid& g, double a0) {
  AngularGrid dt = d_theta(g), d2t = d2_theta(g), dp = d_phi(g),
              d2p = d2_phi(g);
  AngularGrid r = like(g);
  for (int i = 0; i < g.n_theta; ++i) {
    const double th = g.theta(i);
    const double ct = 1.0 / std::tan(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double opc = 1.0 + std::cos(th);
    for (int j = 0; j < g.n_phi; ++j)
      r.at(i, j) = -d2t.at(i, j) - ct * dt.at(i, j) - d2p.at(i, j) / s2 +
                   (2.0 * kI * a0 / opc) * dp.at(i, j) +
                   (2.0 * a0 * a0 / opc) * g.at(i, j);
  }
  return r;
}

AngularGrid apply_L2_composed(const AngularGrid& g, double a0) {
  AngularGrid lx = apply_Lx(apply_Lx(g, a0), a0);
  AngularGrid ly = apply_Ly(apply_Ly(g, a0), a0);
  AngularGrid lz = apply_Lz(apply_Lz(g, a0), a0);
  AngularGrid r = like(g);
  for (std::size_t idx = 0; idx < g.data.size(); ++idx)
    r.data[idx] = lx.data[idx] + ly.data[idx] + lz.data[idx];
  return r;
}

double grid_band_maxdiff(const AngularGrid& x, const AngularGrid& y,
                         double band) {
  double m = 0.0;
  for (int i = 0; i < x.n_theta; ++i) {
    const double th = x.theta(i);
    if (th < band || th > kPi - band) continue;
    for (int j = 0; j < x.n_phi; ++j)
      m = std::max(m, std::abs(x.at(i, j) - y.at(i, j)));
  }
  return m;
}

double grid_band_maxnorm(const AngularGrid& x, double band) {
  double m = 0.0;
  for (int i = 0; i < x.n_theta; ++i) {
    const double th = x.theta(i);
    if (th < band || th > kPi - band) continue;
    for (int j = 0; j < x.n_phi; ++j) m = std::max(m, std::abs(x.at(i, j)));
  }
  return m;
}

EigenRelationReport check_eigen_relations(const Harmonic& h, double grid_h,
                                          double band) {
  EigenRelationReport rep;
  rep.h = grid_h;

  // L_z: analytic phi derivative, exact up to rounding
  const double c_over_a0 = (h.a0 == 0.0) ? 0.0 : h.C / h.a0;
  rep.lz_residual = std::abs(Lz_eigenvalue(h).real() + c_over_a0);

  AngularGrid g = AngularGrid::make(grid_h);
  g.fill([&](double th, double ph) { return eval_Z(h, ph, th); });
  AngularGrid l2 = apply_L2_closed(g, h.a0);
  for (std::size_t idx = 0; idx < g.data.size(); ++idx)
    l2.data[idx] += h.a * g.data[idx];
  // relative to the size of the eigenvalue term a Z (scale 1 when a = 0)
  rep.l2_residual = grid_band_maxdiff(l2, AngularGrid::make(grid_h), band) /
                    (grid_band_maxnorm(g, band) * std::max(1.0, std::abs(h.a)));
  return rep;
}

}  // namespace gfangular
