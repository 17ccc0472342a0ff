#include "gfangular/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>

namespace gfangular {

namespace odeint = boost::numeric::odeint;

double sl_V(const PhysicalParams& p, double x) {
  const double om = 1.0 - x * x;
  const double mn_pole = double(p.m) * p.m + double(p.n) * p.n -
                         2.0 * double(p.m) * p.n * x;
  if (om == 0.0) {
    if (mn_pole != 0.0) throw std::domain_error("sl_V: pole at x = +-1");
    return 2.0 * p.n * p.alpha * p.k * x;
  }
  return p.alpha * p.alpha * (p.k * p.k - p.mu_tilde * p.mu_tilde) * om +
         2.0 * p.n * p.alpha * p.k * x + mn_pole / om;
}

double sl_form_check(const PhysicalParams& p, const Jet& f, double x) {
  if (std::abs(x) >= 1.0) throw std::domain_error("sl_form_check: |x| >= 1");
  const double U = x * x - 1.0;
  const double Lam = p.lambda + p.mu_tilde * p.mu_tilde * p.alpha * p.alpha;
  // d/dx[U S'] = U S'' + 2x S'
  return U * f.d2f + 2.0 * x * f.df + (sl_V(p, x) + Lam) * f.f;
}

std::pair<double, double> endpoint_exponents(int m, int n) {
  return {std::abs(m + n) / 2.0, std::abs(m - n) / 2.0};  // (rho_-, rho_+)
}

namespace {

constexpr double kSeriesOffset = 1e-6;  // start offset from the endpoint
constexpr int kSeriesTerms = 4;

// Local Frobenius expansion S = t^rho sum c_k t^k at an endpoint,
// t = 1 -+ x.  side = +1 or -1.
struct EndpointSeries {
  double rho = 0.0;
  std::array<double, kSeriesTerms + 1> c{};

  // value and dS/dt at local coordinate t
  std::pair<double, double> eval(double t) const {
    double v = 0.0;
    for (int k = kSeriesTerms; k >= 0; --k) v = v * t + c[k];
    double d = 0.0;
    if (rho == 0.0) {
      for (int k = kSeriesTerms; k >= 1; --k) d = d * t + k * c[k];
      return {v, d};
    }
    for (int k = kSeriesTerms; k >= 0; --k) d = d * t + (rho + k) * c[k];
    return {std::pow(t, rho) * v, std::pow(t, rho - 1.0) * d};
  }
};

EndpointSeries endpoint_series(const PhysicalParams& p, int side,
                               double lambda) {
  const int en = (side > 0) ? p.n : -p.n;
  const double Lam = lambda + p.mu_tilde * p.mu_tilde * p.alpha * p.alpha;
  const double g2 = p.alpha * p.alpha * (p.k * p.k - p.mu_tilde * p.mu_tilde);
  const double nak = en * p.alpha * p.k;
  const double dmn = double(p.m) - en;

  // t^2 a(t) S" + t b(t) S' + c(t) S = 0 with
  // a = 4 - 4t + t^2, b = 4 - 6t + 2t^2, c = -W,
  // W = g2 t^2(2-t)^2 + (2 nak (1-t) + Lam) t(2-t) + dmn^2 + 2 m en t
  const std::array<double, 5> ac{4.0, -4.0, 1.0, 0.0, 0.0};
  const std::array<double, 5> bc{4.0, -6.0, 2.0, 0.0, 0.0};
  std::array<double, 5> cc{};
  cc[0] = -(dmn * dmn);
  cc[1] = -(2.0 * p.m * en + 4.0 * nak + 2.0 * Lam);
  cc[2] = -(4.0 * g2 - 6.0 * nak - Lam);
  cc[3] = -(-4.0 * g2 + 2.0 * nak);
  cc[4] = -g2;

  EndpointSeries s;
  s.rho = std::abs(dmn) / 2.0;
  s.c[0] = 1.0;
  auto f0 = [&](double x) { return 4.0 * x * x - dmn * dmn; };
  for (int k = 1; k <= kSeriesTerms; ++k) {
    double sum = 0.0;
    for (int j = 1; j <= std::min(k, 4); ++j) {
      const double e = s.rho + k - j;
      sum += (ac[j] * e * (e - 1.0) + bc[j] * e + cc[j]) * s.c[k - j];
    }
    s.c[k] = -sum / f0(s.rho + k);
  }
  return s;
}

using State = std::array<double, 2>;

struct SLRhs {
  PhysicalParams p;
  double lambda;
  void operator()(const State& y, State& dydx, double x) const {
    const double Lam =
        lambda + p.mu_tilde * p.mu_tilde * p.alpha * p.alpha;
    dydx[0] = y[1];
    dydx[1] = (2.0 * x * y[1] + (sl_V(p, x) + Lam) * y[0]) / (1.0 - x * x);
  }
};

}  // namespace

ShootingSolver::ShootingSolver(const PhysicalParams& p) : p_(p) {}

ShootingSolver::EndState ShootingSolver::integrate_from(int side, double lambda,
                                                        double x_target) const {
  const EndpointSeries series = endpoint_series(p_, side, lambda);
  const double t_target = (side > 0) ? 1.0 - x_target : 1.0 + x_target;

  if (t_target <= kSeriesOffset) {
    auto [v, dv_dt] = series.eval(t_target);
    return {v, double(-side) * dv_dt};  // dS/dx = -side * dS/dt
  }

  auto [v0, dv0] = series.eval(kSeriesOffset);
  const double x0 = (side > 0) ? 1.0 - kSeriesOffset : -1.0 + kSeriesOffset;
  State y{v0, double(-side) * dv0};

  SLRhs rhs{p_, lambda};
  auto stepper = odeint::make_controlled<
      odeint::runge_kutta_dopri5<State>>(1e-12, 1e-12);
  const double dir = (side > 0) ? -1.0 : 1.0;
  try {
    odeint::integrate_adaptive(stepper, rhs, y, x0, x_target,
                               dir * 1e-7);
  } catch (const std::exception& e) {
    throw IntegrationError(std::string("integrate_from: ") + e.what());
  }
  if (!std::isfinite(y[0]) || !std::isfinite(y[1]))
    throw IntegrationError("integrate_from: non-finite state");
  return {y[0], y[1]};
}

double ShootingSolver::matching(double lambda) const {
  EndState L = integrate_from(-1, lambda, 0.0);
  EndState R = integrate_from(+1, lambda, 0.0);
  const double scale = std::sqrt((L.value * L.value + L.deriv * L.deriv) *
                                 (R.value * R.value + R.deriv * R.deriv));
  return (L.deriv * R.value - L.value * R.deriv) / scale;
}

std::vector<double> ShootingSolver::eigenfunction_values(
    double lambda, const std::vector<double>& xs) const {
  std::vector<double> out(xs.size(), 0.0);

  // the right branch is rescaled to join the left one at x = 0
  EndState L0 = integrate_from(-1, lambda, 0.0);
  EndState R0 = integrate_from(+1, lambda, 0.0);
  double sigma;
  if (std::abs(R0.value) > 1e-8 * std::abs(R0.deriv))
    sigma = L0.value / R0.value;
  else
    sigma = L0.deriv / R0.deriv;

  // left sweep: xs < 0 in ascending order
  {
    const EndpointSeries series = endpoint_series(p_, -1, lambda);
    SLRhs rhs{p_, lambda};
    auto stepper =
        odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-12,
                                                                   1e-12);
    double xcur = -1.0 + kSeriesOffset;
    auto [v0, dv0] = series.eval(kSeriesOffset);
    State y{v0, dv0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] >= 0.0) break;
      const double t = 1.0 + xs[i];
      if (t <= kSeriesOffset) {
        out[i] = series.eval(t).first;
        continue;
      }
      odeint::integrate_adaptive(stepper, rhs, y, xcur, xs[i], 1e-7);
      xcur = xs[i];
      out[i] = y[0];
    }
  }
  // right sweep: xs >= 0 in descending order
  {
    const EndpointSeries series = endpoint_series(p_, +1, lambda);
    SLRhs rhs{p_, lambda};
    auto stepper =
        odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-12,
                                                                   1e-12);
    double xcur = 1.0 - kSeriesOffset;
    auto [v0, dv0] = series.eval(kSeriesOffset);
    State y{v0, -dv0};
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (xs[i] < 0.0) break;
      const double t = 1.0 - xs[i];
      if (t <= kSeriesOffset) {
        out[i] = sigma * series.eval(t).first;
        continue;
      }
      odeint::integrate_adaptive(stepper, rhs, y, xcur, xs[i], -1e-7);
      xcur = xs[i];
      out[i] = sigma * y[0];
    }
  }
  return out;
}

EigenResult ShootingSolver::solve(double lambda_lo, double lambda_hi) const {
  double a = lambda_lo, b = lambda_hi;
  double fa = matching(a), fb = matching(b);
  if (fa == 0.0) b = a;
  if (fb == 0.0) a = b;
  if (a != b && fa * fb > 0.0)
    throw BracketError("shoot_eigenvalue: no sign change on bracket");

  double mid = 0.5 * (a + b), fm = matching(mid);
  for (int it = 0; it < 200 && std::abs(fm) > 1e-10; ++it) {
    if (fa * fm <= 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
    // secant estimate, kept only if it stays inside the bracket
    double cand = b - fb * (b - a) / (fb - fa);
    if (!(cand > a && cand < b)) cand = 0.5 * (a + b);
    mid = cand;
    fm = matching(mid);
    if (b - a < 1e-14 * std::max(1.0, std::abs(mid))) break;
  }

  EigenResult r;
  r.lambda = mid;
  r.bracket = {lambda_lo, lambda_hi};

  // node count and residual from a dense sample of the eigenfunction
  const int ns = 401;
  std::vector<double> xs(ns);
  const double x0 = -1.0 + 1e-3, x1 = 1.0 - 1e-3;
  for (int i = 0; i < ns; ++i) xs[i] = x0 + (x1 - x0) * i / (ns - 1);
  std::vector<double> vals = eigenfunction_values(mid, xs);

  double vmax = 0.0;
  for (double v : vals) vmax = std::max(vmax, std::abs(v));
  int nodes = 0;
  double prev = 0.0;
  for (double v : vals) {
    if (std::abs(v) < 1e-8 * vmax) continue;
    if (prev != 0.0 && v * prev < 0.0) ++nodes;
    prev = v;
  }
  r.node_count = nodes;
  r.l_index = nodes + std::max(std::abs(p_.m), std::abs(p_.n));

  // SL residual via central differences of U S' on the sample grid
  const double dx = xs[1] - xs[0];
  const double Lam =
      mid + p_.mu_tilde * p_.mu_tilde * p_.alpha * p_.alpha;
  auto US1 = [&](int i) {
    // U S' by central difference of S
    return (xs[i] * xs[i] - 1.0) * (vals[i + 1] - vals[i - 1]) / (2.0 * dx);
  };
  double res = 0.0;
  for (int s = 1; s <= 10; ++s) {
    int i = s * (ns - 1) / 11;
    if (i < 2 || i > ns - 3) continue;
    double d_us = (US1(i + 1) - US1(i - 1)) / (2.0 * dx);
    res = std::max(res,
                   std::abs(d_us + (sl_V(p_, xs[i]) + Lam) * vals[i]) / vmax);
  }
  r.residual = res;
  return r;
}

std::vector<EigenResult> ShootingSolver::scan(double lambda_min,
                                              double lambda_max,
                                              int count) const {
  std::vector<EigenResult> results;
  double prev_l = lambda_min, prev_f = matching(lambda_min);
  for (int i = 1; i <= count; ++i) {
    const double l = lambda_min + (lambda_max - lambda_min) * i / count;
    const double f = matching(l);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      try {
        results.push_back(solve(prev_l, l));
      } catch (const BracketError&) {
        // sampling raced past the root; ignore
      }
    }
    prev_l = l;
    prev_f = f;
  }
  std::sort(results.begin(), results.end(),
            [](const EigenResult& x, const EigenResult& y) {
              return x.lambda > y.lambda;
            });
  return results;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

double orthogonality_integral(const ShootingSolver& solver, double lambda_i,
                              double lambda_j) {
  // dyadic panels toward both endpoints
  std::vector<double> bp{0.0};
  for (int j = 1; j <= 14; ++j) bp.push_back(1.0 - std::pow(2.0, -j));
  std::vector<double> breaks;
  for (double b : bp) breaks.push_back(-b);
  for (double b : bp) breaks.push_back(b);
  breaks.push_back(-1.0);
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto [gx, gw] = gauss_legendre(16);
  std::vector<double> nodes, weights;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    for (int q = 0; q < 16; ++q) {
      nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[q]);
      weights.push_back(0.5 * (b - a) * gw[q]);
    }
  }
  // nodes ascend already (panels sorted, gauss nodes ascend)
  std::vector<double> si = solver.eigenfunction_values(lambda_i, nodes);
  std::vector<double> sj = (lambda_i == lambda_j)
                               ? si
                               : solver.eigenfunction_values(lambda_j, nodes);
  double iij = 0.0, iii = 0.0, ijj = 0.0;
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    iij += weights[q] * si[q] * sj[q];
    iii += weights[q] * si[q] * si[q];
    ijj += weights[q] * sj[q] * sj[q];
  }
  return iij / std::sqrt(iii * ijj);
}

}  // namespace gfangular
