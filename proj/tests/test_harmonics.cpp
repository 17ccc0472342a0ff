#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gfangular/harmonics.hpp"

using namespace gfangular;

namespace {

constexpr double kPi = std::numbers::pi;

// smooth periodic test function with a few phi modes
AngularGrid smooth_grid(double h, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  std::array<double, 5> cr{}, ci{};
  for (auto& c : cr) c = real(rng);
  for (auto& c : ci) c = real(rng);
  AngularGrid g = AngularGrid::make(h);
  g.fill([&](double th, double ph) {
    Complex v = 0.0;
    for (int k = -2; k <= 2; ++k) {
      double amp = cr[k + 2];
      double s = std::pow(std::sin(th), std::abs(k));
      v += Complex(amp, ci[k + 2]) * s * (1.0 + 0.3 * std::cos(th)) *
           std::exp(Complex(0, k * ph));
    }
    return v;
  });
  return g;
}

}  // namespace

TEST_CASE("eval_Z classical and quantized cases") {
  // a0 = C = 0, N = 1: Z = cos(theta) up to constant, no phi dependence
  Harmonic h = Harmonic::from_quantized(0.0, 0.0, 1);
  Complex z1 = eval_Z(h, 0.3, 1.1);
  Complex z2 = eval_Z(h, 2.9, 1.1);
  CHECK(std::abs(z1 - z2) < 1e-14);
  CHECK(z1.real() / std::cos(1.1) ==
        doctest::Approx(eval_Z(h, 0.0, 0.6).real() / std::cos(0.6))
            .epsilon(1e-12));

  // a0 = 1, C = 1, N = 0 at theta = pi/2: prefactor 1*1, P0 = 1
  Harmonic hq = Harmonic::from_quantized(2.0, 1.0, 0);
  CHECK(eval_Z(hq, 0.0, kPi / 2).real() == doctest::Approx(1.0));
  CHECK(eval_Z(hq, 0.0, kPi / 2).imag() == doctest::Approx(0.0));

  // phase under phi -> phi + 2 pi
  Harmonic hg = Harmonic::from_general({-6, 0, 2, 1});
  Complex a = eval_Z(hg, 0.4, 1.0);
  Complex b = eval_Z(hg, 0.4 + 2 * kPi, 1.0);
  CHECK(std::abs(a) == doctest::Approx(std::abs(b)).epsilon(1e-13));
  Complex phase = std::exp(Complex(0, hg.alpha_exp * 2 * kPi));
  CHECK(std::abs(b - a * phase) < 1e-12);

  CHECK_THROWS_AS(eval_Z(h, 0.0, 0.0), std::domain_error);
}

TEST_CASE("apply_Lz") {
  // plane wave e^{i phi}: L_z f = (1 - a0) f
  double a0 = 0.7;
  AngularGrid g = AngularGrid::make(kPi / 64);
  g.fill([](double, double ph) { return std::exp(Complex(0, ph)); });
  AngularGrid r = apply_Lz(g, a0);
  double err = 0.0;
  for (int i = 0; i < g.n_theta; ++i)
    for (int j = 0; j < g.n_phi; ++j)
      err = std::max(err, std::abs(r.at(i, j) - (1.0 - a0) * g.at(i, j)));
  CHECK(err < 1e-3);  // O(h^2) for the plane wave

  // analytic eigenvalue: (alpha_exp - a0) = -C/a0
  Harmonic h = Harmonic::from_general({-6, 0, 2, 1});
  CHECK(Lz_eigenvalue(h).real() == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("apply_L2_closed classical eigenfunctions") {
  AngularGrid g = AngularGrid::make(kPi / 128);
  g.fill([](double th, double) { return std::cos(th); });  // Y_10
  AngularGrid r = apply_L2_closed(g, 0.0);
  AngularGrid expect = g;
  for (auto& v : expect.data) v *= 2.0;
  CHECK(grid_band_maxdiff(r, expect, 0.3) < 1e-3);

  // constant function: L^2 f = 0 at a0 = 0
  AngularGrid c = AngularGrid::make(kPi / 128);
  c.fill([](double, double) { return 1.0; });
  AngularGrid rc = apply_L2_closed(c, 0.0);
  CHECK(grid_band_maxnorm(rc, 0.3) < 1e-8);

  // constant function at a0 != 0: closed form gives 2 a0^2/(1+cos)
  AngularGrid rc1 = apply_L2_closed(c, 1.0);
  AngularGrid expect1 = c;
  for (int i = 0; i < c.n_theta; ++i)
    for (int j = 0; j < c.n_phi; ++j)
      expect1.at(i, j) = 2.0 / (1.0 + std::cos(c.theta(i)));
  CHECK(grid_band_maxdiff(rc1, expect1, 0.3) < 1e-8);
}

TEST_CASE("composed equals closed at O(h^2)") {
  for (double a0 : {0.0, 1.0}) {
    double prev = -1.0;
    for (double h : {kPi / 32, kPi / 64, kPi / 128}) {
      AngularGrid g = smooth_grid(h, 99);
      AngularGrid composed = apply_L2_composed(g, a0);
      AngularGrid closed = apply_L2_closed(g, a0);
      double d = grid_band_maxdiff(composed, closed, 0.35);
      if (prev > 0.0) {
        double order = std::log2(prev / d);
        CHECK(order > 1.5);
        CHECK(order < 2.5);
      }
      prev = d;
    }
  }
}

TEST_CASE("composed matches closed for the constant function") {
  AngularGrid c = AngularGrid::make(kPi / 128);
  c.fill([](double, double) { return 1.0; });
  for (double a0 : {0.5, 1.0}) {
    AngularGrid composed = apply_L2_composed(c, a0);
    AngularGrid closed = apply_L2_closed(c, a0);
    CHECK(grid_band_maxdiff(composed, closed, 0.35) < 1e-3);
  }
}

TEST_CASE("eigen relations") {
  // classical l = 1, a0 = 0
  Harmonic h = Harmonic::from_quantized(0.0, 0.0, 1);
  EigenRelationReport rep = check_eigen_relations(h, kPi / 128);
  CHECK(rep.lz_residual < 1e-14);
  CHECK(rep.l2_residual < 1e-3);

  // quantized a0 = 1, C = 1, N = 0
  Harmonic hq = Harmonic::from_quantized(2.0, 1.0, 0);
  EigenRelationReport repq = check_eigen_relations(hq, kPi / 128);
  CHECK(repq.lz_residual < 1e-14);
  CHECK(repq.l2_residual < 1e-3);

  // refinement: residual ratio ~ 4
  EigenRelationReport coarse = check_eigen_relations(hq, kPi / 64);
  double ratio = coarse.l2_residual / repq.l2_residual;
  CHECK(ratio > 2.5);
  CHECK(ratio < 6.0);
}
