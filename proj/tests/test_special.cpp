#include "doctest.h"

#include <cmath>
#include <random>

#include "gfangular/special.hpp"
#include "gfangular/sturm.hpp"

using namespace gfangular;

TEST_CASE("nu_reduce reference cases") {
  // a = -2, B = C = 0: classical l = 1
  NUResult r = nu_reduce({-2, 0, 0, 0});
  CHECK(r.reduction.a0 == 0.0);
  CHECK(r.reduction.tau.c0 == doctest::Approx(0.0));
  CHECK(r.reduction.tau.c1 == doctest::Approx(-2.0));
  CHECK(r.reduction.lambda_canon == doctest::Approx(2.0));
  CHECK(r.hyper.a_bar == doctest::Approx(2.0));
  CHECK(r.hyper.b_bar == doctest::Approx(-1.0));
  CHECK(r.hyper.c_bar == doctest::Approx(1.0));

  // a = -6, B = 2, C = 1
  r = nu_reduce({-6, 0, 2, 1});
  CHECK(r.reduction.a0 == doctest::Approx(1.0));
  CHECK(r.reduction.tau.c1 == doctest::Approx(-4.0));
  CHECK(r.reduction.tau.c0 == doctest::Approx(2.0));
  CHECK(r.reduction.lambda_canon == doctest::Approx(4.0));
  CHECK(r.reduction.alpha_exp == doctest::Approx(0.0));
  CHECK(r.reduction.beta_exp == doctest::Approx(2.0));

  CHECK_THROWS_AS(nu_reduce({-2, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(nu_reduce({1.0, 0, 1, 1}), std::domain_error);  // 1-4a < 0
  CHECK_THROWS_AS(nu_reduce({-2, 0, 1, 2}), std::domain_error);   // B^2 < 4C^2
}

TEST_CASE("Phi contract: Phi'/Phi = pi0/sigma") {
  NUResult r = nu_reduce({-6, 0, 2, 1});
  for (double z : {-0.6, 0.0, 0.3, 0.8}) {
    double lhs = r.reduction.phi_log_deriv(z);
    double rhs = r.reduction.pi0(z) / (1.0 - z * z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("hypergeometric parameter identities") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> real(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    double B = 8.0 * real(rng);
    double C = (real(rng) - 0.5) * B;
    double a = -6.0 + 6.25 * real(rng);  // 1 - 4a > 0
    NUResult r = nu_reduce({a, 0, B, C});
    double a0 = r.reduction.a0;
    CHECK(r.hyper.a_bar + r.hyper.b_bar ==
          doctest::Approx(1.0 + 2.0 * a0).epsilon(1e-12));
    CHECK(r.hyper.a_bar * r.hyper.b_bar ==
          doctest::Approx(a0 * a0 + a0 + a).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("gauss_2f1 identities") {
  // F(a, b; b; z) = (1-z)^-a
  CHECK(gauss_2f1(2, 5, 5, 0.3) ==
        doctest::Approx(std::pow(0.7, -2.0)).epsilon(1e-13));
  // F(1, 1; 2; z) = -ln(1-z)/z
  CHECK(gauss_2f1(1, 1, 2, 0.5) ==
        doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-13));
  // terminating at z = 0
  CHECK(gauss_2f1(-3, 2.5, 1.5, 0.0) == 1.0);
  CHECK_THROWS_AS(gauss_2f1(1, 1, 2, 0.96), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(1, 1, 0, 0.5), std::domain_error);
  // terminating series with nonpositive c beyond the truncation is fine
  CHECK(gauss_2f1(-1, 1, -2, 0.5) == doctest::Approx(1.25));
}

TEST_CASE("jacobi_poly low orders") {
  CHECK(jacobi_poly(0, 0.7, -0.3, 0.2) == 1.0);
  CHECK(jacobi_poly(1, 0, 0, 0.4) == doctest::Approx(0.4));          // P1
  CHECK(jacobi_poly(2, 0, 0, 0.4) == doctest::Approx(-0.26));        // P2
  CHECK(jacobi_poly(1, 1, 2, 0.3) ==
        doctest::Approx((1.0 + 1.0) + (1.0 + 2.0 + 2.0) * (0.3 - 1.0) / 2.0));
}

TEST_CASE("jacobi orthogonality by quadrature") {
  auto [gx, gw] = gauss_legendre(40);
  for (int al : {0, 1, 2})
    for (int be : {0, 1, 2})
      for (int M = 0; M <= 4; ++M)
        for (int N = M + 1; N <= 4; ++N) {
          double integral = 0.0;
          for (std::size_t i = 0; i < gx.size(); ++i) {
            double w = std::pow(1.0 - gx[i], al) * std::pow(1.0 + gx[i], be);
            integral += gw[i] * w * jacobi_poly(M, al, be, gx[i]) *
                        jacobi_poly(N, al, be, gx[i]);
          }
          CHECK(std::abs(integral) < 1e-8);
        }
}

TEST_CASE("solve_A0 Legendre case") {
  // u(z) = F(2,-1;1;(z+1)/2) = -z
  for (double z : {-0.5, 0.0, 0.7})
    CHECK(solve_A0({-2, 0, 0, 0}, z) == doctest::Approx(-z).epsilon(1e-13));
}

TEST_CASE("solve_A0 satisfies the ODE") {
  GeneralParams g{-6, 0, 2, 1};
  for (double z : {-0.5, 0.0, 0.5}) {
    Jet j = solve_A0_jet(g, z);
    CHECK(std::abs(general_residual(g, j, z)) < 1e-8);
  }
}

TEST_CASE("solve_A0 boundary decay for beta_exp > 0") {
  GeneralParams g{-6, 0, 2, 1};  // exponents (0, 2)
  double u = solve_A0(g, -0.999);
  CHECK(std::abs(u) < 1e-2);
}

TEST_CASE("quantization") {
  CHECK(quantization_a(0, 1) == doctest::Approx(-2.0));
  CHECK(quantization_a(0, 0) == 0.0);
  CHECK(quantization_a(1, 1) == doctest::Approx(-6.0));
  // generic NU lambda_N equals lambda_canon at the quantized a
  for (double a0 : {0.0, 0.5, 1.0, 2.0})
    for (int N = 0; N <= 5; ++N) {
      double a = quantization_a(a0, N);
      double lam_canon = -a - a0 * a0 - a0;
      CHECK(quantization_lambda(a0, N) ==
            doctest::Approx(lam_canon).epsilon(1e-13));
    }
}

TEST_CASE("quantized_solution") {
  // B = C = 0, a = -2, N = 1: Legendre P1
  CHECK(quantized_solution(1, {-2, 0, 0, 0}, 0.4) == doctest::Approx(0.4));
  // B = 2, C = 1, N = 0: u0 = 1 + z
  CHECK(quantized_solution(0, {-2, 0, 2, 1}, 0.3) ==
        doctest::Approx(1.3).epsilon(1e-13));
  // residual check
  GeneralParams g{-6, 0, 2, 1};
  Jet j = quantized_solution_jet(1, g, 0.3);
  CHECK(std::abs(general_residual(g, j, 0.3)) < 1e-10);
  // inconsistent a rejected
  CHECK_THROWS_AS(quantized_solution(1, {-5.9, 0, 2, 1}, 0.3),
                  std::invalid_argument);
}

TEST_CASE("terminating hypergeometric agrees with Jacobi form up to a constant") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> real(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    double B = 6.0 * real(rng);
    double C = (real(rng) - 0.5) * B;
    double a0 = compute_a0(B, C);
    int N = int(3.0 * real(rng));
    GeneralParams g{quantization_a(a0, N), 0, B, C};
    if (1.0 - 4.0 * g.a < 0.0) continue;
    // ratio constant across sample points
    double ratio = 0.0;
    bool have = false;
    for (int s = 0; s < 10; ++s) {
      double z = -0.85 + 1.7 * s / 9.0;
      double uq = quantized_solution(N, g, z);
      double uh = solve_A0(g, z);
      if (std::abs(uq) < 1e-9) continue;
      double r = uh / uq;
      if (!have) {
        ratio = r;
        have = true;
      } else {
        CHECK(r == doctest::Approx(ratio).epsilon(1e-7));
      }
    }
    CHECK(have);
  }
}
