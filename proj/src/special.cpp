#include "gfangular/special.hpp"

#include <cmath>
#include <stdexcept>

namespace gfangular {

namespace {

// nonpositive integer within rounding tolerance
bool nonpos_int(double x, long& n) {
  double r = std::round(x);
  if (r > 0.0 || std::abs(x - r) > 1e-12) return false;
  n = long(-r);
  return true;
}

}  // namespace

double NUReduction::phi(double z) const {
  return std::pow(1.0 - z, 0.5 * alpha_exp) * std::pow(1.0 + z, 0.5 * beta_exp);
}

double NUReduction::phi_log_deriv(double z) const {
  return -0.5 * alpha_exp / (1.0 - z) + 0.5 * beta_exp / (1.0 + z);
}

NUResult nu_reduce(const GeneralParams& g) {
  if (g.A != 0.0)
    throw std::invalid_argument("nu_reduce: requires A = 0 (reduce_general first)");
  if (1.0 - 4.0 * g.a < 0.0)
    throw std::domain_error("nu_reduce: 1 - 4a < 0, complex parameters");

  NUResult r;
  auto& nu = r.reduction;
  nu.a0 = compute_a0(g.B, g.C);  // throws if B^2 < 4C^2
  const double c_over_a0 = (nu.a0 == 0.0) ? 0.0 : g.C / nu.a0;
  nu.p = Linear{-c_over_a0, nu.a0};
  nu.pi0 = Linear{c_over_a0, -nu.a0};  // (sigma'-tau_tilde)/2 = 0 here
  nu.tau = Linear{2.0 * c_over_a0, -2.0 - 2.0 * nu.a0};
  // kappa = -a - a0^2, lambda = kappa + pi0'
  nu.lambda_canon = -g.a - nu.a0 * nu.a0 - nu.a0;
  nu.alpha_exp = nu.a0 - c_over_a0;
  nu.beta_exp = nu.a0 + c_over_a0;

  const double s = std::sqrt(1.0 - 4.0 * g.a);
  r.hyper.a_bar = 0.5 * (1.0 + 2.0 * nu.a0 + s);
  r.hyper.b_bar = 0.5 * (1.0 + 2.0 * nu.a0 - s);
  r.hyper.c_bar = 1.0 + nu.a0 + c_over_a0;
  return r;
}

double gauss_2f1(double a, double b, double c, double z) {
  if (std::abs(z) > 0.95)
    throw std::domain_error("gauss_2f1: |z| > 0.95");
  long na = 0, nb = 0, nc = 0;
  long kmax = -1;  // termination index, -1 = none
  if (nonpos_int(a, na)) kmax = na;
  if (nonpos_int(b, nb) && (kmax < 0 || nb < kmax)) kmax = nb;
  if (nonpos_int(c, nc) && (kmax < 0 || nc < kmax))
    throw std::domain_error("gauss_2f1: c is a nonpositive integer");

  double sum = 1.0, term = 1.0;
  const long cap = (kmax >= 0) ? kmax : 100000;
  for (long k = 0; k < cap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (kmax < 0 && std::abs(term) < 1e-16 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

double jacobi_poly(int N, double al, double be, double z) {
  if (N < 0) throw std::invalid_argument("jacobi_poly: N < 0");
  if (N == 0) return 1.0;
  double p_prev = 1.0;
  double p_curr = (al + 1.0) + (al + be + 2.0) * (z - 1.0) / 2.0;
  for (int n = 1; n < N; ++n) {
    double nn = n;
    double c1 = 2.0 * (nn + 1.0) * (nn + al + be + 1.0) * (2.0 * nn + al + be);
    double c2 = (2.0 * nn + al + be + 1.0) *
                ((2.0 * nn + al + be) * (2.0 * nn + al + be + 2.0) * z +
                 al * al - be * be);
    double c3 = 2.0 * (nn + al) * (nn + be) * (2.0 * nn + al + be + 2.0);
    double p_next = (c2 * p_curr - c3 * p_prev) / c1;
    p_prev = p_curr;
    p_curr = p_next;
  }
  return p_curr;
}

namespace {

// u = Phi * y with analytic derivatives of both factors
Jet assemble(const NUReduction& nu, double z, double y, double dy, double d2y) {
  const double e1 = 0.5 * nu.alpha_exp, e2 = 0.5 * nu.beta_exp;
  const double phi = nu.phi(z);
  const double L = -e1 / (1.0 - z) + e2 / (1.0 + z);  // Phi'/Phi
  const double dL = -e1 / ((1.0 - z) * (1.0 - z)) - e2 / ((1.0 + z) * (1.0 + z));
  const double dphi = phi * L;
  const double d2phi = phi * (L * L + dL);
  Jet j;
  j.f = phi * y;
  j.df = dphi * y + phi * dy;
  j.d2f = d2phi * y + 2.0 * dphi * dy + phi * d2y;
  return j;
}

}  // namespace

Jet solve_A0_jet(const GeneralParams& g, double z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("solve_A0: |z| >= 1");
  NUResult r = nu_reduce(g);
  const auto& h = r.hyper;
  const double w = 0.5 * (z + 1.0);
  const double y = gauss_2f1(h.a_bar, h.b_bar, h.c_bar, w);
  const double dy = 0.5 * h.a_bar * h.b_bar / h.c_bar *
                    gauss_2f1(h.a_bar + 1, h.b_bar + 1, h.c_bar + 1, w);
  const double d2y = 0.25 * h.a_bar * (h.a_bar + 1) * h.b_bar * (h.b_bar + 1) /
                     (h.c_bar * (h.c_bar + 1)) *
                     gauss_2f1(h.a_bar + 2, h.b_bar + 2, h.c_bar + 2, w);
  return assemble(r.reduction, z, y, dy, d2y);
}

double solve_A0(const GeneralParams& g, double z) {
  return solve_A0_jet(g, z).f;
}

double quantization_a(double a0, int N) {
  return -(a0 + N) * (a0 + N + 1.0);
}

double quantization_lambda(double a0, int N) {
  // -N tau' - N(N-1) sigma''/2 with tau' = -2-2a0, sigma'' = -2
  return N * (2.0 + 2.0 * a0) + double(N) * (N - 1);
}

Jet quantized_solution_jet(int N, const GeneralParams& g, double z) {
  if (g.A != 0.0)
    throw std::invalid_argument("quantized_solution: requires A = 0");
  const double a0 = compute_a0(g.B, g.C);
  if (std::abs(g.a - quantization_a(a0, N)) > 1e-10)
    throw std::invalid_argument(
        "quantized_solution: a does not satisfy -a = (a0+N)(a0+N+1)");
  NUResult r = nu_reduce(g);
  const auto& nu = r.reduction;
  const double al = nu.alpha_exp, be = nu.beta_exp;
  const double y = jacobi_poly(N, al, be, z);
  const double dy =
      (N >= 1) ? 0.5 * (N + al + be + 1) * jacobi_poly(N - 1, al + 1, be + 1, z)
               : 0.0;
  const double d2y =
      (N >= 2) ? 0.25 * (N + al + be + 1) * (N + al + be + 2) *
                     jacobi_poly(N - 2, al + 2, be + 2, z)
               : 0.0;
  return assemble(nu, z, y, dy, d2y);
}

double quantized_solution(int N, const GeneralParams& g, double z) {
  return quantized_solution_jet(N, g, z).f;
}

}  // namespace gfangular
