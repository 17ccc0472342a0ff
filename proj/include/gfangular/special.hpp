#pragma once

#include <array>

#include "gfangular/core_params.hpp"
#include "gfangular/frobenius.hpp"

namespace gfangular {

// Linear polynomial c0 + c1 z.
struct Linear {
  double c0 = 0.0, c1 = 0.0;
  double operator()(double z) const { return c0 + c1 * z; }
};

// Data of the Nikiforov-Uvarov reduction of the A = 0 general equation,
// with sigma = 1 - z^2 and tau_tilde = -2z fixed.
struct NUReduction {
  double a0 = 0.0;
  Linear p;          // p(z) = a0 z - C/a0
  Linear pi0;        // pi0 = (sigma' - tau_tilde)/2 - p = -p here
  Linear tau;        // tau = tau_tilde + 2 pi0
  double lambda_canon = 0.0;  // kappa + pi0'
  double alpha_exp = 0.0;     // a0 - C/a0
  double beta_exp = 0.0;      // a0 + C/a0

  // Phi(z) = (1-z)^(alpha_exp/2) (1+z)^(beta_exp/2)
  double phi(double z) const;
  double phi_log_deriv(double z) const;  // Phi'/Phi = pi0/sigma
};

// Parameters of the Gauss equation obtained from the canonical form.
struct HypergeoParams {
  double a_bar = 0.0, b_bar = 0.0, c_bar = 0.0;
};

struct NUResult {
  NUReduction reduction;
  HypergeoParams hyper;
};

// Requires g.A = 0, B^2 >= 4 C^2 and 1 - 4a >= 0.
NUResult nu_reduce(const GeneralParams& g);

// Gauss hypergeometric series F(a,b;c;z), |z| <= 0.95; terminates
// exactly when a or b is a nonpositive integer.
double gauss_2f1(double a, double b, double c, double z);

// Jacobi polynomial P_N^(alpha,beta)(z) by the three-term recurrence.
double jacobi_poly(int N, double alpha_exp, double beta_exp, double z);

// u(z) = Phi(z) F(a_bar, b_bar; c_bar; (z+1)/2), a solution of the
// A = 0 general equation on |z| < 1.
double solve_A0(const GeneralParams& g, double z);
Jet solve_A0_jet(const GeneralParams& g, double z);

// Eigenvalue parameter from the quantization condition:
// a = -(a0 + N)(a0 + N + 1).
double quantization_a(double a0, int N);

// The generic NU form lambda_N = -N tau' - N(N-1) sigma''/2 for this
// equation; equals lambda_canon at a = quantization_a(a0, N).
double quantization_lambda(double a0, int N);

// u_N(z) = Phi(z) P_N^(alpha_exp, beta_exp)(z); g.a must satisfy the
// quantization condition to 1e-10.
double quantized_solution(int N, const GeneralParams& g, double z);
Jet quantized_solution_jet(int N, const GeneralParams& g, double z);

}  // namespace gfangular
