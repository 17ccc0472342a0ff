#pragma once

#include <array>

namespace gfangular {

// Dimensionless parameter set of the angular equation for a charged
// massive scalar on a Kerr background.  alpha = a/M, k = omega*M,
// mu_tilde = mu*M; m is the azimuthal number, n the Chern number and
// lambda the separation-constant candidate.
struct PhysicalParams {
  double alpha = 0.0;
  double k = 0.0;
  double mu_tilde = 0.0;
  int m = 0;
  int n = 0;
  double lambda = 0.0;
};

// Parameters (a, A, B, C) of the general spherical-harmonic equation
//   (1-z^2)u'' - 2z u' + [-a + (-A z^2 + 2Cz - B)/(1-z^2)] u = 0.
struct GeneralParams {
  double a = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

// The five polynomial coefficients Q_0..Q_4 of the Bocher form
//   Q(z) = (Q_0 + Q_1 z + Q_2 z^2 + Q_3 z^3 + Q_4 z^4) / (4 (1-z^2)^2).
struct QVector {
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0;

  std::array<double, 5> as_array() const { return {q0, q1, q2, q3, q4}; }
};

// Q-coefficients of the physical equation.
QVector compute_q(const PhysicalParams& p);

// Q-coefficients of the general equation (used for the alpha=0
// cross-check; q3 = q4 = 0 always).
QVector general_to_q(const GeneralParams& g);

// Reduction of the physical equation at alpha = 0 to the general one:
// a = lambda, A = 0, B = m^2 + n^2, C = m n.  Throws std::domain_error
// if alpha != 0.
GeneralParams gf_to_general(const PhysicalParams& p);

// Eliminates the A z^2 term: (a, A, B, C) -> (a - A, 0, B + A, C).
GeneralParams reduce_general(const GeneralParams& g);

// The auxiliary root a0 >= 0 of a0^4 - B a0^2 + C^2 = 0.  For C != 0 the
// branch a0^2 = (B - sqrt(B^2 - 4C^2))/2 is taken; for C = 0 the other
// root a0 = sqrt(B), which keeps C/a0 finite.  Throws std::domain_error
// when B^2 < 4 C^2 (or C = 0 with B < 0).
double compute_a0(double B, double C);

// Endpoint exponents (a0 - C/a0, a0 + C/a0); (0, 0) when a0 = C = 0.
// Throws std::domain_error when a0 = 0 but C != 0.
std::array<double, 2> exponents(double a0, double C);

}  // namespace gfangular
