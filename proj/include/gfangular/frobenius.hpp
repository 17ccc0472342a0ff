#pragma once

#include <functional>
#include <vector>

#include "gfangular/core_params.hpp"

namespace gfangular {

// Numeric series coefficients of the Bocher form at z0 = 0,
// specialized at a QVector.
double numeric_A(int j);
double numeric_B(int j, const QVector& q);

// Truncated Frobenius solution z^beta sum_{n<=N} C_n z^n with C_0 = 1.
struct SeriesSolution {
  int beta = 1;  // indicial root, 0 or 1
  std::vector<double> coeffs;
  QVector qvec;

  int truncation() const { return int(coeffs.size()) - 1; }
};

// Coefficients from the recurrence; beta = 0 applies the C_1(0) = 0
// convention.
SeriesSolution frobenius_coeffs(const QVector& q, int beta, int N);

// N chosen adaptively so |C_N| r_max^N < 1e-14 (cap 400).
SeriesSolution frobenius_adaptive(const QVector& q, int beta,
                                  double r_max = 0.9);

struct SeriesValue {
  double value = 0.0;
  double tail_estimate = 0.0;  // |C_N z^N| / (1 - |z|)
};

// Policy bound for series evaluation, inside the unit radius of
// convergence.
inline constexpr double kSeriesEvalBound = 0.9;

SeriesValue eval_series(const SeriesSolution& s, double z);
// Termwise first/second derivatives of the stored polynomial.
double eval_series_deriv(const SeriesSolution& s, double z, int order);

// Value and first two derivatives of a candidate solution at a point.
struct Jet {
  double f = 0.0, df = 0.0, d2f = 0.0;
};
using JetFunction = std::function<Jet(double)>;

Jet series_jet(const SeriesSolution& s, double z);

// Bocher residual S'' + P S' + Q S at z, |z| < 1, with P, Q from p.
double ode_residual(const PhysicalParams& p, const JetFunction& f, double z);
double ode_residual(const QVector& q, const Jet& j, double z);

// Residual of the general equation (A = 0 form):
// (1-z^2)u'' - 2z u' + [-a + (2Cz - B)/(1-z^2)] u.
double general_residual(const GeneralParams& g, const Jet& j, double z);

// s1 s2' - s1' s2; (1-z^2) * W is constant in z (Abel).
double wronskian(const SeriesSolution& s1, const SeriesSolution& s2, double z);

}  // namespace gfangular
