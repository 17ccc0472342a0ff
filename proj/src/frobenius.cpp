#include "gfangular/frobenius.hpp"

#include <cmath>
#include <stdexcept>

namespace gfangular {

double numeric_A(int j) {
  if (j < 2) return 0.0;
  return (j % 2 == 0) ? -2.0 : 0.0;
}

double numeric_B(int j, const QVector& q) {
  if (j < 2) return 0.0;
  if (j == 2) return q.q0 / 4.0;
  if (j == 3) return q.q1 / 4.0;
  if (j % 2 == 0) {
    double b = (j / 2) * q.q0 + ((j - 2) / 2) * q.q2;
    if (j >= 6) b += ((j - 4) / 2) * q.q4;
    return b / 4.0;
  }
  double b = ((j - 1) / 2) * q.q1;
  if (j >= 5) b += ((j - 3) / 2) * q.q3;
  return b / 4.0;
}

SeriesSolution frobenius_coeffs(const QVector& q, int beta, int N) {
  if (beta != 0 && beta != 1)
    throw std::invalid_argument("frobenius_coeffs: beta must be 0 or 1");
  if (N < 0) throw std::invalid_argument("frobenius_coeffs: N < 0");
  SeriesSolution s;
  s.beta = beta;
  s.qvec = q;
  s.coeffs.reserve(N + 1);
  s.coeffs.push_back(1.0);
  for (int n = 1; n <= N; ++n) {
    if (beta == 0 && n == 1) {
      s.coeffs.push_back(0.0);  // 0/0 limit, D_1 = 0
      continue;
    }
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
      sum += ((beta + k) * numeric_A(n - k) + numeric_B(n - k, q)) * s.coeffs[k];
    s.coeffs.push_back(-sum / (double(beta + n) * (beta + n - 1)));
  }
  return s;
}

SeriesSolution frobenius_adaptive(const QVector& q, int beta, double r_max) {
  constexpr int kCap = 400;
  SeriesSolution s = frobenius_coeffs(q, beta, 40);
  while (s.truncation() < kCap) {
    int N = s.truncation();
    // require the last few terms all below threshold (parity gaps)
    bool small = true;
    for (int j = N - 3; j <= N; ++j)
      small = small && std::abs(s.coeffs[j]) * std::pow(r_max, j) < 1e-14;
    if (small) break;
    s = frobenius_coeffs(q, beta, std::min(kCap, N + 40));
  }
  return s;
}

SeriesValue eval_series(const SeriesSolution& s, double z) {
  if (std::abs(z) > kSeriesEvalBound)
    throw std::domain_error("eval_series: |z| > 0.9");
  double acc = 0.0;
  for (int n = s.truncation(); n >= 0; --n) acc = acc * z + s.coeffs[n];
  SeriesValue v;
  v.value = (s.beta == 1) ? z * acc : acc;
  int N = s.truncation();
  v.tail_estimate =
      std::abs(s.coeffs[N]) * std::pow(std::abs(z), N) / (1.0 - std::abs(z));
  return v;
}

double eval_series_deriv(const SeriesSolution& s, double z, int order) {
  if (std::abs(z) > kSeriesEvalBound)
    throw std::domain_error("eval_series_deriv: |z| > 0.9");
  if (order < 0 || order > 2)
    throw std::invalid_argument("eval_series_deriv: order must be 0..2");
  // termwise differentiation of z^beta sum c_n z^n; powers p - order
  // descend by one, so Horner applies after dropping vanished terms
  double acc = 0.0;
  for (int n = s.truncation(); n >= 0; --n) {
    int p = n + s.beta;
    if (p < order) break;  // only the lowest terms can vanish
    double factor = 1.0;
    for (int d = 0; d < order; ++d) factor *= (p - d);
    acc = acc * z + factor * s.coeffs[n];
  }
  if (s.beta == 1 && order == 0) acc *= z;
  return acc;
}

Jet series_jet(const SeriesSolution& s, double z) {
  return Jet{eval_series(s, z).value, eval_series_deriv(s, z, 1),
             eval_series_deriv(s, z, 2)};
}

double ode_residual(const QVector& q, const Jet& j, double z) {
  double om = 1.0 - z * z;
  if (om == 0.0) throw std::domain_error("ode_residual: z = +-1");
  double P = -2.0 * z / om;
  double poly = q.q0 + z * (q.q1 + z * (q.q2 + z * (q.q3 + z * q.q4)));
  double Q = 0.25 * poly / (om * om);
  return j.d2f + P * j.df + Q * j.f;
}

double ode_residual(const PhysicalParams& p, const JetFunction& f, double z) {
  return ode_residual(compute_q(p), f(z), z);
}

double general_residual(const GeneralParams& g, const Jet& j, double z) {
  double om = 1.0 - z * z;
  if (om == 0.0) throw std::domain_error("general_residual: z = +-1");
  double pot = -g.a + (-g.A * z * z + 2.0 * g.C * z - g.B) / om;
  return om * j.d2f - 2.0 * z * j.df + pot * j.f;
}

double wronskian(const SeriesSolution& s1, const SeriesSolution& s2, double z) {
  double f1 = eval_series(s1, z).value;
  double f2 = eval_series(s2, z).value;
  double d1 = eval_series_deriv(s1, z, 1);
  double d2 = eval_series_deriv(s2, z, 1);
  return f1 * d2 - d1 * f2;
}

}  // namespace gfangular
