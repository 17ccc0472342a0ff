#include "gfangular/core_params.hpp"

#include <cmath>
#include <stdexcept>

namespace gfangular {

QVector compute_q(const PhysicalParams& p) {
  const double ak = p.alpha * p.k;
  const double a2k2 = ak * ak;
  const double a2mu2 = p.alpha * p.alpha * p.mu_tilde * p.mu_tilde;
  const double m2n2 = double(p.m) * p.m + double(p.n) * p.n;
  QVector q;
  q.q0 = -4.0 * (a2k2 + p.lambda + m2n2);
  q.q1 = 8.0 * p.n * (p.m - ak);
  q.q2 = 4.0 * (2.0 * a2k2 - a2mu2 + p.lambda);
  q.q3 = 8.0 * p.n * ak;
  q.q4 = -4.0 * (a2k2 - a2mu2);
  return q;
}

QVector general_to_q(const GeneralParams& g) {
  QVector q;
  q.q0 = -4.0 * (g.a + g.B);
  q.q1 = 8.0 * g.C;
  q.q2 = 4.0 * (g.a - g.A);
  q.q3 = 0.0;
  q.q4 = 0.0;
  return q;
}

GeneralParams gf_to_general(const PhysicalParams& p) {
  if (p.alpha != 0.0)
    throw std::domain_error("gf_to_general: mapping requires alpha = 0");
  GeneralParams g;
  g.a = p.lambda;
  g.A = 0.0;
  g.B = double(p.m) * p.m + double(p.n) * p.n;
  g.C = double(p.m) * p.n;
  return g;
}

GeneralParams reduce_general(const GeneralParams& g) {
  return GeneralParams{g.a - g.A, 0.0, g.B + g.A, g.C};
}

double compute_a0(double B, double C) {
  const double disc = B * B - 4.0 * C * C;
  if (disc < 0.0)
    throw std::domain_error("compute_a0: B^2 < 4 C^2, a0 is complex");
  if (C == 0.0) {
    if (B < 0.0) throw std::domain_error("compute_a0: C = 0 requires B >= 0");
    return std::sqrt(B);
  }
  return std::sqrt(0.5 * (B - std::sqrt(disc)));
}

std::array<double, 2> exponents(double a0, double C) {
  if (a0 == 0.0) {
    if (C != 0.0)
      throw std::domain_error("exponents: a0 = 0 with C != 0");
    return {0.0, 0.0};
  }
  return {a0 - C / a0, a0 + C / a0};
}

}  // namespace gfangular
