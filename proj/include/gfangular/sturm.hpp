#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gfangular/core_params.hpp"
#include "gfangular/frobenius.hpp"

namespace gfangular {

// Potential of the Sturm-Liouville form (U S')' + (V + lambda +
// mu~^2 alpha^2) S = 0 with U = x^2 - 1.
double sl_V(const PhysicalParams& p, double x);

// Left side of the SL equation at x; equals U(x) times the Bocher
// residual of the same function.
double sl_form_check(const PhysicalParams& p, const Jet& f, double x);

// Local indicial exponents of the regular solution:
// rho_+ = |m-n|/2 at x=+1, rho_- = |m+n|/2 at x=-1.
std::pair<double, double> endpoint_exponents(int m, int n);

struct EigenResult {
  int l_index = 0;  // node_count + max(|m|,|n|)
  double lambda = 0.0;
  int node_count = 0;
  double residual = 0.0;  // max SL residual at interior sample points
  std::pair<double, double> bracket{0.0, 0.0};
};

class ShootingSolver {
 public:
  // p.lambda is ignored; lambda is the search variable.
  explicit ShootingSolver(const PhysicalParams& p);

  // Wronskian of the left and right endpoint-regular solutions at x=0;
  // eigenvalues are its roots.
  double matching(double lambda) const;

  // Refines a sign-changing bracket to |M| < 1e-10.  Throws
  // BracketError when the bracket has no sign change.
  EigenResult solve(double lambda_lo, double lambda_hi) const;

  // Samples matching() on a uniform grid, brackets sign changes and
  // refines each.  Results sorted by lambda descending.
  std::vector<EigenResult> scan(double lambda_min, double lambda_max,
                                int count = 200) const;

  // Eigenfunction values at sorted abscissae in (-1, 1), continuous
  // across the matching point (right branch rescaled), unnormalized.
  std::vector<double> eigenfunction_values(double lambda,
                                           const std::vector<double>& xs) const;

  const PhysicalParams& params() const { return p_; }

 private:
  struct EndState {
    double value, deriv;
  };
  // integrate from the given endpoint to x, starting from the local
  // Frobenius expansion
  EndState integrate_from(int side, double lambda, double x_target) const;

  PhysicalParams p_;
};

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gauss-Legendre nodes/weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Quadrature of int_{-1}^{1} S_i S_j dx with both eigenfunctions
// normalized to unit self-integral; composite Gauss-Legendre with
// geometric subdivision toward the endpoints.
double orthogonality_integral(const ShootingSolver& solver, double lambda_i,
                              double lambda_j);

}  // namespace gfangular
