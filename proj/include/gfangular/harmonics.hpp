#pragma once

#include <complex>
#include <vector>

#include "gfangular/core_params.hpp"
#include "gfangular/special.hpp"

namespace gfangular {

using Complex = std::complex<double>;

// Monopole spherical harmonic Z(phi,theta) = e^{i alpha_exp phi} u(cos theta),
// with u either the hypergeometric solution or the quantized Jacobi one.
struct Harmonic {
  double a0 = 0.0;
  double C = 0.0;
  double alpha_exp = 0.0;
  double beta_exp = 0.0;
  double a = 0.0;  // eigenvalue parameter, L^2 Z = -a Z
  bool quantized = false;
  int N = 0;              // Jacobi degree when quantized
  HypergeoParams hyper;   // otherwise
  GeneralParams general;  // the underlying A=0 equation

  static Harmonic from_general(const GeneralParams& g);
  static Harmonic from_quantized(double B, double C, int N);
};

// Z at a point; theta must lie in (0, pi) when an exponent is negative.
Complex eval_Z(const Harmonic& h, double phi, double theta);

// Uniform interior grid: theta_i = theta_min + i*h_theta (i = 0..n_theta-1,
// with theta_min = h_theta and theta_max < pi), phi_j = j*h_phi periodic.
struct AngularGrid {
  int n_theta = 0, n_phi = 0;
  double h_theta = 0.0, h_phi = 0.0;
  double theta_min = 0.0;
  std::vector<Complex> data;  // row-major, [i*n_phi + j]

  static AngularGrid make(double h);
  double theta(int i) const { return theta_min + i * h_theta; }
  double phi(int j) const { return j * h_phi; }
  Complex& at(int i, int j) { return data[std::size_t(i) * n_phi + j]; }
  Complex at(int i, int j) const { return data[std::size_t(i) * n_phi + j]; }

  template <class F>
  void fill(F&& f) {
    for (int i = 0; i < n_theta; ++i)
      for (int j = 0; j < n_phi; ++j) at(i, j) = f(theta(i), phi(j));
  }
};

// L_z = -i d/dphi - a0, centered periodic differences.
AngularGrid apply_Lz(const AngularGrid& g, double a0);

// L_z applied analytically to a separable harmonic: (alpha_exp - a0) Z
// = -(C/a0) Z.
Complex Lz_eigenvalue(const Harmonic& h);

// Closed-form L^2 stencil (one-sided differences on the two boundary
// theta rows; exclude them from comparisons).
AngularGrid apply_L2_closed(const AngularGrid& g, double a0);

// L_x^2 + L_y^2 + L_z^2 with each component applied twice by finite
// differences.
AngularGrid apply_L2_composed(const AngularGrid& g, double a0);

// Max-norm of the difference over the band theta in [band, pi - band].
double grid_band_maxdiff(const AngularGrid& x, const AngularGrid& y,
                         double band);
double grid_band_maxnorm(const AngularGrid& x, double band);

struct EigenRelationReport {
  double lz_residual = 0.0;  // analytic, ~machine epsilon
  double l2_residual = 0.0;  // relative, O(h^2)
  double h = 0.0;
};

// Residuals of L^2 Z = -a Z (finite difference) and L_z Z = -(C/a0) Z
// (analytic) on the interior band.
EigenRelationReport check_eigen_relations(const Harmonic& h, double grid_h,
                                          double band = 0.35);

}  // namespace gfangular
