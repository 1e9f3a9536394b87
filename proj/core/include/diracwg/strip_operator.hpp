#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <functional>
#include <vector>

#include "diracwg/curve_geometry.hpp"

namespace diracwg {

/// Tensor grid on the truncated strip [-S, S] x [-1, 1].
/// n_t must be odd (t = 0 is then a node) and both counts >= 3.
struct StripGrid {
  double S = 1.0;
  int n_s = 3;
  int n_t = 3;

  double h_s() const { return 2.0 * S / (n_s - 1); }
  double h_t() const { return 2.0 / (n_t - 1); }
  int nodes() const { return n_s * n_t; }
  double s_of(int i) const { return -S + i * h_s(); }
  double t_of(int j) const { return -1.0 + j * h_t(); }
};

StripGrid make_strip_grid(double S, int n_s, int n_t);

enum class BoundaryModel {
  InfiniteMass,  // u2(., +-1) = -+ u1(., +-1), Dirichlet only at s = +-S
  Dirichlet      // u = 0 on the whole boundary
};

using SparseHermitian = Eigen::SparseMatrix<std::complex<double>>;

/// Sparse Hermitian generalized pair (A, B) for a quadratic form on the
/// strip, with the boundary constraints eliminated by row/column merging.
struct AssembledForms {
  SparseHermitian A;  // stiffness of the (m^2-shifted) form
  SparseHermitian B;  // mass matrix, positive definite
  StripGrid grid;
  BoundaryModel bc = BoundaryModel::InfiniteMass;
  bool mass_shift_applied = true;
  // full dof = 2*(i_s*n_t + i_t) + component
  std::vector<int> dof_map;       // full dof -> free index, -1 if forced zero
  std::vector<double> dof_coeff;  // merge coefficient of the full dof
  std::vector<int> free_owner;    // free index -> representative full dof

  int free_dim() const { return static_cast<int>(A.rows()); }
};

/// Complex 2-spinor sampled on the grid nodes (2 values per node,
/// interleaved).
struct SpinorField {
  StripGrid grid;
  std::vector<std::complex<double>> values;

  static SpinorField from_function(
      const StripGrid& grid,
      const std::function<std::array<std::complex<double>, 2>(double, double)>&
          f);
};

/// Q1 discretization of the quadratic form of the squared strip operator with
/// the m^2 term already subtracted, so eigenvalues approximate mu_n - m^2:
///   int (1-eps t kappa)^-2 |d_s u - i (kappa/2) sigma3 u|^2
/// + eps^-2 int |d_t u|^2
/// + (m/eps) int |u(s,+-1)|^2 ds
/// - int kappa^2/(4 g^2) |u|^2 - (5/4) int (eps t kappa')^2/g^4 |u|^2
/// - (1/2) int eps t kappa''/g^3 |u|^2.
/// Throws DegenerateJacobian if any quadrature point has 1-eps t kappa <= 1/2.
AssembledForms assemble_square_form(const TubeGeometry& geom, double m,
                                    const StripGrid& grid);

/// Dirichlet Laplacian in straightened coordinates on the same grid layout:
///   int g^-2 |d_s u|^2 + eps^-2 int |d_t u|^2 + int V_eps |u|^2
/// with u = 0 on the whole boundary.
AssembledForms assemble_dirichlet_form(const TubeGeometry& geom,
                                       const StripGrid& grid);

/// Rayleigh quotient of the assembled pair at the constrained coefficient
/// vector of the field. Throws ZeroField.
double rayleigh(const AssembledForms& forms, const SpinorField& field);

}  // namespace diracwg
