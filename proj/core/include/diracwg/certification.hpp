#pragma once

#include "diracwg/curve_geometry.hpp"

namespace diracwg {

/// Quantitative bound-state certificate: the curvature integral I_eps and the
/// explicit mass threshold m0 above which the gap holds at least two
/// discrete eigenvalues (a +- pair by spectral symmetry).
struct Certificate {
  double I_epsilon = 0.0;
  double m0_bound = 0.0;  // +inf when the condition fails
  bool condition_holds = false;
  int predicted_discrete_count_at_least = 0;
};

/// I_eps = -int over (-L,L)x(-1,1) of V_eps(s,t) cos^2(pi t / 2).
/// Tensor Gauss-Legendre quadrature with quad_points per axis.
/// Throws UnsupportedProfile for non-compact curvature support.
double compute_I_epsilon(const TubeGeometry& geom, int quad_points = 200);

/// m0 = (1/(2 eps)) * [ I^-2 (4 pi^2 L/(3 eps^2) + 2/L)^2 - 1 ].
/// Throws NonPositiveCertificate if I_eps <= 0.
double m0_bound(const TubeGeometry& geom, double I_eps);

/// Energy of the explicit test function u_eta (plateau cutoff of half-width
/// eta times the first transverse mode): edge, kinetic and potential parts.
struct TestFunctionEnergy {
  double eta = 0.0;
  double q_value = 0.0;
  double edge_term = 0.0;      // eps^-2 (pi^2/4 - E1(m eps)) (8/3) eta
  double kinetic_term = 0.0;   // 2 / eta
  double potential_term = 0.0; // -I_eps
};

TestFunctionEnergy variational_energy(const TubeGeometry& geom, double m,
                                      double eta);

Certificate certify(const TubeGeometry& geom, double m);

}  // namespace diracwg
