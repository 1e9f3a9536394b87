#pragma once

#include <span>
#include <vector>

#include "diracwg/eigensolve.hpp"
#include "diracwg/strip_operator.hpp"

namespace diracwg {

/// Mass of the limiting 1D operator in the thin-width regime: 2 m / pi.
double effective_mass(double m);

/// Per-mode effective mass: 0 for even k, 2 m / (k pi) for odd k.
double mode_effective_mass(double m, int k);

/// Mode-coupling coefficients of the transverse basis, k >= 2:
///   a_k = (4/pi) sin^2(pi (k+1)/4) / (k+1)
///   b_k = (4/pi) sin^2(pi (k-1)/4) / (k-1)
struct ModeCoefficients {
  int k = 2;
  double a = 0.0;
  double b = 0.0;
};

ModeCoefficients coupling(int k);

struct LargeMassRow {
  double m = 0.0;
  double mu1_qm = 0.0;    // lowest eigenvalue of the shifted square form
  double mu1_qinf = 0.0;  // lowest Dirichlet eigenvalue
  double gap = 0.0;       // mu1_qinf - mu1_qm
};

/// Sweeps the shifted square form over m_list against the Dirichlet reference
/// on the same grid.
std::vector<LargeMassRow> large_mass_gap(const TubeGeometry& geom,
                                         const StripGrid& grid,
                                         std::span<const double> m_list,
                                         const SolveOptions& opts);

}  // namespace diracwg
