#pragma once

#include <vector>

namespace diracwg {

/// Root E_p(m) of  m sin(2 sqrt(E)) + sqrt(E) cos(2 sqrt(E)) = 0
/// inside [(2p-1)^2 pi^2/16, p^2 pi^2/4).
struct TransverseRoot {
  int p = 1;
  double mass = 0.0;       // dimensionless product (m * eps for the strip)
  double E = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;   // |F(E)| after refinement
};

/// The secular function F(E) = mass sin(2 sqrt E) + sqrt(E) cos(2 sqrt E).
double secular(double mass, double E);

/// Bracketed Newton/bisection in the variable x = 2 sqrt(E) over
/// ((2p-1) pi/2, p pi). mass = 0 returns the left bracket endpoint exactly.
TransverseRoot solve_root(double mass, int p, double tol = 1e-14);

/// |E_1(m) - pi^2/16 - m| / m^2 for small m (expected O(1)).
double small_mass_check(double mass);

/// |E_1(m) - pi^2/4 + pi^2/(4m)| * m^2 for large m (expected O(1)).
double large_mass_check(double mass);

struct DispersionPoint {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double E = 0.0;
};

/// Fiber eigenvalues -+ sqrt(mass^2 + k^2 + E_p(mass)); the plus branch is
/// the exact negation of the minus branch.
DispersionPoint dispersion(double k, double mass, int p);

/// Positive edge of the essential spectrum, sqrt(E_1(m eps)/eps^2 + m^2).
double essential_edge(double epsilon, double m);

/// Independent P1 finite element oracle for the squared transverse operator
///   ||u'||^2 + (mass^2 + k^2) ||u||^2 + mass (|u(1)|^2 + |u(-1)|^2)
/// with the spinor constraint u2(+-1) = -+ u1(+-1) eliminated.
/// Returns the lowest `count` eigenvalues mu (lambda = +- sqrt(mu)).
std::vector<double> transverse_fem_oracle(double k, double mass, int n,
                                          int count = 8);

}  // namespace diracwg
