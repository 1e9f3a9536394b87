#include "diracwg/certification.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "diracwg/errors.hpp"
#include "diracwg/quadrature.hpp"
#include "diracwg/transverse_spectrum.hpp"

namespace diracwg {

namespace {
constexpr double kPi = std::numbers::pi;
}

double compute_I_epsilon(const TubeGeometry& geom, int quad_points) {
  if (!geom.profile.compact_support())
    throw UnsupportedProfile(
        "compute_I_epsilon: curvature support must be compact");
  if (quad_points < 2)
    throw std::invalid_argument("compute_I_epsilon: quad_points < 2");
  const double L = geom.profile.support_radius();
  if (L == 0.0) return 0.0;  // straight line

  const GaussRule rs = gauss_legendre(quad_points, -L, L);
  const GaussRule rt = gauss_legendre(quad_points, -1.0, 1.0);
  double acc = 0.0;
  for (int i = 0; i < quad_points; ++i) {
    const double s = rs.nodes[i];
    double inner = 0.0;
    for (int j = 0; j < quad_points; ++j) {
      const double t = rt.nodes[j];
      const double c = std::cos(0.5 * kPi * t);
      inner += rt.weights[j] * geometric_potential(geom, s, t) * c * c;
    }
    acc += rs.weights[i] * inner;
  }
  return -acc;
}

double m0_bound(const TubeGeometry& geom, double I_eps) {
  if (I_eps <= 0.0)
    throw NonPositiveCertificate("m0_bound: I_eps must be positive");
  const double L = geom.profile.support_radius();
  const double eps = geom.epsilon;
  const double c = 4.0 * kPi * kPi * L / (3.0 * eps * eps) + 2.0 / L;
  return 0.5 / eps * ((c / I_eps) * (c / I_eps) - 1.0);
}

TestFunctionEnergy variational_energy(const TubeGeometry& geom, double m,
                                      double eta) {
  const double L = geom.profile.support_radius();
  if (!geom.profile.compact_support())
    throw UnsupportedProfile(
        "variational_energy: curvature support must be compact");
  if (eta < L)
    throw std::invalid_argument("variational_energy: eta must be >= L");
  const double eps = geom.epsilon;
  const double e1 = solve_root(m * eps, 1).E;

  TestFunctionEnergy e;
  e.eta = eta;
  e.edge_term = (kPi * kPi / 4.0 - e1) / (eps * eps) * (8.0 / 3.0) * eta;
  e.kinetic_term = 2.0 / eta;
  e.potential_term = -compute_I_epsilon(geom);
  e.q_value = e.edge_term + e.kinetic_term + e.potential_term;
  return e;
}

Certificate certify(const TubeGeometry& geom, double m) {
  Certificate cert;
  cert.I_epsilon = compute_I_epsilon(geom);
  cert.condition_holds = cert.I_epsilon > 0.0;
  if (!cert.condition_holds) {
    cert.m0_bound = std::numeric_limits<double>::infinity();
    cert.predicted_discrete_count_at_least = 0;
    return cert;
  }
  cert.m0_bound = m0_bound(geom, cert.I_epsilon);
  cert.predicted_discrete_count_at_least = (m > cert.m0_bound) ? 2 : 0;
  return cert;
}

}  // namespace diracwg
