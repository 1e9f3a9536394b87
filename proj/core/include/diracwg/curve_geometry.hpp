#pragma once

#include <array>
#include <string>

namespace diracwg {

enum class ProfileKind { Zero, GaussianBump, PolynomialBump, CircularArcSegment };

/// Scalar curvature kappa(s) of the base curve, the source of truth for the
/// geometry: the curve itself is always reconstructed from it.
///
/// Families:
///  - Zero:                kappa = 0 (straight line)
///  - GaussianBump:        kappa = kappa0 * exp(-s^2 / (2 sigma^2))
///  - PolynomialBump:      kappa = kappa0 * (1 - (s/L)^2)^5 on |s| < L, else 0;
///                         C^4 across +-L (four derivatives vanish there)
///  - CircularArcSegment:  kappa = kappa0 on |s| < L, else 0
class CurvatureProfile {
 public:
  static CurvatureProfile zero();
  static CurvatureProfile gaussian_bump(double kappa0, double sigma);
  static CurvatureProfile polynomial_bump(double kappa0, double L);
  static CurvatureProfile circular_arc(double kappa0, double L);

  ProfileKind kind() const { return kind_; }
  double kappa0() const { return kappa0_; }
  /// sigma for GaussianBump, L for the compactly supported families.
  double length_scale() const { return scale_; }

  double kappa(double s) const;
  double kappa_prime(double s) const;
  double kappa_second(double s) const;

  double sup_kappa() const { return sup_kappa_; }
  /// +inf for CircularArcSegment (kappa jumps at +-L).
  double sup_kappa_prime() const { return sup_kappa_prime_; }
  /// Support radius; for GaussianBump the effective cutoff where
  /// |kappa| < 1e-14 * kappa0.
  double support_radius() const { return support_radius_; }
  bool compact_support() const { return kind_ != ProfileKind::GaussianBump; }

  /// Turning angle theta(s) = integral of kappa over [0, s] (theta0 = 0).
  /// Closed form for every family.
  double turning_angle(double s) const;

  std::string describe() const;

 private:
  CurvatureProfile() = default;

  ProfileKind kind_ = ProfileKind::Zero;
  double kappa0_ = 0.0;
  double scale_ = 0.0;
  double sup_kappa_ = 0.0;
  double sup_kappa_prime_ = 0.0;
  double support_radius_ = 0.0;
};

/// Frenet data of the reconstructed curve at arc length s.
struct FrenetState {
  double s = 0.0;
  std::array<double, 2> gamma{0.0, 0.0};
  std::array<double, 2> tangent{1.0, 0.0};
  std::array<double, 2> normal{0.0, 1.0};
  double theta = 0.0;
};

struct TubeValidity {
  bool width_ok = false;
  bool injectivity_sampled_ok = false;
};

/// A curvature profile together with the tube half-width epsilon and the
/// longitudinal truncation radius used by the discrete solvers.
struct TubeGeometry {
  CurvatureProfile profile;
  double epsilon = 0.0;
  double truncation_S = 0.0;
  TubeValidity validity;
};

/// Checks the admissible-width inequality epsilon < 1/(2 sup|kappa|) and runs
/// the sampled injectivity heuristic for the tube map on a samples x samples
/// grid. Throws NonPositiveWidth / WidthTooLarge.
TubeGeometry validate_tube(const CurvatureProfile& profile, double epsilon,
                           int samples = 1000);

/// Frenet frame at s; theta and gamma by closed form where kappa is constant
/// or zero, adaptive quadrature (tol 1e-12) otherwise.
FrenetState frenet(const CurvatureProfile& profile, double s);

/// The tube map gamma(s) + epsilon t nu(s). Throws OutOfRange for |t| > 1.
std::array<double, 2> tube_map(const TubeGeometry& geom, double s, double t);

/// Curvature-induced potential
///   V_eps = -kappa^2/(4 g^2) - kappa'' eps t/(2 g^3) - 5 kappa'^2 eps^2 t^2/(4 g^4)
/// with g = 1 - eps t kappa. Throws DegenerateJacobian if g <= 0.
double geometric_potential(const TubeGeometry& geom, double s, double t);

}  // namespace diracwg
