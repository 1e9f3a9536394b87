#include "diracwg/curve_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "diracwg/errors.hpp"
#include "diracwg/quadrature.hpp"

namespace diracwg {

namespace {

constexpr double kGaussianCutoffRatio = 1e-14;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

CurvatureProfile CurvatureProfile::zero() {
  CurvatureProfile p;
  p.kind_ = ProfileKind::Zero;
  return p;
}

CurvatureProfile CurvatureProfile::gaussian_bump(double kappa0, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("gaussian_bump: sigma must be positive");
  CurvatureProfile p;
  p.kind_ = ProfileKind::GaussianBump;
  p.kappa0_ = kappa0;
  p.scale_ = sigma;
  p.sup_kappa_ = std::abs(kappa0);
  p.sup_kappa_prime_ = std::abs(kappa0) * std::exp(-0.5) / sigma;
  p.support_radius_ = sigma * std::sqrt(-2.0 * std::log(kGaussianCutoffRatio));
  return p;
}

CurvatureProfile CurvatureProfile::polynomial_bump(double kappa0, double L) {
  if (L <= 0.0) throw std::invalid_argument("polynomial_bump: L must be positive");
  CurvatureProfile p;
  p.kind_ = ProfileKind::PolynomialBump;
  p.kappa0_ = kappa0;
  p.scale_ = L;
  p.sup_kappa_ = std::abs(kappa0);
  // |kappa'| = 10|kappa0| |x| (1-x^2)^4 / L peaks at x = 1/3
  p.sup_kappa_prime_ =
      10.0 * std::abs(kappa0) / (3.0 * L) * std::pow(8.0 / 9.0, 4);
  p.support_radius_ = L;
  return p;
}

CurvatureProfile CurvatureProfile::circular_arc(double kappa0, double L) {
  if (L <= 0.0) throw std::invalid_argument("circular_arc: L must be positive");
  CurvatureProfile p;
  p.kind_ = ProfileKind::CircularArcSegment;
  p.kappa0_ = kappa0;
  p.scale_ = L;
  p.sup_kappa_ = std::abs(kappa0);
  p.sup_kappa_prime_ = kappa0 == 0.0
                           ? 0.0
                           : std::numeric_limits<double>::infinity();
  p.support_radius_ = L;
  return p;
}

double CurvatureProfile::kappa(double s) const {
  switch (kind_) {
    case ProfileKind::Zero:
      return 0.0;
    case ProfileKind::GaussianBump:
      return kappa0_ * std::exp(-0.5 * s * s / (scale_ * scale_));
    case ProfileKind::PolynomialBump: {
      const double x = s / scale_;
      if (std::abs(x) >= 1.0) return 0.0;
      const double q = 1.0 - x * x;
      return kappa0_ * q * q * q * q * q;
    }
    case ProfileKind::CircularArcSegment:
      return std::abs(s) < scale_ ? kappa0_ : 0.0;
  }
  return 0.0;
}

double CurvatureProfile::kappa_prime(double s) const {
  switch (kind_) {
    case ProfileKind::Zero:
    case ProfileKind::CircularArcSegment:
      return 0.0;
    case ProfileKind::GaussianBump:
      return -kappa(s) * s / (scale_ * scale_);
    case ProfileKind::PolynomialBump: {
      const double x = s / scale_;
      if (std::abs(x) >= 1.0) return 0.0;
      const double q = 1.0 - x * x;
      return -10.0 * kappa0_ * x * q * q * q * q / scale_;
    }
  }
  return 0.0;
}

double CurvatureProfile::kappa_second(double s) const {
  switch (kind_) {
    case ProfileKind::Zero:
    case ProfileKind::CircularArcSegment:
      return 0.0;
    case ProfileKind::GaussianBump: {
      const double s2 = scale_ * scale_;
      return kappa(s) * (s * s - s2) / (s2 * s2);
    }
    case ProfileKind::PolynomialBump: {
      const double x = s / scale_;
      if (std::abs(x) >= 1.0) return 0.0;
      const double q = 1.0 - x * x;
      return -10.0 * kappa0_ * q * q * q * (1.0 - 9.0 * x * x) /
             (scale_ * scale_);
    }
  }
  return 0.0;
}

double CurvatureProfile::turning_angle(double s) const {
  switch (kind_) {
    case ProfileKind::Zero:
      return 0.0;
    case ProfileKind::GaussianBump:
      return kappa0_ * scale_ * std::sqrt(std::numbers::pi / 2.0) *
             std::erf(s / (scale_ * std::numbers::sqrt2));
    case ProfileKind::PolynomialBump: {
      const double x = clamp_unit(s / scale_);
      const double x2 = x * x;
      const double poly =
          x * (1.0 + x2 * (-5.0 / 3.0 +
                           x2 * (2.0 + x2 * (-10.0 / 7.0 +
                                             x2 * (5.0 / 9.0 - x2 / 11.0)))));
      return kappa0_ * scale_ * poly;
    }
    case ProfileKind::CircularArcSegment:
      return kappa0_ * std::clamp(s, -scale_, scale_);
  }
  return 0.0;
}

std::string CurvatureProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ProfileKind::Zero:
      os << "zero";
      break;
    case ProfileKind::GaussianBump:
      os << "gaussian_bump(kappa0=" << kappa0_ << ", sigma=" << scale_ << ")";
      break;
    case ProfileKind::PolynomialBump:
      os << "polynomial_bump(kappa0=" << kappa0_ << ", L=" << scale_ << ")";
      break;
    case ProfileKind::CircularArcSegment:
      os << "circular_arc(kappa0=" << kappa0_ << ", L=" << scale_ << ")";
      break;
  }
  return os.str();
}

namespace {

// gamma(s) for |s| <= support radius, by closed form or quadrature of
// (cos theta, sin theta).
std::array<double, 2> gamma_core(const CurvatureProfile& prof, double s) {
  switch (prof.kind()) {
    case ProfileKind::Zero:
      return {s, 0.0};
    case ProfileKind::CircularArcSegment: {
      const double k0 = prof.kappa0();
      if (k0 == 0.0) return {s, 0.0};
      return {std::sin(k0 * s) / k0, (1.0 - std::cos(k0 * s)) / k0};
    }
    default: {
      const double tol = 1e-12;
      const double x = adaptive_simpson(
          [&](double xi) { return std::cos(prof.turning_angle(xi)); }, 0.0, s,
          tol);
      const double y = adaptive_simpson(
          [&](double xi) { return std::sin(prof.turning_angle(xi)); }, 0.0, s,
          tol);
      return {x, y};
    }
  }
}

std::array<double, 2> gamma_at(const CurvatureProfile& prof, double s) {
  const double R = prof.support_radius();
  if (std::abs(s) <= R || R == 0.0) {
    if (R == 0.0) return {s, 0.0};
    return gamma_core(prof, s);
  }
  // Straight tail: exact continuation beyond the curvature support.
  const double edge = s > 0.0 ? R : -R;
  const std::array<double, 2> ge = gamma_core(prof, edge);
  const double th = prof.turning_angle(edge);
  return {ge[0] + (s - edge) * std::cos(th), ge[1] + (s - edge) * std::sin(th)};
}

}  // namespace

FrenetState frenet(const CurvatureProfile& profile, double s) {
  FrenetState f;
  f.s = s;
  f.theta = profile.turning_angle(s);
  f.tangent = {std::cos(f.theta), std::sin(f.theta)};
  f.normal = {-f.tangent[1], f.tangent[0]};
  f.gamma = gamma_at(profile, s);
  return f;
}

std::array<double, 2> tube_map(const TubeGeometry& geom, double s, double t) {
  if (std::abs(t) > 1.0) throw OutOfRange("tube_map: |t| > 1");
  const FrenetState f = frenet(geom.profile, s);
  return {f.gamma[0] + geom.epsilon * t * f.normal[0],
          f.gamma[1] + geom.epsilon * t * f.normal[1]};
}

double geometric_potential(const TubeGeometry& geom, double s, double t) {
  const double k = geom.profile.kappa(s);
  const double kp = geom.profile.kappa_prime(s);
  const double kpp = geom.profile.kappa_second(s);
  const double eps = geom.epsilon;
  const double g = 1.0 - eps * t * k;
  if (g <= 0.0) throw DegenerateJacobian("geometric_potential: 1 - eps*t*kappa <= 0");
  const double g2 = g * g;
  const double et = eps * t;
  return -0.25 * k * k / g2 - 0.5 * kpp * et / (g2 * g) -
         1.25 * kp * kp * et * et / (g2 * g2);
}

namespace {

struct HashedPoint {
  std::uint64_t key;
  std::int32_t idx;
};

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  // pack two signed cell coordinates
  return (static_cast<std::uint64_t>(cx + (1LL << 31)) << 32) |
         static_cast<std::uint64_t>(cy + (1LL << 31));
}

bool sampled_injectivity(const CurvatureProfile& prof, double eps, double S,
                         int n) {
  // Cached curve columns: cumulative 5-point Gauss over each s-interval
  // (theta is closed form, so each panel is cheap and very accurate).
  const double ds = 2.0 * S / (n - 1);
  std::vector<double> gx(n), gy(n), th(n);
  const GaussRule panel = gauss_legendre(5);
  gx[0] = gamma_at(prof, -S)[0];
  gy[0] = gamma_at(prof, -S)[1];
  th[0] = prof.turning_angle(-S);
  for (int i = 1; i < n; ++i) {
    const double a = -S + (i - 1) * ds;
    double dx = 0.0, dy = 0.0;
    for (std::size_t q = 0; q < panel.nodes.size(); ++q) {
      const double xi = a + 0.5 * ds * (panel.nodes[q] + 1.0);
      const double theta = prof.turning_angle(xi);
      const double w = 0.5 * ds * panel.weights[q];
      dx += w * std::cos(theta);
      dy += w * std::sin(theta);
    }
    gx[i] = gx[i - 1] + dx;
    gy[i] = gy[i - 1] + dy;
    th[i] = prof.turning_angle(-S + i * ds);
  }

  const double d0 = eps / n;  // rejection distance
  const double cell = std::max(d0, 1e-300);

  const std::int64_t total = static_cast<std::int64_t>(n) * n;
  std::vector<HashedPoint> pts(total);
  std::vector<float> px(total), py(total);
  const double dt = 2.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double nx = -std::sin(th[i]);
    const double ny = std::cos(th[i]);
    for (int j = 0; j < n; ++j) {
      const double t = -1.0 + j * dt;
      const double x = gx[i] + eps * t * nx;
      const double y = gy[i] + eps * t * ny;
      const std::int64_t id = static_cast<std::int64_t>(i) * n + j;
      px[id] = static_cast<float>(x);
      py[id] = static_cast<float>(y);
      pts[id] = {cell_key(static_cast<std::int64_t>(std::floor(x / cell)),
                          static_cast<std::int64_t>(std::floor(y / cell))),
                 static_cast<std::int32_t>(id)};
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const HashedPoint& a, const HashedPoint& b) {
              return a.key < b.key || (a.key == b.key && a.idx < b.idx);
            });

  auto check_pair = [&](std::int32_t a, std::int32_t b) {
    const int ia = a / n, ja = a % n;
    const int ib = b / n, jb = b % n;
    if (std::abs(ia - ib) <= 1 && std::abs(ja - jb) <= 1) return true;
    const double dx = static_cast<double>(px[a]) - px[b];
    const double dy = static_cast<double>(py[a]) - py[b];
    return dx * dx + dy * dy >= d0 * d0;
  };

  // Compare each point against candidates in its own and neighboring cells.
  for (std::int64_t id = 0; id < total; ++id) {
    const double x = px[id];
    const double y = py[id];
    const std::int64_t cx = static_cast<std::int64_t>(std::floor(x / cell));
    const std::int64_t cy = static_cast<std::int64_t>(std::floor(y / cell));
    for (int ox = -1; ox <= 1; ++ox) {
      for (int oy = -1; oy <= 1; ++oy) {
        const std::uint64_t key = cell_key(cx + ox, cy + oy);
        auto lo = std::lower_bound(
            pts.begin(), pts.end(), key,
            [](const HashedPoint& p, std::uint64_t k) { return p.key < k; });
        for (; lo != pts.end() && lo->key == key; ++lo) {
          if (lo->idx <= id) continue;
          if (!check_pair(static_cast<std::int32_t>(id), lo->idx)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TubeGeometry validate_tube(const CurvatureProfile& profile, double epsilon,
                           int samples) {
  if (epsilon <= 0.0) throw NonPositiveWidth("validate_tube: epsilon <= 0");
  if (samples < 1000)
    throw std::invalid_argument("validate_tube: samples must be >= 1000");
  const double sup_k = profile.sup_kappa();
  if (sup_k > 0.0 && epsilon >= 0.5 / sup_k)
    throw WidthTooLarge("validate_tube: epsilon >= 1/(2 sup|kappa|)");

  TubeGeometry geom{profile, epsilon, 0.0, {}};
  geom.truncation_S =
      profile.support_radius() + 10.0 * std::max(1.0, 1.0 / epsilon);
  geom.validity.width_ok = true;
  if (profile.kind() == ProfileKind::Zero) {
    geom.validity.injectivity_sampled_ok = true;  // globally injective
  } else {
    geom.validity.injectivity_sampled_ok =
        sampled_injectivity(profile, epsilon, geom.truncation_S, samples);
  }
  return geom;
}

}  // namespace diracwg
