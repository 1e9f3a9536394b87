#include "diracwg/transverse_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracwg/errors.hpp"

namespace diracwg {

namespace {

constexpr double kPi = std::numbers::pi;

// F in the variable x = 2 sqrt(E):  mass sin(x) + (x/2) cos(x).
double secular_x(double mass, double x) {
  return mass * std::sin(x) + 0.5 * x * std::cos(x);
}

double secular_x_prime(double mass, double x) {
  return mass * std::cos(x) + 0.5 * std::cos(x) - 0.5 * x * std::sin(x);
}

}  // namespace

double secular(double mass, double E) {
  const double r = std::sqrt(E);
  return mass * std::sin(2.0 * r) + r * std::cos(2.0 * r);
}

TransverseRoot solve_root(double mass, int p, double tol) {
  if (p < 1) throw std::invalid_argument("solve_root: p must be >= 1");
  if (mass < 0.0) throw std::invalid_argument("solve_root: mass must be >= 0");
  if (tol < 1e-14) throw std::invalid_argument("solve_root: tol must be >= 1e-14");

  TransverseRoot root;
  root.p = p;
  root.mass = mass;
  root.bracket_lo = (2.0 * p - 1.0) * (2.0 * p - 1.0) * kPi * kPi / 16.0;
  root.bracket_hi = static_cast<double>(p) * p * kPi * kPi / 4.0;

  if (mass == 0.0) {
    // Exact analytic branch: cos(2 sqrt E) = 0 at the left endpoint.
    root.E = root.bracket_lo;
    root.residual = 0.0;
    return root;
  }

  double lo = (2.0 * p - 1.0) * kPi / 2.0;
  double hi = p * kPi;
  double flo = secular_x(mass, lo);
  double fhi = secular_x(mass, hi);
  if (flo == 0.0) {
    root.E = 0.25 * lo * lo;
    root.residual = 0.0;
    return root;
  }
  if (flo * fhi > 0.0)
    throw NoSignChange("solve_root: bracket endpoints have equal sign");

  // Safeguarded Newton: fall back to bisection whenever the Newton step
  // leaves the bracket. Runs to fixed point (the step underflows) so the
  // root is resolved to the last ulp; the bracket shrinks every iteration,
  // so 200 iterations cover the pure-bisection worst case.
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = secular_x(mass, x);
    if (f == 0.0) break;
    if ((f > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
    }
    const double fp = secular_x_prime(mass, x);
    double xn = fp != 0.0 ? x - f / fp : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x || std::abs(xn - x) < 0.01 * tol * std::abs(x)) {
      x = xn;
      break;
    }
    x = xn;
  }
  root.E = 0.25 * x * x;
  root.residual = std::abs(secular(mass, root.E));
  return root;
}

double small_mass_check(double mass) {
  if (mass <= 0.0 || mass > 1e-2)
    throw std::invalid_argument("small_mass_check: need 0 < mass <= 1e-2");
  const double e1 = solve_root(mass, 1).E;
  return std::abs(e1 - kPi * kPi / 16.0 - mass) / (mass * mass);
}

double large_mass_check(double mass) {
  if (mass < 1e2)
    throw std::invalid_argument("large_mass_check: need mass >= 1e2");
  const double e1 = solve_root(mass, 1).E;
  return std::abs(e1 - kPi * kPi / 4.0 + kPi * kPi / (4.0 * mass)) * mass *
         mass;
}

DispersionPoint dispersion(double k, double mass, int p) {
  DispersionPoint d;
  d.E = solve_root(mass, p).E;
  const double lam = std::sqrt(mass * mass + k * k + d.E);
  d.lambda_plus = lam;
  d.lambda_minus = -lam;
  return d;
}

double essential_edge(double epsilon, double m) {
  if (epsilon <= 0.0) throw NonPositiveWidth("essential_edge: epsilon <= 0");
  if (m < 0.0) throw std::invalid_argument("essential_edge: m must be >= 0");
  const double e1 = solve_root(m * epsilon, 1).E;
  return std::sqrt(e1 / (epsilon * epsilon) + m * m);
}

}  // namespace diracwg
