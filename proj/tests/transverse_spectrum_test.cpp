#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracwg/transverse_spectrum.hpp"
#include "doctest.h"

using namespace diracwg;
namespace {
constexpr double kPi = std::numbers::pi;

// dense sign-change scan, the independent root oracle
double scan_root(double mass, int p) {
  const double lo = (2 * p - 1) * kPi / 2, hi = p * kPi;
  const int n = 1000000;
  double xprev = lo + (hi - lo) * 1e-9;
  auto f = [&](double x) { return mass * std::sin(x) + 0.5 * x * std::cos(x); };
  double fprev = f(xprev);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / (n + 1.0);
    const double fx = f(x);
    if (fprev * fx <= 0.0) {
      // bisect the located subinterval down to machine precision
      double a = xprev, b = x, fa = fprev;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if (fa * fm <= 0.0)
          b = m;
        else
          a = m, fa = fm;
      }
      const double xr = 0.5 * (a + b);
      return xr * xr / 4.0;
    }
    xprev = x;
    fprev = fx;
  }
  return -1.0;
}
}  // namespace

TEST_SUITE_BEGIN("transverse_spectrum");

TEST_CASE("mass zero closed forms") {
  CHECK(solve_root(0.0, 1).E == doctest::Approx(kPi * kPi / 16).epsilon(1e-15));
  CHECK(solve_root(0.0, 2).E ==
        doctest::Approx(9 * kPi * kPi / 16).epsilon(1e-15));
  CHECK(solve_root(0.0, 1).residual == 0.0);
}

TEST_CASE("roots match the dense sign-scan oracle") {
  for (double mass : {0.3, 1.0, 7.5}) {
    for (int p : {1, 2, 3}) {
      const double oracle = scan_root(mass, p);
      REQUIRE(oracle > 0.0);
      CHECK(solve_root(mass, p).E == doctest::Approx(oracle).epsilon(1e-12));
    }
  }
}

TEST_CASE("residual contract and bracket integrity") {
  for (double mass : {0.0, 1e-3, 0.5, 2.0, 50.0, 1e4}) {
    for (int p = 1; p <= 8; ++p) {
      const TransverseRoot r = solve_root(mass, p);
      // the attainable |F| floor scales like mass * ulp(E)
      CHECK(std::abs(secular(mass, r.E)) <= 1e-12 * std::max(1.0, mass));
      CHECK(r.E >= r.bracket_lo);
      CHECK(r.E < r.bracket_hi);
      CHECK(r.bracket_lo ==
            doctest::Approx((2 * p - 1) * (2 * p - 1) * kPi * kPi / 16));
      CHECK(r.bracket_hi == doctest::Approx(p * p * kPi * kPi / 4));
      if (mass > 0.0) CHECK(r.E > r.bracket_lo);
    }
  }
}

TEST_CASE("solve_root rejects too-tight tolerances") {
  CHECK_THROWS_AS(solve_root(1.0, 1, 1e-15), std::invalid_argument);
  CHECK_THROWS_AS(solve_root(-0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_root(1.0, 0), std::invalid_argument);
}

TEST_CASE("E_1 is strictly increasing in the mass") {
  double prev = solve_root(0.0, 1).E;
  for (int i = 1; i <= 100; ++i) {
    const double e = solve_root(0.1 * i, 1).E;
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("small-mass expansion E_1 = pi^2/16 + m + O(m^2)") {
  CHECK(small_mass_check(1e-3) < 10.0);
  CHECK(std::abs(solve_root(1e-4, 1).E - kPi * kPi / 16 - 1e-4) <= 1e-7);
  // deviation stays O(1) as m -> 0
  CHECK(small_mass_check(1e-2) < 10.0);
  CHECK(small_mass_check(1e-4) < 10.0);
}

TEST_CASE("large-mass expansion E_1 = pi^2/4 - pi^2/(4m) + O(m^-2)") {
  const double q = kPi * kPi / 4;
  CHECK(std::abs(1e3 * (q - solve_root(1e3, 1).E) - q) / q <= 1e-2);
  CHECK(std::abs(1e2 * (q - solve_root(1e2, 1).E) - q) / q <= 1e-1);
  CHECK(solve_root(1e6, 1).E < q);
  CHECK(large_mass_check(1e3) < 10.0);
}

TEST_CASE("dispersion branches") {
  auto d = dispersion(0.0, 0.0, 1);
  CHECK(d.lambda_plus == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(d.lambda_minus == doctest::Approx(-kPi / 4).epsilon(1e-15));
  d = dispersion(3.0, 0.0, 1);
  CHECK(d.lambda_plus ==
        doctest::Approx(std::sqrt(9 + kPi * kPi / 16)).epsilon(1e-15));
  d = dispersion(1.0, 1.0, 1);
  CHECK(d.lambda_plus ==
        doctest::Approx(std::sqrt(2 + solve_root(1.0, 1).E)).epsilon(1e-15));
}

TEST_CASE("dispersion symmetry is bitwise") {
  for (double k : {0.0, 0.3, 2.0})
    for (double mass : {0.0, 1.0, 10.0})
      for (int p : {1, 2, 5}) {
        const DispersionPoint d = dispersion(k, mass, p);
        CHECK(d.lambda_minus == -d.lambda_plus);  // exact negation
        CHECK(d.lambda_plus > std::sqrt(mass * mass + k * k));  // gap property
        CHECK(d.E == solve_root(mass, p).E);
      }
}

TEST_CASE("essential edge") {
  CHECK(essential_edge(0.1, 0.0) == doctest::Approx(2.5 * kPi).epsilon(1e-15));
  // large-mass consistency at eps = 1
  const double m = 1e3;
  const double approx =
      std::sqrt(m * m + kPi * kPi / 4 - kPi * kPi / (4 * m));
  CHECK(std::abs(essential_edge(1.0, m) - approx) / approx < 1e-2);
}

TEST_CASE("FEM oracle: ground state at k=0, m=0") {
  const auto mu = transverse_fem_oracle(0.0, 0.0, 512);
  const double h = 2.0 / 512;
  CHECK(std::abs(mu[0] - kPi * kPi / 16) < 5 * h * h);
}

TEST_CASE("FEM oracle: second distinct level sits at 9pi^2/16, not 4pi^2/16") {
  const auto mu = transverse_fem_oracle(0.0, 0.0, 512);
  double second = -1.0;
  for (double m : mu)
    if (m > mu[0] + 0.1) {
      second = m;
      break;
    }
  REQUIRE(second > 0.0);
  CHECK(std::abs(second - 9 * kPi * kPi / 16) < 0.05);
  CHECK(std::abs(second - 4 * kPi * kPi / 16) > 1.0);
}

TEST_CASE("FEM oracle: dispersion offset (k=2, m=3)") {
  const auto mu = transverse_fem_oracle(2.0, 3.0, 512);
  const double exact = 9.0 + 4.0 + solve_root(3.0, 1).E;
  CHECK(std::abs(mu[0] - exact) < 1e-3);
}

TEST_CASE("FEM oracle input validation") {
  CHECK_THROWS_AS(transverse_fem_oracle(0.0, 0.0, 15), std::invalid_argument);
}

TEST_SUITE_END();
