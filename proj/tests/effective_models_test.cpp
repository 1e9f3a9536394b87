#include <cmath>
#include <numbers>

#include "diracwg/curve_geometry.hpp"
#include "diracwg/effective_models.hpp"
#include "diracwg/eigensolve.hpp"
#include "diracwg/quadrature.hpp"
#include "diracwg/transverse_spectrum.hpp"
#include "doctest.h"

using namespace diracwg;
namespace {
constexpr double kPi = std::numbers::pi;

// transverse eigenfunctions of the zero-mass operator (odd indices are the
// ones consistent with the implicit-equation brackets):
//   u_k^±(t) = (1/2) cos(kπ(t+1)/4) (1,1)^T ± (1/2) sin(kπ(t+1)/4) (1,−1)^T
struct Mode {
  int k;
  int sign;  // +1 or -1
  double c1(double t) const {
    const double c = std::cos(k * kPi * (t + 1) / 4);
    const double s = std::sin(k * kPi * (t + 1) / 4);
    return 0.5 * (c + sign * s);
  }
  double c2(double t) const {
    const double c = std::cos(k * kPi * (t + 1) / 4);
    const double s = std::sin(k * kPi * (t + 1) / 4);
    return 0.5 * (c - sign * s);
  }
};

// <sigma3 a, b> over (-1,1) by adaptive quadrature
double sigma3_inner(const Mode& a, const Mode& b) {
  return adaptive_simpson(
      [&](double t) { return a.c1(t) * b.c1(t) - a.c2(t) * b.c2(t); }, -1.0,
      1.0, 1e-13);
}
}  // namespace

TEST_SUITE_BEGIN("effective_models");

TEST_CASE("effective mass") {
  CHECK(effective_mass(0.0) == 0.0);
  CHECK(effective_mass(kPi) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(effective_mass(-1.0), std::invalid_argument);
}

TEST_CASE("effective mass equals the edge renormalization limit") {
  const double m = 1.0;
  const double eps = 1e-4;
  CHECK(std::abs(essential_edge(eps, m) - kPi / (4 * eps) -
                 effective_mass(m)) < 1e-3);
}

TEST_CASE("mode effective masses against the quadrature oracle") {
  CHECK(mode_effective_mass(1.0, 2) == 0.0);
  CHECK(mode_effective_mass(1.0, 1) == doctest::Approx(2 / kPi).epsilon(1e-15));
  CHECK(mode_effective_mass(5.0, 3) ==
        doctest::Approx(10 / (3 * kPi)).epsilon(1e-15));
  for (int k : {1, 3, 5, 7, 9}) {
    const Mode u{k, +1};
    const double m = 5.0;
    CHECK(mode_effective_mass(m, k) ==
          doctest::Approx(m * sigma3_inner(u, u)).epsilon(1e-11));
  }
  for (int k : {2, 4, 6}) {
    const Mode u{k, +1};
    CHECK(std::abs(sigma3_inner(u, u)) < 1e-12);
    CHECK(mode_effective_mass(1.0, k) == 0.0);
  }
  CHECK_THROWS_AS(mode_effective_mass(1.0, 0), std::invalid_argument);
}

TEST_CASE("coupling coefficients against the quadrature oracle") {
  CHECK(coupling(3).a == doctest::Approx(0.0).scale(1.0));
  CHECK(std::abs(coupling(3).a) < 1e-15);
  CHECK(coupling(2).a == doctest::Approx(2 / (3 * kPi)).epsilon(1e-14));
  CHECK(coupling(2).b == doctest::Approx(2 / kPi).epsilon(1e-14));
  for (int k = 2; k <= 9; ++k) {
    const Mode uk{k, +1}, u1p{1, +1}, u1m{1, -1};
    CHECK(coupling(k).a ==
          doctest::Approx(sigma3_inner(uk, u1p)).epsilon(1e-10).scale(1.0));
    CHECK(coupling(k).b ==
          doctest::Approx(sigma3_inner(uk, u1m)).epsilon(1e-10).scale(1.0));
  }
  CHECK_THROWS_AS(coupling(1), std::invalid_argument);
}

TEST_CASE("coupling tail: sum of a_k^2 converges") {
  double s1e3 = 0.0, s1e4 = 0.0;
  for (int k = 2; k <= 10000; ++k) {
    const double a = coupling(k).a;
    if (k <= 1000) s1e3 += a * a;
    s1e4 += a * a;
  }
  CHECK(s1e4 - s1e3 < 1e-3);
  CHECK(s1e4 > 0.0);
}

TEST_CASE("Dirichlet form: straight strip edge pi^2/(4 eps^2)") {
  TubeGeometry geom = validate_tube(CurvatureProfile::zero(), 0.1);
  geom.truncation_S = 6.0;
  const double target = kPi * kPi / (4 * 0.01);
  double prev_err = 1e300;
  for (int n : {9, 17, 33}) {
    const AssembledForms f =
        assemble_dirichlet_form(geom, make_strip_grid(6.0, n, 9));
    const double mu = dense_oracle(f).front();
    const double ref = target + kPi * kPi / (4 * 36.0);
    CHECK(std::abs(mu - ref) < prev_err);
    prev_err = std::abs(mu - ref);
  }
}

TEST_CASE("Dirichlet form: curvature pulls an eigenvalue below the edge") {
  // stronger bump -> binding ~0.07, resolvable on a small grid
  const TubeGeometry geom =
      validate_tube(CurvatureProfile::polynomial_bump(2.0, 1.0), 0.1);
  const double edge = kPi * kPi / (4 * 0.01);
  SolveOptions opt;
  opt.count = 2;
  opt.tol = 1e-9;
  opt.precond = Preconditioner::ShiftInvert;
  opt.shift = edge - 5.0;
  const AssembledForms fd =
      assemble_dirichlet_form(geom, make_strip_grid(12.0, 161, 81));
  const SpectralResult r = lowest_pairs(fd, opt);
  CHECK(r.eigenvalues[0] < edge);
  // C^2-valued form: eigenvalues below the edge come in pairs
  CHECK(std::abs(r.eigenvalues[1] - r.eigenvalues[0]) < 1e-8);
}

TEST_CASE("large-mass table: ordering, monotonicity, shrinking gap") {
  const TubeGeometry geom =
      validate_tube(CurvatureProfile::polynomial_bump(1.0, 1.0), 0.1);
  const StripGrid grid = make_strip_grid(8.0, 81, 21);
  const std::vector<double> m_list{10.0, 20.0, 50.0, 100.0};
  SolveOptions opt;
  opt.count = 1;
  opt.tol = 1e-8;
  opt.precond = Preconditioner::ShiftInvert;
  opt.shift = 150.0;
  const auto rows = large_mass_gap(geom, grid, m_list, opt);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].mu1_qm <= rows[i].mu1_qinf);
    CHECK(rows[i].gap >= 0.0);
    if (i > 0) {
      CHECK(rows[i].mu1_qm >= rows[i - 1].mu1_qm - 1e-10);
      CHECK(rows[i].gap <= rows[i - 1].gap + 1e-10);
    }
  }
  CHECK_THROWS_AS(
      large_mass_gap(validate_tube(CurvatureProfile::gaussian_bump(1.0, 1.0),
                                   0.1),
                     grid, m_list, opt),
      std::invalid_argument);
}

TEST_SUITE_END();
