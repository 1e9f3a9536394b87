#include <cmath>
#include <numbers>

#include "diracwg/quadrature.hpp"
#include "doctest.h"

using namespace diracwg;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("adaptive Simpson on closed-form integrals") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0) ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -8.0,
                         8.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("adaptive Simpson handles empty and reversed intervals") {
  CHECK(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
  CHECK(adaptive_simpson([](double x) { return x; }, 1.0, 0.0) ==
        doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre rule is exact for polynomials of degree 2n-1") {
  const GaussRule r = gauss_legendre(5);
  REQUIRE(r.nodes.size() == 5);
  double wsum = 0.0, m9 = 0.0, m8 = 0.0;
  for (int i = 0; i < 5; ++i) {
    wsum += r.weights[i];
    m9 += r.weights[i] * std::pow(r.nodes[i], 9);
    m8 += r.weights[i] * std::pow(r.nodes[i], 8);
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(m9) < 1e-15);  // odd moment vanishes by node symmetry
  CHECK(m8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre nodes are symmetric and inside (-1,1)") {
  const GaussRule r = gauss_legendre(12);
  for (int i = 0; i < 12; ++i) {
    CHECK(std::abs(r.nodes[i]) < 1.0);
    CHECK(r.nodes[i] == doctest::Approx(-r.nodes[11 - i]).epsilon(1e-14));
    CHECK(r.weights[i] > 0.0);
  }
}

TEST_CASE("mapped Gauss rule integrates on [a,b]") {
  const GaussRule r = gauss_legendre(20, 0.0, kPi);
  double acc = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * std::sin(r.nodes[i]);
  CHECK(acc == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_SUITE_END();
