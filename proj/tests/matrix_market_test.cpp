#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "diracwg/matrix_market.hpp"
#include "doctest.h"

using namespace diracwg;
namespace {
using Complex = std::complex<double>;

SparseHermitian sample_matrix() {
  SparseHermitian M(4, 4);
  std::vector<Eigen::Triplet<Complex>> t;
  t.emplace_back(0, 0, Complex(2.0, 0.0));
  t.emplace_back(1, 1, Complex(1.0 / 3.0, 0.0));
  t.emplace_back(2, 2, Complex(5.0, 0.0));
  t.emplace_back(3, 3, Complex(7.0, 0.0));
  t.emplace_back(1, 0, Complex(0.1, -2.5));
  t.emplace_back(0, 1, Complex(0.1, 2.5));
  t.emplace_back(3, 1, Complex(-1e-17, 0.123456789012345678));
  t.emplace_back(1, 3, Complex(-1e-17, -0.123456789012345678));
  M.setFromTriplets(t.begin(), t.end());
  M.makeCompressed();
  return M;
}
}  // namespace

TEST_SUITE_BEGIN("matrix_market");

TEST_CASE("header, size line and lower-triangle storage") {
  const std::string path = "mm_roundtrip_test.mtx";
  write_matrix_market(path, sample_matrix());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "%%MatrixMarket matrix coordinate complex hermitian");
  int rows = 0, cols = 0, nnz = 0;
  in >> rows >> cols >> nnz;
  CHECK(rows == 4);
  CHECK(cols == 4);
  CHECK(nnz == 6);  // 4 diagonal + 2 strictly lower entries
  for (int k = 0; k < nnz; ++k) {
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    in >> i >> j >> re >> im;
    REQUIRE(in.good());
    CHECK(i >= j);  // only the lower triangle is stored
    CHECK(i >= 1);
    CHECK(j >= 1);
    CHECK(i <= 4);
    CHECK(j <= 4);
  }
  std::remove(path.c_str());
}

TEST_CASE("values round-trip through the file at full precision") {
  const std::string path = "mm_precision_test.mtx";
  const SparseHermitian M = sample_matrix();
  write_matrix_market(path, M);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  int rows = 0, cols = 0, nnz = 0;
  in >> rows >> cols >> nnz;
  Eigen::MatrixXcd parsed = Eigen::MatrixXcd::Zero(rows, cols);
  for (int k = 0; k < nnz; ++k) {
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    in >> i >> j >> re >> im;
    parsed(i - 1, j - 1) = Complex(re, im);
    if (i != j) parsed(j - 1, i - 1) = std::conj(Complex(re, im));
  }
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(M);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      // %.17g reproduces doubles exactly
      CHECK(parsed(i, j).real() == dense(i, j).real());
      CHECK(parsed(i, j).imag() == dense(i, j).imag());
    }
  std::remove(path.c_str());
}

TEST_CASE("rewriting the same matrix gives byte-identical files") {
  const std::string p1 = "mm_bytes_1.mtx", p2 = "mm_bytes_2.mtx";
  const SparseHermitian M = sample_matrix();
  write_matrix_market(p1, M);
  write_matrix_market(p2, M);
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_SUITE_END();
