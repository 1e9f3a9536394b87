#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracwg/transverse_spectrum.hpp"

namespace diracwg {

namespace {

// Maps a full dof (2 per node, interleaved) to its free index and merge
// coefficient after eliminating u2(+-1) = -+ u1(+-1).
struct DofFold {
  int free_index;
  double coeff;
};

}  // namespace

std::vector<double> transverse_fem_oracle(double k, double mass, int n,
                                          int count) {
  if (n < 16) throw std::invalid_argument("transverse_fem_oracle: n < 16");
  if (mass < 0.0)
    throw std::invalid_argument("transverse_fem_oracle: mass < 0");

  const int nfull = 2 * n;
  const int nf = nfull - 2;
  const int kd = 2;
  const double h = 2.0 / (n - 1);

  std::vector<DofFold> fold(nfull);
  fold[0] = {0, 1.0};
  fold[1] = {0, 1.0};  // u2(-1) = +u1(-1)
  for (int d = 2; d < nfull - 2; ++d) fold[d] = {d - 1, 1.0};
  fold[nfull - 2] = {nf - 1, 1.0};
  fold[nfull - 1] = {nf - 1, -1.0};  // u2(+1) = -u1(+1)

  // Banded upper storage, LAPACK column-major: ab[kd + i - j + j*ldab].
  const int ldab = kd + 1;
  std::vector<double> ab(static_cast<std::size_t>(ldab) * nf, 0.0);
  std::vector<double> bb(static_cast<std::size_t>(ldab) * nf, 0.0);

  auto add = [&](std::vector<double>& m, int r, int c, double v) {
    const auto [fr, cr] = fold[r];
    const auto [fc, cc] = fold[c];
    if (fr <= fc) m[kd + fr - fc + static_cast<std::size_t>(fc) * ldab] += cr * cc * v;
  };

  const double shift = mass * mass + k * k;
  const double ke[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
  const double me[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
  for (int e = 0; e < n - 1; ++e) {
    for (int c = 0; c < 2; ++c) {
      const int dof[2] = {2 * e + c, 2 * (e + 1) + c};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          add(ab, dof[a], dof[b], ke[a][b] + shift * me[a][b]);
          add(bb, dof[a], dof[b], me[a][b]);
        }
    }
  }
  // Robin-like boundary contribution mass * ||u(+-1)||^2.
  add(ab, 0, 0, mass);
  add(ab, 1, 1, mass);
  add(ab, nfull - 2, nfull - 2, mass);
  add(ab, nfull - 1, nfull - 1, mass);

  std::vector<double> w(nf);
  std::vector<double> z(1);
  const int info = LAPACKE_dsbgv(LAPACK_COL_MAJOR, 'N', 'U', nf, kd, kd,
                                 ab.data(), ldab, bb.data(), ldab, w.data(),
                                 z.data(), 1);
  if (info != 0)
    throw std::runtime_error("transverse_fem_oracle: dsbgv failed");

  w.resize(std::min<std::size_t>(w.size(), static_cast<std::size_t>(count)));
  return w;
}

}  // namespace diracwg
