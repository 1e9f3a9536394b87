#include "diracwg/matrix_market.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace diracwg {

void write_matrix_market(const std::string& path, const SparseHermitian& M) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_matrix_market: cannot open " + path);

  std::size_t nnz = 0;
  for (int j = 0; j < M.outerSize(); ++j)
    for (SparseHermitian::InnerIterator it(M, j); it; ++it)
      if (it.row() >= j) ++nnz;

  std::fprintf(f, "%%%%MatrixMarket matrix coordinate complex hermitian\n");
  std::fprintf(f, "%ld %ld %zu\n", static_cast<long>(M.rows()),
               static_cast<long>(M.cols()), nnz);
  for (int j = 0; j < M.outerSize(); ++j)
    for (SparseHermitian::InnerIterator it(M, j); it; ++it)
      if (it.row() >= j)
        std::fprintf(f, "%ld %ld %.17g %.17g\n",
                     static_cast<long>(it.row() + 1),
                     static_cast<long>(j + 1), it.value().real(),
                     it.value().imag());
  std::fclose(f);
}

}  // namespace diracwg
