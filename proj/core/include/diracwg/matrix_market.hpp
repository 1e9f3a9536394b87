#pragma once

#include <string>

#include "diracwg/strip_operator.hpp"

namespace diracwg {

/// Writes a sparse Hermitian matrix in Matrix Market coordinate format
/// (complex hermitian, lower triangle) for external cross-checks.
void write_matrix_market(const std::string& path, const SparseHermitian& M);

}  // namespace diracwg
