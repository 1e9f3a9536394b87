#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "diracwg/strip_operator.hpp"

namespace diracwg {

enum class Preconditioner {
  Jacobi,       // diagonal of A
  GaussSeidel,  // one symmetric Gauss-Seidel sweep on A
  ShiftInvert   // (A - shift B)^-1 by sparse LDL^T; shift must stay below
                // the lowest eigenvalue so the factorization is definite
};

struct SolveOptions {
  int count = 1;
  double tol = 1e-8;          // on ||A x - mu B x|| / ||x||_B
  int max_iter = 500;
  std::uint64_t seed = 0;
  Preconditioner precond = Preconditioner::Jacobi;
  double shift = 0.0;         // used by ShiftInvert only
};

struct SpectralResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> residuals;
  std::vector<char> converged;
  int iterations = 0;
  Eigen::MatrixXcd vectors;  // B-orthonormal columns

  bool all_converged() const {
    for (char c : converged)
      if (!c) return false;
    return !converged.empty();
  }
};

/// Block preconditioned conjugate-gradient eigeniteration (LOBPCG) for the
/// lowest eigenvalues of A x = mu B x, A Hermitian, B positive definite.
/// Block size count + 2, deterministic seeded start. Non-convergence is
/// reported through the per-pair flags, not an exception.
SpectralResult lowest_pairs(const SparseHermitian& A, const SparseHermitian& B,
                            const SolveOptions& opts);
SpectralResult lowest_pairs(const AssembledForms& forms,
                            const SolveOptions& opts);

/// Dense cross-check: Cholesky reduction + Hermitian QR, full spectrum.
/// Throws TooLarge above dimension 2000; meant for tests.
std::vector<double> dense_oracle(const SparseHermitian& A,
                                 const SparseHermitian& B);
std::vector<double> dense_oracle(const AssembledForms& forms);

}  // namespace diracwg
