#include "diracwg/eigensolve.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>

#include "diracwg/errors.hpp"

namespace diracwg {

namespace {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// B-orthonormalizes V in place (W = B V kept in sync), dropping numerically
// dependent columns. Returns the retained column count.
int b_orthonormalize(const SparseHermitian& B, Matrix& V, Matrix& BV,
                     bool* indefinite = nullptr) {
  BV = B * V;
  const Matrix G = V.adjoint() * BV;
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      (G + G.adjoint()) * 0.5);  // symmetrize roundoff
  const Eigen::VectorXd d = es.eigenvalues();
  const double dmax = d.size() ? d.maxCoeff() : 0.0;
  if (indefinite) *indefinite = (dmax <= 0.0);
  const double cut = dmax * 1e-12;
  int kept = 0;
  Matrix T(V.cols(), V.cols());
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] > cut && d[i] > 0.0) {
      T.col(kept) = es.eigenvectors().col(i) / std::sqrt(d[i]);
      ++kept;
    }
  }
  if (kept == 0) {
    V.resize(V.rows(), 0);
    BV.resize(BV.rows(), 0);
    return 0;
  }
  T.conservativeResize(Eigen::NoChange, kept);
  V = V * T;
  BV = BV * T;
  return kept;
}

class Precond {
 public:
  Precond(const SparseHermitian& A, const SparseHermitian& B,
          const SolveOptions& opts)
      : A_(A), kind_(opts.precond), diag_(A.rows()) {
    for (int i = 0; i < A.rows(); ++i) {
      double d = A.coeff(i, i).real();
      if (!(d > 0.0)) d = 1.0;  // indefinite shift region: fall back
      diag_[i] = d;
    }
    if (kind_ == Preconditioner::ShiftInvert) {
      SparseHermitian M = A - Complex(opts.shift) * B;
      M.makeCompressed();
      ldlt_.compute(M);
      if (ldlt_.info() != Eigen::Success)
        throw IndefiniteMass(
            "lowest_pairs: shifted matrix factorization failed; choose a "
            "shift strictly below the lowest eigenvalue");
    }
  }

  Matrix apply(const Matrix& R) const {
    if (kind_ == Preconditioner::ShiftInvert) return ldlt_.solve(R);
    if (kind_ == Preconditioner::Jacobi) {
      Matrix W = R;
      for (int i = 0; i < W.rows(); ++i) W.row(i) /= diag_[i];
      return W;
    }
    // symmetric Gauss-Seidel: (D+L)^-1 D (D+U)^-1 applied per column
    Matrix W(R.rows(), R.cols());
    for (int c = 0; c < R.cols(); ++c) {
      Vector y = R.col(c);
      // forward solve (D+L) y = r, column-oriented (A is column-major CSC)
      for (int j = 0; j < A_.outerSize(); ++j) {
        y[j] /= diag_[j];
        const Complex yj = y[j];
        for (SparseHermitian::InnerIterator it(A_, j); it; ++it) {
          if (it.row() > j) y[it.row()] -= it.value() * yj;
        }
      }
      for (int j = 0; j < y.size(); ++j) y[j] *= diag_[j];
      // backward solve (D+U) w = y
      for (int j = A_.outerSize() - 1; j >= 0; --j) {
        y[j] /= diag_[j];
        const Complex yj = y[j];
        for (SparseHermitian::InnerIterator it(A_, j); it; ++it) {
          if (it.row() < j) y[it.row()] -= it.value() * yj;
        }
      }
      W.col(c) = y;
    }
    return W;
  }

 private:
  const SparseHermitian& A_;
  Preconditioner kind_;
  Eigen::VectorXd diag_;
  Eigen::SimplicialLDLT<SparseHermitian> ldlt_;
};

}  // namespace

SpectralResult lowest_pairs(const SparseHermitian& A, const SparseHermitian& B,
                            const SolveOptions& opts) {
  const int n = static_cast<int>(A.rows());
  if (opts.count < 1) throw std::invalid_argument("lowest_pairs: count < 1");
  if (opts.count > n)
    throw std::invalid_argument("lowest_pairs: count exceeds dimension");
  if (n == 0 || B.rows() != n || A.cols() != n)
    throw std::invalid_argument("lowest_pairs: dimension mismatch");
  const int bs = std::min(opts.count + 2, n);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix X(n, bs);
  for (int j = 0; j < bs; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = Complex(gauss(rng), gauss(rng));

  Matrix BX;
  bool indefinite = false;
  if (b_orthonormalize(B, X, BX, &indefinite) < bs || indefinite)
    throw IndefiniteMass("lowest_pairs: mass matrix is not positive definite");

  const Precond prec(A, B, opts);

  Matrix P(n, 0), BP(n, 0);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(bs);
  Eigen::VectorXd resnorm = Eigen::VectorXd::Zero(bs);
  int iterations = 0;

  for (int it = 0; it < opts.max_iter; ++it) {
    iterations = it + 1;
    Matrix AX = A * X;
    // Rayleigh-Ritz inside the current block keeps X as Ritz vectors.
    {
      const Matrix H = X.adjoint() * AX;
      Eigen::SelfAdjointEigenSolver<Matrix> es((H + H.adjoint()) * 0.5);
      theta = es.eigenvalues();
      X = X * es.eigenvectors();
      AX = AX * es.eigenvectors();
      BX = BX * es.eigenvectors();
    }
    Matrix R = AX - BX * theta.asDiagonal();
    int n_conv = 0;
    for (int j = 0; j < bs; ++j) {
      resnorm[j] = R.col(j).norm();
      if (j < opts.count && resnorm[j] <= opts.tol) ++n_conv;
    }
    if (n_conv == opts.count) break;

    Matrix W = prec.apply(R);

    // B-orthogonalize W (and P) against X, then among themselves.
    W -= X * (BX.adjoint() * W);
    Matrix BW;
    b_orthonormalize(B, W, BW);
    if (P.cols() > 0) {
      P -= X * (BX.adjoint() * P);
      if (W.cols() > 0) P -= W * (BW.adjoint() * P);
      b_orthonormalize(B, P, BP);
    }

    const int nw = static_cast<int>(W.cols());
    const int np = static_cast<int>(P.cols());
    if (nw + np == 0) break;  // stagnation: subspace exhausted

    Matrix S(n, bs + nw + np);
    S.leftCols(bs) = X;
    S.middleCols(bs, nw) = W;
    if (np > 0) S.rightCols(np) = P;

    const Matrix AS = A * S;
    const Matrix GA = S.adjoint() * AS;
    Eigen::SelfAdjointEigenSolver<Matrix> es((GA + GA.adjoint()) * 0.5);
    const Matrix Y = es.eigenvectors().leftCols(bs);

    const Matrix Xnew = S * Y;
    // new search directions: the W/P contribution to the update
    Matrix Pnew = S.rightCols(nw + np) * Y.bottomRows(nw + np);
    X = Xnew;
    BX = B * X;
    P = Pnew;
    b_orthonormalize(B, P, BP);
  }

  // Final Ritz values and residuals.
  {
    Matrix AX = A * X;
    const Matrix H = X.adjoint() * AX;
    Eigen::SelfAdjointEigenSolver<Matrix> es((H + H.adjoint()) * 0.5);
    theta = es.eigenvalues();
    X = X * es.eigenvectors();
    AX = AX * es.eigenvectors();
    BX = B * X;
    const Matrix R = AX - BX * theta.asDiagonal();
    for (int j = 0; j < bs; ++j) resnorm[j] = R.col(j).norm();
  }

  SpectralResult result;
  result.iterations = iterations;
  result.eigenvalues.assign(theta.data(), theta.data() + opts.count);
  result.residuals.assign(resnorm.data(), resnorm.data() + opts.count);
  result.converged.resize(opts.count);
  for (int j = 0; j < opts.count; ++j)
    result.converged[j] = resnorm[j] <= opts.tol;
  result.vectors = X.leftCols(opts.count);
  return result;
}

SpectralResult lowest_pairs(const AssembledForms& forms,
                            const SolveOptions& opts) {
  return lowest_pairs(forms.A, forms.B, opts);
}

std::vector<double> dense_oracle(const SparseHermitian& A,
                                 const SparseHermitian& B) {
  if (A.rows() > 2000)
    throw TooLarge("dense_oracle: dimension exceeds 2000");
  const Matrix Ad = Matrix(A);
  const Matrix Bd = Matrix(B);
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(Ad, Bd,
                                                      Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw IndefiniteMass("dense_oracle: Cholesky reduction failed");
  const Eigen::VectorXd ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> dense_oracle(const AssembledForms& forms) {
  return dense_oracle(forms.A, forms.B);
}

}  // namespace diracwg
