#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "quadheis/errors.hpp"

namespace quadheis {

using cplx = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Matrix<cplx>;
using CVector = Vector<cplx>;

// Numerical thresholds shared by the library. Defaults are the documented
// contract; callers (the CLI config, env overrides) may tighten or relax them.
struct Tolerances {
  double series = 1e-14;          // relative stop for the hatcirc series
  double singular_value = 1e-10;  // relative sigma_min threshold for S(t) and log inputs
  double branch = 1e-10;          // distance to the negative real axis for the principal log
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& M, const std::string& stage) {
  if (M.rows() != M.cols())
    throw DomainError(ErrorCode::DimensionMismatch, stage, "matrix is not square");
}

template <typename D1, typename D2>
void require_same_dim(const Eigen::MatrixBase<D1>& X, const Eigen::MatrixBase<D2>& Y,
                      const std::string& stage) {
  require_square(X, stage);
  require_square(Y, stage);
  if (X.rows() != Y.rows())
    throw DomainError(ErrorCode::DimensionMismatch, stage,
                      std::to_string(X.rows()) + " vs " + std::to_string(Y.rows()));
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& M) {
  return M.array().isFinite().all();
}

// ||M - M^T|| <= rel * (1 + ||M||), Frobenius.
template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& M, double rel = 1e-8) {
  if (M.rows() != M.cols()) return false;
  return (M - M.transpose()).norm() <= rel * (1.0 + M.norm());
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& M, const std::string& stage,
                       double rel = 1e-8) {
  require_square(M, stage);
  if (!is_symmetric(M, rel))
    throw DomainError(ErrorCode::AsymmetricInput, stage, "matrix is not symmetric");
}

// (M + M^T)/2. Mirrored entries are computed by the same commutative sum, so the
// result is symmetric bit for bit.
template <typename Derived>
Matrix<typename Derived::Scalar> sym_part(const Eigen::MatrixBase<Derived>& M) {
  require_square(M, "sym_part");
  Matrix<typename Derived::Scalar> S(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = j; i < M.rows(); ++i) {
      const auto v = (M(i, j) + M(j, i)) / typename Derived::Scalar(2);
      S(i, j) = v;
      S(j, i) = v;
    }
  return S;
}

// X∘Y = XY + (XY)^T
template <typename D1, typename D2>
Matrix<typename D1::Scalar> circ(const Eigen::MatrixBase<D1>& X, const Eigen::MatrixBase<D2>& Y) {
  require_same_dim(X, Y, "circ");
  const Matrix<typename D1::Scalar> P = X * Y;
  Matrix<typename D1::Scalar> R(P.rows(), P.cols());
  for (Eigen::Index j = 0; j < P.cols(); ++j)
    for (Eigen::Index i = j; i < P.rows(); ++i) {
      const auto v = P(i, j) + P(j, i);
      R(i, j) = v;
      R(j, i) = v;
    }
  return R;
}

template <typename D1, typename D2>
Matrix<typename D1::Scalar> commutator(const Eigen::MatrixBase<D1>& X,
                                       const Eigen::MatrixBase<D2>& Y) {
  require_same_dim(X, Y, "commutator");
  return X * Y - Y * X;
}

// Spectral norm (largest singular value).
template <typename Derived>
double op_norm(const Eigen::MatrixBase<Derived>& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix<typename Derived::Scalar>> svd(M);
  return svd.singularValues()(0);
}

// Entrywise maximum modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

// Padé scaling-and-squaring (Eigen MatrixFunctions).
CMatrix exp_matrix(const CMatrix& M);

// Principal logarithm; rejects singular inputs and spectra touching the cut.
CMatrix log_principal(const CMatrix& M, const Tolerances& tol = {});

// log(e^M e^N) - M - N on the principal-log domain.
CMatrix bch_matrix(const CMatrix& M, const CMatrix& N, const Tolerances& tol = {});

namespace detail {
template <typename Step, typename D>
Matrix<typename D::Scalar> hatcirc_series(const Eigen::MatrixBase<D>& start, double bnorm,
                                          double tol, Step step, const char* stage) {
  using M = Matrix<typename D::Scalar>;
  M term = start;
  M sum = term;
  const double scale = start.norm();
  if (scale == 0.0) return sum;
  for (int n = 0; n < 10000; ++n) {
    term = step(term) / typename D::Scalar(-(n + 1.0));
    sum += term;
    if (!all_finite(term))
      throw DomainError(ErrorCode::NonConvergence, stage, "non-finite term");
    // Terms only decay monotonically once n+1 exceeds 2||B||.
    if (term.norm() <= tol * scale && n + 1 >= 2.0 * bnorm) return sum;
  }
  throw DomainError(ErrorCode::NonConvergence, stage, "10000 terms exceeded");
}
}  // namespace detail

// C ∘̂ e^{∘̂(-B)} = Σ (-1)^n/n! C∘B∘...∘B, left-nested.
template <typename D1, typename D2>
Matrix<typename D1::Scalar> hatcirc_right(const Eigen::MatrixBase<D1>& C,
                                          const Eigen::MatrixBase<D2>& B, double tol = 1e-14) {
  require_same_dim(C, B, "hatcirc_right");
  if (!(tol > 0)) throw DomainError(ErrorCode::InvalidArgument, "hatcirc_right", "tol <= 0");
  const Matrix<typename D2::Scalar> Bm = B;
  return detail::hatcirc_series(
      C, Bm.norm(), tol, [&](const auto& T) { return circ(T, Bm); }, "hatcirc_right");
}

// e^{∘̂(-B)} ∘̂ A = Σ (-1)^n/n! B∘(B∘(...∘A)).
template <typename D1, typename D2>
Matrix<typename D2::Scalar> hatcirc_left(const Eigen::MatrixBase<D1>& B,
                                         const Eigen::MatrixBase<D2>& A, double tol = 1e-14) {
  require_same_dim(B, A, "hatcirc_left");
  if (!(tol > 0)) throw DomainError(ErrorCode::InvalidArgument, "hatcirc_left", "tol <= 0");
  const Matrix<typename D1::Scalar> Bm = B;
  return detail::hatcirc_series(
      A, Bm.norm(), tol, [&](const auto& T) { return circ(Bm, T); }, "hatcirc_left");
}

// J = [[0, I], [-I, 0]] of size 2n.
CMatrix symplectic_form(Eigen::Index n);

}  // namespace quadheis
