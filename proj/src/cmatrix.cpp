#include "quadheis/cmatrix.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace quadheis {

CMatrix exp_matrix(const CMatrix& M) {
  require_square(M, "exp_matrix");
  if (M.size() == 0) return M;
  return M.exp();
}

CMatrix log_principal(const CMatrix& M, const Tolerances& tol) {
  require_square(M, "log_principal");
  if (M.size() == 0) return M;
  if (!all_finite(M))
    throw DomainError(ErrorCode::SingularInput, "log_principal", "non-finite entries");

  Eigen::JacobiSVD<CMatrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol.singular_value * sv(0))
    throw DomainError(ErrorCode::SingularInput, "log_principal", "matrix is numerically singular");

  Eigen::ComplexEigenSolver<CMatrix> es(M, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx lam = es.eigenvalues()(i);
    if (lam.real() <= 0.0 && std::abs(lam.imag()) <= tol.branch)
      throw DomainError(ErrorCode::BranchCut, "log_principal",
                        "eigenvalue on the closed negative real axis");
  }

  CMatrix L = M.log();
  if (!all_finite(L))
    throw DomainError(ErrorCode::BranchCut, "log_principal", "logarithm not finite");
  return L;
}

CMatrix bch_matrix(const CMatrix& M, const CMatrix& N, const Tolerances& tol) {
  require_same_dim(M, N, "bch");
  try {
    return log_principal(exp_matrix(M) * exp_matrix(N), tol) - M - N;
  } catch (const DomainError& e) {
    throw e.within("bch");
  }
}

CMatrix symplectic_form(Eigen::Index n) {
  CMatrix J = CMatrix::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n).setIdentity();
  J.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  return J;
}

}  // namespace quadheis
