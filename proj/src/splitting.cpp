#include "quadheis/splitting.hpp"

#include <algorithm>

namespace quadheis {

double max_abs_diff(const Coords& x, const Coords& y) {
  require_same_dim(x.B, y.B, "max_abs_diff");
  double d = std::abs(x.x - y.x);
  d = std::max({d, max_abs(x.A - y.A), max_abs(x.B - y.B), max_abs(x.C - y.C)});
  return d;
}

CMatrix sp_generator(const CMatrix& A, const CMatrix& B, const CMatrix& C) {
  const char* stage = "sp_generator";
  require_same_dim(A, B, stage);
  require_same_dim(B, C, stage);
  require_symmetric(A, stage);
  require_symmetric(C, stage);
  const Eigen::Index n = B.rows();
  CMatrix v(2 * n, 2 * n);
  v.topLeftCorner(n, n) = B;
  v.topRightCorner(n, n) = 2.0 * A;
  v.bottomLeftCorner(n, n) = -2.0 * C;
  v.bottomRightCorner(n, n) = -B.transpose();
  return v;
}

double symplectic_residual(const CMatrix& M) {
  const CMatrix J = symplectic_form(M.rows() / 2);
  return (M.transpose() * J * M - J).norm();
}

SplitData split_data(const CMatrix& A, const CMatrix& B, const CMatrix& C, double t,
                     const Tolerances& tol) {
  const char* stage = "split";
  const CMatrix v = sp_generator(A, B, C);
  const Eigen::Index n = B.rows();
  const CMatrix M = exp_matrix(t * v);

  SplitData d;
  d.P = M.topLeftCorner(n, n);
  d.Q = M.topRightCorner(n, n);
  d.R = -M.bottomLeftCorner(n, n);
  d.S = M.bottomRightCorner(n, n);

  // S may degenerate while staying perfectly conditioned (S = cos(t)·I), so
  // sigma_min is measured against the whole block matrix, whose norm is >= 1.
  Eigen::JacobiSVD<CMatrix> svs(d.S);
  const double smin = n > 0 ? svs.singularValues()(n - 1) : 1.0;
  const double scale = n > 0 ? op_norm(M) : 1.0;
  d.s_condition = smin / scale;
  if (!(smin > tol.singular_value * scale))
    throw DomainError(ErrorCode::SingularS, stage, "S(t) is not invertible");

  const Eigen::PartialPivLU<CMatrix> lu(d.S);
  const CMatrix Sinv = lu.inverse();
  d.f_hat = sym_part(CMatrix(d.Q * Sinv));
  d.h_hat = sym_part(CMatrix(Sinv * d.R));
  try {
    d.g = -log_principal(d.S, tol).transpose();
  } catch (const DomainError& e) {
    throw e.within(stage);
  }
  d.scalar = -0.5 * t * B.trace() + 0.5 * d.g.trace();
  return d;
}

SecondKindCoords split(const FirstKindCoords& w, double t, const Tolerances& tol) {
  const SplitData d = split_data(w.A, w.B, w.C, t, tol);
  SecondKindCoords g;
  g.x = w.x + d.scalar;
  g.A = 0.5 * d.f_hat;
  g.B = d.g;
  g.C = 0.5 * d.h_hat;
  return g;
}

FirstKindCoords merge(const SecondKindCoords& g, const Tolerances& tol) {
  const char* stage = "merge";
  require_same_dim(g.A, g.B, stage);
  require_same_dim(g.B, g.C, stage);
  require_symmetric(g.A, stage);
  require_symmetric(g.C, stage);
  const Eigen::Index n = g.dim();
  const CMatrix I = CMatrix::Identity(n, n);

  // The S, Q, R blocks follow from g directly; P is forced by S^T P + Q^T R = I.
  const CMatrix S = exp_matrix(CMatrix(-g.B.transpose()));
  const CMatrix Q = 2.0 * g.A * S;
  const CMatrix R = S * (2.0 * g.C);
  const CMatrix P = S.transpose().partialPivLu().solve(CMatrix(I - Q.transpose() * R));

  CMatrix M(2 * n, 2 * n);
  M.topLeftCorner(n, n) = P;
  M.topRightCorner(n, n) = Q;
  M.bottomLeftCorner(n, n) = -R;
  M.bottomRightCorner(n, n) = S;
  if (!all_finite(M) || symplectic_residual(M) > 1e-8 * std::max(1.0, M.squaredNorm()))
    throw DomainError(ErrorCode::SymplecticViolation, stage, "reconstructed block is not symplectic");

  CMatrix v;
  try {
    v = log_principal(M, tol);
  } catch (const DomainError& e) {
    throw e.within(stage);
  }

  FirstKindCoords w;
  w.B = v.topLeftCorner(n, n);
  w.A = 0.5 * sym_part(CMatrix(v.topRightCorner(n, n)));
  w.C = -0.5 * sym_part(CMatrix(v.bottomLeftCorner(n, n)));
  w.x = g.x + 0.5 * w.B.trace() - 0.5 * g.B.trace();
  return w;
}

}  // namespace quadheis
