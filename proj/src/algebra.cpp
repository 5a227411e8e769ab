#include "quadheis/algebra.hpp"

namespace quadheis {

QuadElement QuadElement::zero(Eigen::Index n) {
  return {cplx(0.0), CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
}

QuadElement make_element(cplx c, const CMatrix& A, const CMatrix& B, const CMatrix& C) {
  const char* stage = "quad_element";
  require_same_dim(A, B, stage);
  require_same_dim(B, C, stage);
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !all_finite(A) ||
      !all_finite(B) || !all_finite(C))
    throw DomainError(ErrorCode::InvalidArgument, stage, "non-finite entry");
  require_symmetric(A, stage);
  require_symmetric(C, stage);
  return {c, sym_part(A), B, sym_part(C)};
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
  require_same_dim(x.B, y.B, "add");
  return {x.c + y.c, x.A + y.A, x.B + y.B, x.C + y.C};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
  require_same_dim(x.B, y.B, "sub");
  return {x.c - y.c, x.A - y.A, x.B - y.B, x.C - y.C};
}

QuadElement operator*(cplx s, const QuadElement& x) {
  return {s * x.c, s * x.A, s * x.B, s * x.C};
}

double max_abs_diff(const QuadElement& x, const QuadElement& y) {
  require_same_dim(x.B, y.B, "max_abs_diff");
  double d = std::abs(x.c - y.c);
  d = std::max(d, max_abs(x.A - y.A));
  d = std::max(d, max_abs(x.B - y.B));
  d = std::max(d, max_abs(x.C - y.C));
  return d;
}

QuadElement bracket(const QuadElement& E1, const QuadElement& E2) {
  require_same_dim(E1.B, E2.B, "bracket");
  QuadElement r;
  r.c = 2.0 * (E2.A * E1.C).trace() - 2.0 * (E1.A * E2.C).trace();
  r.A = circ(E1.B, E2.A) - circ(E2.B, E1.A);
  r.B = commutator(E1.B, E2.B) + 4.0 * E2.A * E1.C - 4.0 * E1.A * E2.C;
  r.C = circ(E1.C, E2.B) - circ(E2.C, E1.B);
  return r;
}

QuadElement involution(const QuadElement& E) {
  return {std::conj(E.c), E.C.adjoint(), E.B.adjoint(), E.A.adjoint()};
}

QuadElement adjoint_exp_annihilator(const CMatrix& Cm, const QuadElement& target) {
  const char* stage = "adjoint_exp_annihilator";
  require_same_dim(Cm, target.B, stage);
  require_symmetric(Cm, stage);
  const CMatrix K = sym_part(Cm);
  const CMatrix AK = target.A * K;
  QuadElement r = target;
  r.c += 2.0 * AK.trace();
  r.B += 4.0 * AK;
  r.C += circ(K, target.B) + 2.0 * circ(K, AK);
  r.C = sym_part(r.C);
  return r;
}

QuadElement adjoint_exp_creator(const CMatrix& Am, const QuadElement& target) {
  const char* stage = "adjoint_exp_creator";
  require_same_dim(Am, target.B, stage);
  require_symmetric(Am, stage);
  const CMatrix K = sym_part(Am);
  const CMatrix KC = K * target.C;
  QuadElement r = target;
  r.c -= 2.0 * KC.trace();
  r.A += -circ(target.B, K) + 2.0 * circ(KC, K);
  r.A = sym_part(r.A);
  r.B -= 4.0 * KC;
  return r;
}

QuadElement adjoint_exp_preservation(const CMatrix& Bm, const QuadElement& target, double tol) {
  const char* stage = "adjoint_exp_preservation";
  require_same_dim(Bm, target.B, stage);
  try {
    QuadElement r;
    r.c = target.c;
    r.A = sym_part(hatcirc_left(CMatrix(-Bm), target.A, tol));
    r.B = exp_matrix(Bm) * target.B * exp_matrix(-Bm);
    r.C = sym_part(hatcirc_right(target.C, Bm, tol));
    return r;
  } catch (const DomainError& e) {
    throw e.within(stage);
  }
}

static long long isqrt_exact(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::vector<DiophPair> dioph_pairs(long long n_max) {
  if (n_max < 1) throw DomainError(ErrorCode::InvalidArgument, "dioph_pairs", "n_max < 1");
  if (n_max > 2000000000LL)
    throw DomainError(ErrorCode::InvalidArgument, "dioph_pairs", "n_max too large");
  std::vector<DiophPair> out;
  for (long long n = 1; n <= n_max; ++n) {
    const long long target = 2 * n * n + 2;
    const long long N = isqrt_exact(target);
    if (N * N == target) out.push_back({n, N});
  }
  return out;
}

}  // namespace quadheis
