#include "quadheis/grouplaw.hpp"

namespace quadheis {

namespace {

QuadElement pure(const CMatrix& A, const CMatrix& B, const CMatrix& C) {
  return {cplx(0.0), A, B, C};
}

// e^{T} with T = c + a†Aa† + a†Ba + aCa rewritten in second-kind form.
Reordered from_split(const QuadElement& T, const Tolerances& tol) {
  const SplitData d = split_data(T.A, T.B, T.C, 1.0, tol);
  return {T.c + d.scalar, 0.5 * d.f_hat, d.g, 0.5 * d.h_hat, d.s_condition};
}

template <typename F>
auto staged(const std::string& stage, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw e.within(stage);
  }
}

}  // namespace

Reordered reorder_annih_creator(const CMatrix& M, const CMatrix& N, const Tolerances& tol) {
  const char* stage = "reorder_annih_creator";
  require_same_dim(M, N, stage);
  require_symmetric(M, stage);
  require_symmetric(N, stage);
  // e^{aMa} e^{a†Na†} = exp(e^{ad aMa} a†Na†) e^{aMa}
  const CMatrix Z = CMatrix::Zero(N.rows(), N.cols());
  const QuadElement moved = adjoint_exp_annihilator(M, pure(N, Z, Z));
  Reordered r = staged(stage, [&] { return from_split(moved, tol); });
  r.C = sym_part(CMatrix(r.C + M));
  return r;
}

Reordered reorder_annih_preservation(const CMatrix& M, const CMatrix& N, const Tolerances& tol) {
  const char* stage = "reorder_annih_preservation";
  require_same_dim(M, N, stage);
  require_symmetric(M, stage);
  const CMatrix Z = CMatrix::Zero(N.rows(), N.cols());
  const QuadElement moved = adjoint_exp_annihilator(M, pure(Z, N, Z));
  Reordered r = staged(stage, [&] { return from_split(moved, tol); });
  r.C = sym_part(CMatrix(r.C + M));
  return r;
}

Reordered reorder_preservation_creator(const CMatrix& M, const CMatrix& N, const Tolerances& tol) {
  const char* stage = "reorder_preservation_creator";
  require_same_dim(M, N, stage);
  require_symmetric(N, stage);
  // e^{a†Ma} e^{a†Na†} = e^{a†Na†} exp(e^{-ad a†Na†} a†Ma)
  const CMatrix Z = CMatrix::Zero(N.rows(), N.cols());
  const QuadElement moved = adjoint_exp_creator(CMatrix(-N), pure(Z, M, Z));
  Reordered r = staged(stage, [&] { return from_split(moved, tol); });
  r.A = sym_part(CMatrix(r.A + N));
  return r;
}

Reordered reorder_preservation_creator_hatcirc(const CMatrix& M, const CMatrix& N,
                                               const Tolerances& tol) {
  const char* stage = "reorder_preservation_creator_hatcirc";
  require_same_dim(M, N, stage);
  require_symmetric(N, stage);
  Reordered r;
  r.A = staged(stage, [&] { return sym_part(hatcirc_left(CMatrix(-M), N, tol.series)); });
  r.B = M;
  r.C = CMatrix::Zero(N.rows(), N.cols());
  return r;
}

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Creator: return "creator";
    case Kind::Annihilator: return "annihilator";
    case Kind::Preservation: return "preservation";
    case Kind::Mixed: return "mixed";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& s) {
  if (s == "creator") return Kind::Creator;
  if (s == "annihilator") return Kind::Annihilator;
  if (s == "preservation") return Kind::Preservation;
  if (s == "mixed") return Kind::Mixed;
  throw DomainError(ErrorCode::InvalidArgument, "kind", "unknown kind '" + s + "'");
}

CMatrix combine_like(Kind kind, const CMatrix& M, const CMatrix& N, const Tolerances& tol) {
  const char* stage = "combine_like";
  require_same_dim(M, N, stage);
  switch (kind) {
    case Kind::Creator:
    case Kind::Annihilator:
      require_symmetric(M, stage);
      require_symmetric(N, stage);
      return sym_part(CMatrix(M + N));
    case Kind::Preservation:
      return staged(stage, [&] { return CMatrix(M + N + bch_matrix(M, N, tol)); });
    case Kind::Mixed:
      break;
  }
  throw DomainError(ErrorCode::InvalidArgument, stage, "mixed factors do not combine");
}

SecondKindCoords compose_second(const SecondKindCoords& g1, const SecondKindCoords& g2,
                                const Tolerances& tol, ComposeTrace* trace) {
  const char* stage = "compose_second";
  require_same_dim(g1.B, g2.B, stage);
  auto note = [&](const char* name, double cond) {
    if (trace) trace->push_back({name, cond});
  };

  // G(g1) G(g2) = e^{x1+x2} e^{A1} e^{B1} [e^{C1} e^{A2}] e^{B2} e^{C2}
  const Reordered xyz = staged(stage, [&] { return reorder_annih_creator(g1.C, g2.A, tol); });
  note("reorder_annih_creator", xyz.s_condition);
  // e^{B1} e^{X} -> e^{A''} e^{G1}
  const Reordered left =
      staged(stage, [&] { return reorder_preservation_creator(g1.B, xyz.A, tol); });
  note("reorder_preservation_creator", left.s_condition);
  // e^{Z} e^{B2} -> e^{G2} e^{C''}
  const Reordered right =
      staged(stage, [&] { return reorder_annih_preservation(xyz.C, g2.B, tol); });
  note("reorder_annih_preservation", right.s_condition);

  const CMatrix E =
      staged(stage, [&] { return combine_like(Kind::Preservation, left.B, xyz.B, tol); });
  note("combine_like:E", 1.0);
  const CMatrix B = staged(stage, [&] { return combine_like(Kind::Preservation, E, right.B, tol); });
  note("combine_like:B", 1.0);

  cplx x = g1.x;
  x += g2.x;
  x += xyz.scalar;
  x += left.scalar;
  x += right.scalar;

  SecondKindCoords out;
  out.x = x;
  out.A = combine_like(Kind::Creator, g1.A, left.A);
  out.B = B;
  out.C = combine_like(Kind::Annihilator, right.C, g2.C);
  return out;
}

FirstKindCoords compose_first(const FirstKindCoords& w1, const FirstKindCoords& w2,
                              const Tolerances& tol, ComposeTrace* trace) {
  const char* stage = "compose_first";
  const SecondKindCoords s1 = staged(stage, [&] {
    try {
      return split(w1, 1.0, tol);
    } catch (const DomainError& e) {
      throw e.within("operand1");
    }
  });
  const SecondKindCoords s2 = staged(stage, [&] {
    try {
      return split(w2, 1.0, tol);
    } catch (const DomainError& e) {
      throw e.within("operand2");
    }
  });
  const SecondKindCoords s = staged(stage, [&] { return compose_second(s1, s2, tol, trace); });
  return staged(stage, [&] { return merge(s, tol); });
}

SixFactorForm normal_order_six(const CMatrix& A, const CMatrix& B, const CMatrix& C,
                               const CMatrix& Ap, const CMatrix& Bp, const CMatrix& Cp,
                               const Tolerances& tol) {
  const char* stage = "normal_order_six";
  for (const CMatrix* m : {&A, &C, &Ap, &Bp, &Cp}) require_same_dim(*m, B, stage);
  for (const CMatrix* m : {&A, &C, &Ap, &Cp}) require_symmetric(*m, stage);

  // e^{C} e^{A'} -> c1 e^{A1} e^{B1} e^{C1}
  const Reordered r1 = staged(stage, [&] { return reorder_annih_creator(C, Ap, tol); });
  // e^{C1} e^{B'} -> c2 e^{B2} e^{C2}
  const Reordered r2 = staged(stage, [&] { return reorder_annih_preservation(r1.C, Bp, tol); });
  // e^{B} e^{A1} = e^{e^{∘̂B} ∘̂ A1} e^{B}
  const CMatrix moved =
      staged(stage, [&] { return sym_part(hatcirc_left(CMatrix(-B), r1.A, tol.series)); });

  SixFactorForm out;
  out.c1 = std::exp(r1.scalar);
  out.c2 = std::exp(r2.scalar);
  out.A4 = combine_like(Kind::Creator, A, moved);
  out.B = B;
  out.B1 = r1.B;
  out.B2 = r2.B;
  out.C3 = combine_like(Kind::Annihilator, r2.C, Cp);
  return out;
}

}  // namespace quadheis
