#pragma once

#include <string>
#include <vector>

#include "quadheis/splitting.hpp"

namespace quadheis {

// e^{scalar} e^{a†Aa†} e^{a†Ba} e^{aCa}
struct Reordered {
  cplx scalar{0.0, 0.0};
  CMatrix A, B, C;
  double s_condition = 1.0;
};

// e^{aMa} e^{a†Na†}
Reordered reorder_annih_creator(const CMatrix& M, const CMatrix& N, const Tolerances& tol = {});
// e^{aMa} e^{a†Na}; the creator part is zero.
Reordered reorder_annih_preservation(const CMatrix& M, const CMatrix& N,
                                     const Tolerances& tol = {});
// e^{a†Ma} e^{a†Na†}; the annihilator part is zero.
Reordered reorder_preservation_creator(const CMatrix& M, const CMatrix& N,
                                       const Tolerances& tol = {});
// Same product as e^{a†(e^{∘̂M} ∘̂ N)a†} e^{a†Ma}, via the conjugation series.
Reordered reorder_preservation_creator_hatcirc(const CMatrix& M, const CMatrix& N,
                                               const Tolerances& tol = {});

enum class Kind { Creator, Annihilator, Preservation, Mixed };
const char* to_string(Kind k);
Kind kind_from_string(const std::string& s);

// Exponent of e^{a†Ma}e^{a†Na} (resp. creator / annihilator analogues).
CMatrix combine_like(Kind kind, const CMatrix& M, const CMatrix& N, const Tolerances& tol = {});

struct StageRecord {
  std::string stage;
  double s_condition;
};
using ComposeTrace = std::vector<StageRecord>;

SecondKindCoords compose_second(const SecondKindCoords& g1, const SecondKindCoords& g2,
                                const Tolerances& tol = {}, ComposeTrace* trace = nullptr);
FirstKindCoords compose_first(const FirstKindCoords& w1, const FirstKindCoords& w2,
                              const Tolerances& tol = {}, ComposeTrace* trace = nullptr);

// c1 c2 e^{a†A4a†} e^{a†Ba} e^{a†B1a} e^{a†B2a} e^{aC3a}
struct SixFactorForm {
  cplx c1, c2;
  CMatrix A4, B, B1, B2, C3;
};

// Normal order of e^{a†Aa†}e^{a†Ba}e^{aCa}e^{a†A'a†}e^{a†B'a}e^{aC'a}.
SixFactorForm normal_order_six(const CMatrix& A, const CMatrix& B, const CMatrix& C,
                               const CMatrix& Ap, const CMatrix& Bp, const CMatrix& Cp,
                               const Tolerances& tol = {});

}  // namespace quadheis
