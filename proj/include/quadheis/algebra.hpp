#pragma once

#include <vector>

#include "quadheis/cmatrix.hpp"

namespace quadheis {

// c·1 + a†Aa† + a†Ba + aCa. A and C are symmetric by construction when built
// through make_element; the plain aggregate is kept for internal arithmetic.
struct QuadElement {
  cplx c{0.0, 0.0};
  CMatrix A, B, C;

  Eigen::Index dim() const { return B.rows(); }
  static QuadElement zero(Eigen::Index n);
};

// Validates dims and finiteness; symmetrizes A and C after rejecting inputs with
// ||X - X^T|| > 1e-8 (1 + ||X||).
QuadElement make_element(cplx c, const CMatrix& A, const CMatrix& B, const CMatrix& C);

QuadElement operator+(const QuadElement& x, const QuadElement& y);
QuadElement operator-(const QuadElement& x, const QuadElement& y);
QuadElement operator*(cplx s, const QuadElement& x);

// max over the four components of the entrywise modulus difference.
double max_abs_diff(const QuadElement& x, const QuadElement& y);

QuadElement bracket(const QuadElement& E1, const QuadElement& E2);
QuadElement involution(const QuadElement& E);

// e^{X} T e^{-X} for X = aCa, a†Aa†, a†Ba respectively. The first two are exact
// finite sums since ad X is nilpotent on the algebra.
QuadElement adjoint_exp_annihilator(const CMatrix& Cm, const QuadElement& target);
QuadElement adjoint_exp_creator(const CMatrix& Am, const QuadElement& target);
QuadElement adjoint_exp_preservation(const CMatrix& Bm, const QuadElement& target,
                                     double tol = 1e-14);

struct DiophPair {
  long long n;
  long long N;
  bool operator==(const DiophPair&) const = default;
};

// All (n, N) with 1 <= n <= n_max and N^2 = 2n^2 + 2.
std::vector<DiophPair> dioph_pairs(long long n_max);

}  // namespace quadheis
