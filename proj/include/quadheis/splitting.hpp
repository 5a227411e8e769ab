#pragma once

#include "quadheis/algebra.hpp"

namespace quadheis {

// Parameters of a group element; A and C symmetric. First kind reads
// W = e^{x + a†Aa† + a†Ba + aCa}, second kind G = e^x e^{a†Aa†} e^{a†Ba} e^{aCa}.
struct Coords {
  cplx x{0.0, 0.0};
  CMatrix A, B, C;
  Eigen::Index dim() const { return B.rows(); }
};
struct FirstKindCoords : Coords {};
struct SecondKindCoords : Coords {};

template <typename K>
K make_coords(cplx x, const CMatrix& A, const CMatrix& B, const CMatrix& C) {
  const QuadElement e = make_element(x, A, B, C);
  K k;
  k.x = e.c;
  k.A = e.A;
  k.B = e.B;
  k.C = e.C;
  return k;
}

template <typename K>
K identity_coords(Eigen::Index n) {
  K k;
  k.A = k.B = k.C = CMatrix::Zero(n, n);
  return k;
}

double max_abs_diff(const Coords& x, const Coords& y);

// Blocks of e^{tv} = [[P, Q], [-R, S]] and the derived splitting data.
struct SplitData {
  CMatrix P, Q, R, S;
  CMatrix f_hat, g, h_hat;
  cplx scalar;        // -(t/2) Tr B + ½ Tr g
  double s_condition;  // sigma_min(S) / ||e^{tv}||
};

// v = [[B, 2A], [-2C, -B^T]]
CMatrix sp_generator(const CMatrix& A, const CMatrix& B, const CMatrix& C);

SplitData split_data(const CMatrix& A, const CMatrix& B, const CMatrix& C, double t,
                     const Tolerances& tol = {});

SecondKindCoords split(const FirstKindCoords& w, double t = 1.0, const Tolerances& tol = {});
FirstKindCoords merge(const SecondKindCoords& g, const Tolerances& tol = {});

// ||M^T J M - J||
double symplectic_residual(const CMatrix& M);

}  // namespace quadheis
