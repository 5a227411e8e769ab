#pragma once

#include <vector>

#include "quadheis/algebra.hpp"

namespace quadheis {

// H = λ + a†Aa† + a†Ba + aĀa with A symmetric and B hermitian.
struct Observable {
  double lambda = 0.0;
  CMatrix A, B;
};

Observable make_observable(double lambda, const CMatrix& A, const CMatrix& B);

// <Φ, e^{iH} Φ>
cplx char_function(const Observable& obs, const Tolerances& tol = {});

// ||e^{a†Aa†} Φ||
double exp_vector_norm(const CMatrix& A, const Tolerances& tol = {});

// Σ_i (ψ_A)_i conj((ψ_B)_i) with ψ_X = e^{a†Xa†} Φ, i.e. linear in the first slot.
cplx exp_vector_overlap(const CMatrix& A, const CMatrix& B, const Tolerances& tol = {});

// ||(a†Ea†)^n Φ||^2 for a real projection E.
double projection_moment(const CMatrix& E, int n);

// m_k = <(a†Ma†)^k Φ, (a†Na†)^k Φ>, k = 0..n_max, for commuting real symmetric M, N.
std::vector<double> moment_recursion(const CMatrix& M, const CMatrix& N, int n_max);

// <(a†Ma†)^n Φ, (a†Na†)^m Φ> for n > m.
double cross_moment(const CMatrix& M, const CMatrix& N, int n, int m);

}  // namespace quadheis
