#include "quadheis/vacuum.hpp"

#include <cmath>

#include "quadheis/grouplaw.hpp"

namespace quadheis {

namespace {

constexpr cplx I_UNIT(0.0, 1.0);

void require_real_symmetric(const CMatrix& M, const char* stage) {
  require_square(M, stage);
  if (M.imag().norm() > 1e-10 || (M - M.transpose()).norm() > 1e-10)
    throw DomainError(ErrorCode::NotRealSymmetric, stage, "matrix is not real symmetric");
}

void require_commuting(const CMatrix& M, const CMatrix& N, const char* stage) {
  require_same_dim(M, N, stage);
  require_real_symmetric(M, stage);
  require_real_symmetric(N, stage);
  if (commutator(M, N).norm() > 1e-10)
    throw DomainError(ErrorCode::NonCommuting, stage, "[M, N] != 0");
}

// Tr((MN)^k) for k = 1..kmax, index 0 unused.
std::vector<long double> power_traces(const CMatrix& M, const CMatrix& N, int kmax) {
  const Eigen::MatrixXd MN = (M * N).real();
  std::vector<long double> t(kmax + 1, 0.0L);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(MN.rows(), MN.cols());
  for (int k = 1; k <= kmax; ++k) {
    P = P * MN;
    t[k] = P.trace();
  }
  return t;
}

long double falling(int n, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) r *= static_cast<long double>(n - i);
  return r;
}

cplx reordered_scalar(const CMatrix& M, const CMatrix& N, const Tolerances& tol,
                      const char* stage) {
  try {
    return reorder_annih_creator(M, N, tol).scalar;
  } catch (const DomainError& e) {
    if (e.code() == ErrorCode::BranchCut)
      throw DomainError(ErrorCode::DivergentState, stage, "exponential vector not normalizable");
    throw e.within(stage);
  }
}

}  // namespace

Observable make_observable(double lambda, const CMatrix& A, const CMatrix& B) {
  const char* stage = "observable";
  require_same_dim(A, B, stage);
  require_symmetric(A, stage);
  if ((B - B.adjoint()).norm() > 1e-10 * (1.0 + B.norm()))
    throw DomainError(ErrorCode::InvalidArgument, stage, "B is not hermitian");
  if (!std::isfinite(lambda) || !all_finite(A) || !all_finite(B))
    throw DomainError(ErrorCode::InvalidArgument, stage, "non-finite entry");
  return {lambda, sym_part(A), B};
}

cplx char_function(const Observable& obs, const Tolerances& tol) {
  const char* stage = "char_function";
  require_same_dim(obs.A, obs.B, stage);
  const CMatrix iA = I_UNIT * obs.A;
  const CMatrix iB = I_UNIT * obs.B;
  const CMatrix iAbar = I_UNIT * obs.A.conjugate();
  try {
    const SplitData d = split_data(iA, iB, iAbar, 1.0, tol);
    return std::exp(I_UNIT * obs.lambda + d.scalar);
  } catch (const DomainError& e) {
    throw e.within(stage);
  }
}

double exp_vector_norm(const CMatrix& A, const Tolerances& tol) {
  const char* stage = "exp_vector_norm";
  require_symmetric(A, stage);
  const cplx s = reordered_scalar(A.conjugate(), A, tol, stage);
  if (std::abs(s.imag()) > 1e-9)
    throw DomainError(ErrorCode::DivergentState, stage, "squared norm exponent is not real");
  return std::exp(0.5 * s.real());
}

cplx exp_vector_overlap(const CMatrix& A, const CMatrix& B, const Tolerances& tol) {
  const char* stage = "exp_vector_overlap";
  require_same_dim(A, B, stage);
  require_symmetric(A, stage);
  require_symmetric(B, stage);
  return std::exp(reordered_scalar(B.conjugate(), A, tol, stage));
}

double projection_moment(const CMatrix& E, int n) {
  const char* stage = "projection_moment";
  require_square(E, stage);
  if (n < 0) throw DomainError(ErrorCode::InvalidArgument, stage, "n < 0");
  if (E.imag().norm() > 1e-10 || (E - E.transpose()).norm() > 1e-10 ||
      (E * E - E).norm() > 1e-10)
    throw DomainError(ErrorCode::NotProjection, stage, "E is not a real projection");

  // 4^n n! (TrE/2)^(n) = Π_{k=1..n} (2k TrE + 4k(k-1))
  const double tr = E.trace().real();
  const double rank = std::round(tr);
  if (std::abs(tr - rank) <= 1e-9) {
    const __int128 r = static_cast<__int128>(rank);
    __int128 acc = 1;
    bool exact = true;
    for (int k = 1; k <= n && exact; ++k) {
      const __int128 factor = 2 * static_cast<__int128>(k) * r + 4 * static_cast<__int128>(k) * (k - 1);
      exact = !__builtin_mul_overflow(acc, factor, &acc);
    }
    if (exact) return static_cast<double>(acc);
  }
  long double acc = 1.0L;
  for (int k = 1; k <= n; ++k) acc *= 2.0L * k * tr + 4.0L * k * (k - 1);
  return static_cast<double>(acc);
}

std::vector<double> moment_recursion(const CMatrix& M, const CMatrix& N, int n_max) {
  const char* stage = "moment_recursion";
  require_commuting(M, N, stage);
  if (n_max < 0) throw DomainError(ErrorCode::InvalidArgument, stage, "n_max < 0");
  const auto tr = power_traces(M, N, n_max);
  std::vector<long double> m(n_max + 1, 0.0L);
  m[0] = 1.0L;
  for (int n = 1; n <= n_max; ++n) {
    long double sum = 0.0L;
    for (int k = 1; k <= n; ++k) {
      const long double f = falling(n, k);
      sum += std::ldexp(1.0L, 2 * k - 1) * f * f * tr[k] * m[n - k];
    }
    m[n] = sum / n;
  }
  return {m.begin(), m.end()};
}

double cross_moment(const CMatrix& M, const CMatrix& N, int n, int m) {
  const char* stage = "cross_moment";
  require_commuting(M, N, stage);
  if (m < 1) throw DomainError(ErrorCode::InvalidArgument, stage, "m < 1");
  if (n <= m) throw DomainError(ErrorCode::BadOrder, stage, "requires n > m");
  const auto tr = power_traces(M, N, m);

  auto sigma = [&](auto&& self, int j, int l) -> long double {
    if (l == 0) return j == 0 ? 1.0L : 0.0L;
    if (j == l) return moment_recursion(M, N, j)[j];
    long double sum = 0.0L;
    for (int k = 1; k <= l - 1; ++k)
      sum += std::ldexp(1.0L, 2 * k - 1) * falling(j, k) * falling(l, k) * tr[k] *
             self(self, j - k, l - k);
    return sum / l;
  };
  return static_cast<double>(sigma(sigma, n, m));
}

}  // namespace quadheis
