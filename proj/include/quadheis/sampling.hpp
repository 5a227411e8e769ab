#pragma once

#include <cstdint>
#include <random>

#include "quadheis/bounds.hpp"

namespace quadheis {

// Seeded generator of test matrices. Randomized "norm <= r" draws use the
// entrywise |·| norm (d^2 max|A_jk|) unless stated otherwise, since that is the
// norm controlling Fock-space growth.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  cplx complex_unit() { return {uniform(-1, 1), uniform(-1, 1)}; }

  CMatrix complex_matrix(Eigen::Index n) {
    CMatrix M(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) M(i, j) = complex_unit();
    return M;
  }

  // Rescaled so that abs_norm lies in [bound/2, bound].
  CMatrix general(Eigen::Index n, double bound) { return rescale_abs(complex_matrix(n), bound); }
  CMatrix symmetric(Eigen::Index n, double bound) {
    return rescale_abs(sym_part(complex_matrix(n)), bound);
  }
  CMatrix hermitian(Eigen::Index n, double bound) {
    const CMatrix M = complex_matrix(n);
    return rescale_abs(CMatrix(0.5 * (M + M.adjoint())), bound);
  }

  // Same, in the spectral norm.
  CMatrix general_spectral(Eigen::Index n, double bound) {
    return rescale_spectral(complex_matrix(n), bound);
  }
  CMatrix symmetric_spectral(Eigen::Index n, double bound) {
    return rescale_spectral(sym_part(complex_matrix(n)), bound);
  }

  // Random real orthogonal matrix (QR of a Gaussian-like draw).
  Eigen::MatrixXd orthogonal(Eigen::Index n) {
    Eigen::MatrixXd G(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) G(i, j) = uniform(-1, 1);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  CMatrix rescale_abs(const CMatrix& M, double bound) {
    const double a = abs_norm(M);
    const double target = bound * uniform(0.5, 1.0);
    return a == 0.0 ? M : CMatrix(M * (target / a));
  }
  CMatrix rescale_spectral(const CMatrix& M, double bound) {
    const double a = op_norm(M);
    const double target = bound * uniform(0.5, 1.0);
    return a == 0.0 ? M : CMatrix(M * (target / a));
  }

  std::mt19937_64 rng_;
};

}  // namespace quadheis
