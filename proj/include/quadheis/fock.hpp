#pragma once

#include <map>
#include <vector>

#include "quadheis/algebra.hpp"

namespace quadheis {

using Occupation = std::vector<int>;

// Truncated symmetric Fock space over `modes` oscillators, keeping every
// occupation tuple with total particle number <= cutoff. Basis order is graded
// lexicographic: by total occupation, then lexicographically ascending, so
// (0,1) precedes (1,0).
class FockSpace {
 public:
  FockSpace(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Occupation>& basis() const { return basis_; }

  // -1 when the tuple lies outside the truncation.
  Eigen::Index index_of(const Occupation& occ) const;
  // Basis indices of the n-particle sector, in basis order.
  std::vector<Eigen::Index> sector(int n) const;
  // Indices with total occupation <= level.
  std::vector<Eigen::Index> up_to(int level) const;

  CVector vacuum() const;
  CVector number_state(const Occupation& occ) const;

  // Ladder matrices; creation out of the truncated space is dropped.
  CMatrix annihilator(int k) const;
  CMatrix creator(int k) const;

  // c·1 + Σ A_jk a†_j a†_k + Σ B_jk a†_j a_k + Σ C_jk a_j a_k, built entry by
  // entry from the ladder action on each basis vector.
  CMatrix materialize(const QuadElement& E) const;

 private:
  int modes_;
  int cutoff_;
  std::vector<Occupation> basis_;
  std::map<Occupation, Eigen::Index> index_;
};

// e^{op} v by Taylor series on scaled substeps, independent of the Padé
// exponential used by the library.
CVector exp_apply(const CMatrix& op, const CVector& v);
// e^{op} as a dense matrix by Taylor scaling and squaring.
CMatrix oracle_expm(const CMatrix& op);

// <Φ, e^{ops[0]} ... e^{ops[k-1]} Φ>, applied right to left.
cplx vacuum_expectation(const FockSpace& space, const std::vector<CMatrix>& exponents);

// e^{ops[0]} ... e^{ops[k-1]} v.
CVector apply_exponentials(const std::vector<CMatrix>& exponents, const CVector& v);

// Norm difference between e^{E_1}...e^{E_k} probe computed at the space's
// cutoff and at cutoff - 4 (embedded back). probe must live in the smaller space.
double truncation_residual(const FockSpace& space, const std::vector<QuadElement>& product,
                           const CVector& probe);
double truncation_residual(const FockSpace& space, const QuadElement& E, const CVector& probe);
// One materialization shared across several probes.
std::vector<double> truncation_residuals(const FockSpace& space,
                                        const std::vector<QuadElement>& product,
                                        const std::vector<CVector>& probes);

// Re-express a vector of `from` in the basis of `to` (missing entries dropped or zero).
CVector transfer(const FockSpace& from, const FockSpace& to, const CVector& v);

// Rows/cols selection helper.
CMatrix sub_block(const CMatrix& M, const std::vector<Eigen::Index>& rows,
                  const std::vector<Eigen::Index>& cols);

}  // namespace quadheis
