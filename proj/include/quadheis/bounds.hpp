#pragma once

#include <utility>
#include <vector>

#include "quadheis/fock.hpp"
#include "quadheis/grouplaw.hpp"

namespace quadheis {

struct BoundReport {
  double analytic_bound;
  double measured_norm;
  int sector;
  Kind kind;
  bool satisfied;  // measured <= analytic (1 + 1e-9)
};

// |A| = d^2 max |A_jk|
double abs_norm(const CMatrix& A);

// Norm of a†Aa† / aAa / a†Aa restricted to the n-particle sector.
double sector_bound(Kind kind, const CMatrix& A, int n);
// Same for the m-th power of the operator.
double power_bound(Kind kind, const CMatrix& A, int n, int m);
// Any product of m quadratic factors with norms |A_k|, restricted to sector n.
double mixed_product_bound(const std::vector<double>& norms, int n);

// 1 / (9 n max(|A|, |C|, |D|)); +inf when all three vanish.
double convergence_radius(double normA, double normC, double normD, int n);
// (9 n max |z|)^m, the m-th term bound of the exponential series on sector n.
double series_term_bound(double normA, double normC, double normD, int n, int m, double z);

// Largest singular value of each interior n-sector block of the materialized
// operator, against sector_bound.
std::vector<BoundReport> verify_sector_bounds(const FockSpace& space, const CMatrix& A, Kind kind);

// Product of factors (applied right to left) restricted to sector n, against
// mixed_product_bound; requires n + 2m <= cutoff.
BoundReport verify_mixed_bound(const FockSpace& space,
                               const std::vector<std::pair<Kind, CMatrix>>& factors, int n);

// ||a_k| sector n|| or ||a†_k| sector n||.
double ladder_sector_norm(const FockSpace& space, int k, bool creation, int n);

}  // namespace quadheis
