#include "quadheis/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quadheis {

namespace {

bool within(double measured, double bound) { return measured <= bound * (1.0 + 1e-9); }

QuadElement place(Kind kind, const CMatrix& A) {
  QuadElement E = QuadElement::zero(A.rows());
  switch (kind) {
    case Kind::Creator: E.A = A; break;
    case Kind::Annihilator: E.C = A; break;
    case Kind::Preservation: E.B = A; break;
    case Kind::Mixed:
      throw DomainError(ErrorCode::InvalidArgument, "bounds", "mixed is not a single sector kind");
  }
  return E;
}

// Particle-number shift of one factor.
int shift(Kind kind) {
  return kind == Kind::Creator ? 2 : kind == Kind::Annihilator ? -2 : 0;
}

}  // namespace

double abs_norm(const CMatrix& A) {
  require_square(A, "abs_norm");
  const double d = static_cast<double>(A.rows());
  return d * d * max_abs(A);
}

double sector_bound(Kind kind, const CMatrix& A, int n) {
  return power_bound(kind, A, n, 1);
}

double power_bound(Kind kind, const CMatrix& A, int n, int m) {
  const char* stage = "power_bound";
  if (n < 0 || m < 0) throw DomainError(ErrorCode::InvalidArgument, stage, "n, m >= 0");
  const double a = std::pow(abs_norm(A), m);
  double prod = 1.0;
  switch (kind) {
    case Kind::Creator:
      for (int i = 1; i <= 2 * m; ++i) prod *= n + i;
      return a * std::sqrt(prod);
    case Kind::Annihilator:
      if (!(2 * m - 1 < n)) return 0.0;
      for (int i = 0; i < 2 * m; ++i) prod *= n - i;
      return a * std::sqrt(prod);
    case Kind::Preservation:
      return a * std::pow(static_cast<double>(n), m);
    case Kind::Mixed:
      break;
  }
  throw DomainError(ErrorCode::InvalidArgument, stage, "use mixed_product_bound");
}

double mixed_product_bound(const std::vector<double>& norms, int n) {
  const char* stage = "mixed_product_bound";
  if (norms.empty()) throw DomainError(ErrorCode::EmptyInput, stage, "no factors");
  if (n < 0) throw DomainError(ErrorCode::InvalidArgument, stage, "n < 0");
  const int m = static_cast<int>(norms.size());
  const double mx = *std::max_element(norms.begin(), norms.end());
  double prod = 1.0;
  for (int i = 1; i <= 2 * m; ++i) prod *= n + i;
  return std::pow(mx, m) * std::sqrt(prod);
}

double convergence_radius(double normA, double normC, double normD, int n) {
  if (n < 1) throw DomainError(ErrorCode::InvalidArgument, "convergence_radius", "n < 1");
  const double mx = std::max({normA, normC, normD});
  if (mx < 0.0) throw DomainError(ErrorCode::InvalidArgument, "convergence_radius", "negative norm");
  if (mx == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (9.0 * n * mx);
}

double series_term_bound(double normA, double normC, double normD, int n, int m, double z) {
  const double mx = std::max({normA, normC, normD});
  return std::pow(9.0 * n * mx * std::abs(z), m);
}

std::vector<BoundReport> verify_sector_bounds(const FockSpace& space, const CMatrix& A, Kind kind) {
  if (A.rows() != space.modes())
    throw DomainError(ErrorCode::DimensionMismatch, "verify_sector_bounds", "A dim != modes");
  const CMatrix op = space.materialize(place(kind, A));
  const int s = shift(kind);
  std::vector<BoundReport> out;
  for (int n = 0; n + std::max(s, 0) <= space.cutoff(); ++n) {
    double measured = 0.0;
    if (n + s >= 0) measured = op_norm(sub_block(op, space.sector(n + s), space.sector(n)));
    const double bound = sector_bound(kind, A, n);
    out.push_back({bound, measured, n, kind, within(measured, bound)});
  }
  return out;
}

BoundReport verify_mixed_bound(const FockSpace& space,
                               const std::vector<std::pair<Kind, CMatrix>>& factors, int n) {
  const char* stage = "verify_mixed_bound";
  if (factors.empty()) throw DomainError(ErrorCode::EmptyInput, stage, "no factors");
  const int m = static_cast<int>(factors.size());
  if (n < 0 || n + 2 * m > space.cutoff())
    throw DomainError(ErrorCode::InvalidArgument, stage, "sector not interior");
  std::vector<double> norms;
  for (const auto& f : factors) norms.push_back(abs_norm(f.second));
  // factors listed left to right act right to left
  CMatrix prod = CMatrix::Identity(space.dimension(), space.dimension());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    prod = space.materialize(place(it->first, it->second)) * prod;
  const CMatrix cols = sub_block(prod, space.up_to(space.cutoff()), space.sector(n));
  const double measured = op_norm(cols);
  const double bound = mixed_product_bound(norms, n);
  return {bound, measured, n, Kind::Mixed, within(measured, bound)};
}

double ladder_sector_norm(const FockSpace& space, int k, bool creation, int n) {
  const CMatrix op = creation ? space.creator(k) : space.annihilator(k);
  const int target = creation ? n + 1 : n - 1;
  if (target < 0) return 0.0;
  if (target > space.cutoff())
    throw DomainError(ErrorCode::InvalidArgument, "ladder_sector_norm", "sector not interior");
  return op_norm(sub_block(op, space.sector(target), space.sector(n)));
}

}  // namespace quadheis
