#include "quadheis/fock.hpp"

#include <Eigen/SparseCore>
#include <cmath>
#include <numeric>

namespace quadheis {

namespace {

void compositions(int remaining, int slots, Occupation& prefix, std::vector<Occupation>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    prefix.push_back(k);
    compositions(remaining - k, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

int total(const Occupation& o) { return std::accumulate(o.begin(), o.end(), 0); }

double norm1(const CMatrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

FockSpace::FockSpace(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (modes < 1 || cutoff < 0)
    throw DomainError(ErrorCode::InvalidArgument, "fock_space", "modes >= 1 and cutoff >= 0");
  Occupation prefix;
  for (int n = 0; n <= cutoff; ++n) compositions(n, modes, prefix, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    index_.emplace(basis_[i], static_cast<Eigen::Index>(i));
}

Eigen::Index FockSpace::index_of(const Occupation& occ) const {
  const auto it = index_.find(occ);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Eigen::Index> FockSpace::sector(int n) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (total(basis_[i]) == n) out.push_back(static_cast<Eigen::Index>(i));
  return out;
}

std::vector<Eigen::Index> FockSpace::up_to(int level) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (total(basis_[i]) <= level) out.push_back(static_cast<Eigen::Index>(i));
  return out;
}

CVector FockSpace::vacuum() const { return number_state(Occupation(modes_, 0)); }

CVector FockSpace::number_state(const Occupation& occ) const {
  const Eigen::Index i = index_of(occ);
  if (i < 0) throw DomainError(ErrorCode::InvalidArgument, "number_state", "outside truncation");
  CVector v = CVector::Zero(dimension());
  v(i) = 1.0;
  return v;
}

CMatrix FockSpace::annihilator(int k) const {
  CMatrix M = CMatrix::Zero(dimension(), dimension());
  for (Eigen::Index col = 0; col < dimension(); ++col) {
    Occupation o = basis_[col];
    if (o[k] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(o[k]));
    --o[k];
    M(index_of(o), col) = amp;
  }
  return M;
}

CMatrix FockSpace::creator(int k) const {
  CMatrix M = CMatrix::Zero(dimension(), dimension());
  for (Eigen::Index col = 0; col < dimension(); ++col) {
    Occupation o = basis_[col];
    const double amp = std::sqrt(o[k] + 1.0);
    ++o[k];
    const Eigen::Index row = index_of(o);
    if (row >= 0) M(row, col) = amp;
  }
  return M;
}

CMatrix FockSpace::materialize(const QuadElement& E) const {
  if (E.A.rows() != modes_ || E.B.rows() != modes_ || E.C.rows() != modes_)
    throw DomainError(ErrorCode::DimensionMismatch, "materialize", "element dim != modes");
  const Eigen::Index dim = dimension();
  CMatrix M = CMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Occupation& occ = basis_[col];
    M(col, col) += E.c;
    for (int j = 0; j < modes_; ++j)
      for (int k = 0; k < modes_; ++k) {
        if (E.A(j, k) != 0.0) {  // a†_j a†_k
          Occupation o = occ;
          double amp = std::sqrt(o[k] + 1.0);
          ++o[k];
          amp *= std::sqrt(o[j] + 1.0);
          ++o[j];
          const Eigen::Index row = index_of(o);
          if (row >= 0) M(row, col) += E.A(j, k) * amp;
        }
        if (E.B(j, k) != 0.0 && occ[k] > 0) {  // a†_j a_k
          Occupation o = occ;
          double amp = std::sqrt(static_cast<double>(o[k]));
          --o[k];
          amp *= std::sqrt(o[j] + 1.0);
          ++o[j];
          const Eigen::Index row = index_of(o);
          if (row >= 0) M(row, col) += E.B(j, k) * amp;
        }
        if (E.C(j, k) != 0.0 && occ[k] > 0) {  // a_j a_k
          Occupation o = occ;
          double amp = std::sqrt(static_cast<double>(o[k]));
          --o[k];
          if (o[j] == 0) continue;
          amp *= std::sqrt(static_cast<double>(o[j]));
          --o[j];
          M(index_of(o), col) += E.C(j, k) * amp;
        }
      }
  }
  return M;
}

CVector exp_apply(const CMatrix& op, const CVector& v) {
  const int steps = std::max(1, static_cast<int>(std::ceil(norm1(op))));
  // Quadratic generators have O(d^2) entries per column.
  const Eigen::SparseMatrix<cplx> scaled = (op / static_cast<double>(steps)).sparseView();
  CVector w = v;
  for (int s = 0; s < steps; ++s) {
    CVector term = w;
    CVector acc = w;
    for (int k = 1; k < 200; ++k) {
      term = scaled * term / static_cast<double>(k);
      acc += term;
      if (term.norm() <= 1e-18 * acc.norm()) break;
    }
    w = acc;
  }
  return w;
}

CMatrix oracle_expm(const CMatrix& op) {
  const double n = norm1(op);
  const int squarings = n > 0.25 ? static_cast<int>(std::ceil(std::log2(n / 0.25))) : 0;
  const CMatrix X = op / std::ldexp(1.0, squarings);
  CMatrix term = CMatrix::Identity(op.rows(), op.cols());
  CMatrix acc = term;
  for (int k = 1; k <= 24; ++k) {
    term = X * term / static_cast<double>(k);
    acc += term;
  }
  for (int s = 0; s < squarings; ++s) acc = acc * acc;
  return acc;
}

CVector apply_exponentials(const std::vector<CMatrix>& exponents, const CVector& v) {
  CVector w = v;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) w = exp_apply(*it, w);
  return w;
}

cplx vacuum_expectation(const FockSpace& space, const std::vector<CMatrix>& exponents) {
  return apply_exponentials(exponents, space.vacuum())(0);
}

CVector transfer(const FockSpace& from, const FockSpace& to, const CVector& v) {
  CVector out = CVector::Zero(to.dimension());
  for (Eigen::Index i = 0; i < from.dimension(); ++i) {
    const Eigen::Index j = to.index_of(from.basis()[i]);
    if (j >= 0) out(j) = v(i);
  }
  return out;
}

std::vector<double> truncation_residuals(const FockSpace& space,
                                        const std::vector<QuadElement>& product,
                                        const std::vector<CVector>& probes) {
  if (space.cutoff() < 4)
    throw DomainError(ErrorCode::InvalidArgument, "truncation_residual", "cutoff < 4");
  const FockSpace small(space.modes(), space.cutoff() - 4);
  std::vector<CMatrix> big_ops, small_ops;
  for (const QuadElement& E : product) {
    big_ops.push_back(space.materialize(E));
    small_ops.push_back(small.materialize(E));
  }
  std::vector<double> out;
  for (const CVector& probe : probes) {
    const CVector probe_small = transfer(space, small, probe);
    if ((transfer(small, space, probe_small) - probe).norm() > 0.0)
      throw DomainError(ErrorCode::InvalidArgument, "truncation_residual",
                        "probe has weight above cutoff - 4");
    const CVector big = apply_exponentials(big_ops, probe);
    const CVector low = apply_exponentials(small_ops, probe_small);
    out.push_back((big - transfer(small, space, low)).norm());
  }
  return out;
}

double truncation_residual(const FockSpace& space, const std::vector<QuadElement>& product,
                           const CVector& probe) {
  return truncation_residuals(space, product, {probe}).front();
}

double truncation_residual(const FockSpace& space, const QuadElement& E, const CVector& probe) {
  return truncation_residual(space, std::vector<QuadElement>{E}, probe);
}

CMatrix sub_block(const CMatrix& M, const std::vector<Eigen::Index>& rows,
                  const std::vector<Eigen::Index>& cols) {
  CMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = M(rows[i], cols[j]);
  return out;
}

}  // namespace quadheis
