#pragma once

#include <gtest/gtest.h>

#include <vector>

#include "quadheis/fock.hpp"
#include "quadheis/sampling.hpp"
#include "quadheis/splitting.hpp"

namespace qh = quadheis;

inline qh::CMatrix zeros(Eigen::Index n) { return qh::CMatrix::Zero(n, n); }

inline qh::CMatrix mat(std::initializer_list<std::initializer_list<qh::cplx>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  qh::CMatrix M(n, static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& v : r) M(i, j++) = v;
    ++i;
  }
  return M;
}

inline qh::CMatrix scalar_matrix(qh::cplx v) { return qh::CMatrix::Constant(1, 1, v); }

inline qh::QuadElement quad(qh::cplx c, const qh::CMatrix& A, const qh::CMatrix& B,
                            const qh::CMatrix& C) {
  return {c, A, B, C};
}

inline qh::QuadElement creator_el(const qh::CMatrix& A) { return quad(0.0, A, zeros(A.rows()), zeros(A.rows())); }
inline qh::QuadElement preservation_el(const qh::CMatrix& B) { return quad(0.0, zeros(B.rows()), B, zeros(B.rows())); }
inline qh::QuadElement annihilator_el(const qh::CMatrix& C) { return quad(0.0, zeros(C.rows()), zeros(C.rows()), C); }

inline std::vector<qh::QuadElement> second_kind_factors(const qh::Coords& g) {
  const auto n = g.dim();
  return {quad(g.x, zeros(n), zeros(n), zeros(n)), creator_el(g.A), preservation_el(g.B),
          annihilator_el(g.C)};
}

inline std::vector<qh::CMatrix> materialize_all(const qh::FockSpace& space,
                                                const std::vector<qh::QuadElement>& es) {
  std::vector<qh::CMatrix> out;
  for (const auto& e : es) out.push_back(space.materialize(e));
  return out;
}

// max over probes of ||L ψ - R ψ|| for two products of exponentials
inline double product_gap(const qh::FockSpace& space, const std::vector<qh::QuadElement>& lhs,
                          const std::vector<qh::QuadElement>& rhs,
                          const std::vector<qh::Occupation>& probes) {
  const auto L = materialize_all(space, lhs);
  const auto R = materialize_all(space, rhs);
  double worst = 0.0;
  for (const auto& o : probes) {
    const qh::CVector p = space.number_state(o);
    worst = std::max(worst, (qh::apply_exponentials(L, p) - qh::apply_exponentials(R, p)).norm());
  }
  return worst;
}

inline const std::vector<qh::Occupation>& probes2() {
  static const std::vector<qh::Occupation> p{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  return p;
}

#define EXPECT_DOMAIN_ERROR(stmt, ecode)                                   \
  do {                                                                     \
    bool caught_ = false;                                                  \
    try {                                                                  \
      stmt;                                                                \
    } catch (const qh::DomainError& e_) {                                  \
      caught_ = true;                                                      \
      EXPECT_EQ(e_.code(), ecode) << e_.what();                            \
    }                                                                      \
    EXPECT_TRUE(caught_) << "expected DomainError " << qh::to_string(ecode); \
  } while (0)
