#include "quadheis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "quadheis/bounds.hpp"
#include "quadheis/fock.hpp"
#include "quadheis/grouplaw.hpp"
#include "quadheis/sampling.hpp"
#include "quadheis/vacuum.hpp"

namespace quadheis {

namespace {

constexpr cplx I_UNIT(0.0, 1.0);

struct Tally {
  long checks = 0;
  long failures = 0;
  double worst_ratio = 0.0;
  std::string note;

  void fail(const std::string& why) {
    ++failures;
    if (note.empty()) note = why;
  }
  // residual <= tol (or < tol when strict)
  void check(double residual, double tol, const std::string& what, bool strict = false) {
    ++checks;
    const double ratio = residual / tol;
    if (std::isnan(ratio)) {
      worst_ratio = std::numeric_limits<double>::infinity();
      fail(what + ": NaN");
      return;
    }
    worst_ratio = std::max(worst_ratio, ratio);
    if (strict ? !(residual < tol) : !(residual <= tol)) fail(what);
  }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
  // Runs body, turning an unexpected DomainError into one failed check.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const DomainError& e) {
      ++checks;
      fail(what + ": " + e.what());
    }
  }
};

QuadElement quad(cplx c, const CMatrix& A, const CMatrix& B, const CMatrix& C) { return {c, A, B, C}; }

CMatrix zeros(Eigen::Index n) { return CMatrix::Zero(n, n); }

std::vector<QuadElement> first_kind_factors(const Coords& w) {
  return {quad(w.x, w.A, w.B, w.C)};
}

std::vector<QuadElement> second_kind_factors(const Coords& g) {
  const Eigen::Index n = g.dim();
  return {quad(g.x, zeros(n), zeros(n), zeros(n)), quad(0.0, g.A, zeros(n), zeros(n)),
          quad(0.0, zeros(n), g.B, zeros(n)), quad(0.0, zeros(n), zeros(n), g.C)};
}

std::vector<CMatrix> materialize_all(const FockSpace& space, const std::vector<QuadElement>& es) {
  std::vector<CMatrix> out;
  for (const auto& e : es) out.push_back(space.materialize(e));
  return out;
}

template <typename V>
void append(V& to, const V& from) {
  to.insert(to.end(), from.begin(), from.end());
}

std::vector<CVector> probes_2mode(const FockSpace& space) {
  std::vector<CVector> out;
  for (const Occupation& o : std::vector<Occupation>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}})
    out.push_back(space.number_state(o));
  return out;
}

template <typename K>
K random_coords(Sampler& s, Eigen::Index n, double bound) {
  K k;
  k.x = bound * s.complex_unit();
  k.A = s.symmetric(n, bound);
  k.B = s.general(n, bound);
  k.C = s.symmetric(n, bound);
  return k;
}

// Operator identity L ψ = R ψ on the probe set with the truncation gate on both sides.
void compare_products(Tally& t, const FockSpace& space, const std::vector<QuadElement>& lhs,
                      const std::vector<QuadElement>& rhs, const std::vector<CVector>& probes,
                      double tol, const std::string& what) {
  const auto L = materialize_all(space, lhs);
  const auto R = materialize_all(space, rhs);
  const auto gl = truncation_residuals(space, lhs, probes);
  const auto gr = truncation_residuals(space, rhs, probes);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    t.check(std::max(gl[i], gr[i]), 0.1 * tol, what + " truncation gate", true);
    t.check((apply_exponentials(L, probes[i]) - apply_exponentials(R, probes[i])).norm(), tol, what);
  }
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

// Inner products <(a†Ma†)^n Φ, (a†Na†)^m Φ> for all n, m <= kmax.
Eigen::MatrixXcd oracle_moments(const FockSpace& space, const CMatrix& M, const CMatrix& N, int kmax) {
  const Eigen::Index d = M.rows();
  const CMatrix OM = space.materialize(quad(0.0, M, zeros(d), zeros(d)));
  const CMatrix ON = space.materialize(quad(0.0, N, zeros(d), zeros(d)));
  std::vector<CVector> u{space.vacuum()}, v{space.vacuum()};
  for (int k = 1; k <= kmax; ++k) {
    u.push_back(OM * u.back());
    v.push_back(ON * v.back());
  }
  Eigen::MatrixXcd G(kmax + 1, kmax + 1);
  for (int i = 0; i <= kmax; ++i)
    for (int j = 0; j <= kmax; ++j) G(i, j) = u[i].dot(v[j]);
  return G;
}

// ---------------------------------------------------------------- criteria

Tally splitting_identity(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  const FockSpace space(2, 24);
  const auto probes = probes_2mode(space);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_coords<FirstKindCoords>(s, 2, 0.2);
    t.guarded("split", [&] {
      const SecondKindCoords g = split(w, 1.0, tol);
      compare_products(t, space, first_kind_factors(w), second_kind_factors(g), probes, 1e-6,
                       "W vs G form");
    });
  }
  return t;
}

Tally degenerate_s(std::uint64_t, const Tolerances& tol) {
  Tally t;
  for (Eigen::Index n : {1, 2}) {
    const CMatrix I = CMatrix::Identity(n, n);
    const CMatrix A = 0.5 * I_UNIT * I, C = -0.5 * I_UNIT * I, B = zeros(n);
    for (int k = 1; k <= 15; ++k) {
      const double time = 0.1 * k;
      t.guarded("split_data", [&] {
        const SplitData d = split_data(A, B, C, time, tol);
        t.check((d.P - std::cos(time) * I).norm(), 1e-12, "P(t) = cos t");
        t.check((d.S - std::cos(time) * I).norm(), 1e-12, "S(t) = cos t");
      });
    }
    FirstKindCoords w;
    w.A = A;
    w.B = B;
    w.C = C;
    bool raised = false;
    try {
      split(w, std::numbers::pi / 2, tol);
    } catch (const DomainError& e) {
      raised = e.code() == ErrorCode::SingularS;
    }
    t.require(raised, "split at pi/2 must raise SingularS");
  }
  return t;
}

Tally round_trip(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index n = 1 + i % 3;
    FirstKindCoords w;
    w.x = 0.2 * s.complex_unit();
    w.A = s.symmetric_spectral(n, 0.2);
    w.B = s.general_spectral(n, 0.2);
    w.C = s.symmetric_spectral(n, 0.2);
    t.guarded("round trip", [&] {
      t.check(max_abs_diff(merge(split(w, 1.0, tol), tol), w), 1e-9, "merge(split(w)) = w");
    });
  }
  return t;
}

Tally group_laws(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  // Products of two semi-normal forms are not normal ordered (annihilators act
  // after creators), so high-occupation amplitude leaks back; a larger cutoff
  // keeps the gate honest.
  const FockSpace space(2, 30);
  const auto probes = probes_2mode(space);

  for (int i = 0; i < 15; ++i) {
    const auto g1 = random_coords<SecondKindCoords>(s, 2, 0.2);
    const auto g2 = random_coords<SecondKindCoords>(s, 2, 0.2);
    t.guarded("compose_second", [&] {
      auto lhs = second_kind_factors(g1);
      append(lhs, second_kind_factors(g2));
      compare_products(t, space, lhs, second_kind_factors(compose_second(g1, g2, tol)), probes,
                       1e-6, "compose_second vs oracle");
    });
  }
  for (int i = 0; i < 15; ++i) {
    const auto w1 = random_coords<FirstKindCoords>(s, 2, 0.2);
    const auto w2 = random_coords<FirstKindCoords>(s, 2, 0.2);
    t.guarded("compose_first", [&] {
      auto lhs = first_kind_factors(w1);
      append(lhs, first_kind_factors(w2));
      compare_products(t, space, lhs, first_kind_factors(compose_first(w1, w2, tol)), probes, 1e-6,
                       "compose_first vs oracle");
    });
  }
  for (int i = 0; i < 20; ++i) {
    const Eigen::Index n = 1 + i % 2;
    const auto g1 = random_coords<SecondKindCoords>(s, n, 0.3);
    const auto g2 = random_coords<SecondKindCoords>(s, n, 0.3);
    const auto g3 = random_coords<SecondKindCoords>(s, n, 0.3);
    t.guarded("associativity", [&] {
      const auto left = compose_second(compose_second(g1, g2, tol), g3, tol);
      const auto right = compose_second(g1, compose_second(g2, g3, tol), tol);
      t.check(max_abs_diff(left, right), 1e-7, "associativity");
    });
  }
  for (int i = 0; i < 10; ++i) {
    const Eigen::Index n = 1 + i % 3;
    const auto w1 = make_coords<FirstKindCoords>(0.0, zeros(n), s.general_spectral(n, 0.5), zeros(n));
    const auto w2 = make_coords<FirstKindCoords>(0.0, zeros(n), s.general_spectral(n, 0.5), zeros(n));
    t.guarded("preservation-only", [&] {
      const auto w = compose_first(w1, w2, tol);
      const CMatrix expect = w1.B + w2.B + bch_matrix(w1.B, w2.B, tol);
      t.check(max_abs(w.B - expect), 1e-10, "B = B1 + B2 + BCH(B1, B2)");
      t.check(std::abs(w.x), 1e-12, "x = 0");
      t.check(std::max(max_abs(w.A), max_abs(w.C)), 1e-12, "A = C = 0");
    });
  }
  return t;
}

Tally characteristic_function(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  const FockSpace space(2, 24);
  for (int i = 0; i < 50; ++i) {
    const Observable obs = make_observable(s.uniform(-1.0, 1.0), s.symmetric(2, 0.2), s.hermitian(2, 0.2));
    t.guarded("char_function", [&] {
      const QuadElement iH =
          quad(I_UNIT * obs.lambda, I_UNIT * obs.A, I_UNIT * obs.B, I_UNIT * obs.A.conjugate());
      t.check(truncation_residual(space, iH, space.vacuum()), 1e-7, "truncation gate", true);
      const cplx oracle = vacuum_expectation(space, {space.materialize(iH)});
      t.check(std::abs(char_function(obs, tol) - oracle), 1e-6, "char_function vs oracle");
    });
  }
  t.guarded("scalar mode", [&] {
    CMatrix a(1, 1);
    a(0, 0) = 0.5;
    const cplx v = char_function(make_observable(0.0, a, zeros(1)), tol);
    t.check(std::abs(v - std::pow(std::cosh(1.0), -0.5)), 1e-6, "(cosh 1)^(-1/2)");
    const FockSpace one(1, 60);
    const cplx oracle = vacuum_expectation(one, {one.materialize(quad(0.0, I_UNIT * a, zeros(1), I_UNIT * a))});
    t.check(std::abs(v - oracle), 1e-6, "scalar mode vs oracle");
  });
  return t;
}

Tally moments(std::uint64_t seed, const Tolerances&) {
  Tally t;
  Sampler s(seed);

  // Random real projections of rank 1..3 inside d = 3.
  const FockSpace space3(3, 12);
  for (int rank = 1; rank <= 3; ++rank)
    for (int rep = 0; rep < 2; ++rep) {
      const Eigen::MatrixXd O = s.orthogonal(3);
      const Eigen::MatrixXd Q = O.leftCols(rank);
      const CMatrix E = (Q * Q.transpose()).cast<cplx>();
      t.guarded("projection", [&] {
        const auto rec = moment_recursion(E, E, 6);
        const auto G = oracle_moments(space3, E, E, 6);
        for (int n = 1; n <= 6; ++n) {
          const double pm = projection_moment(E, n);
          t.check(rel_diff(pm, rec[n]), 1e-9, "projection_moment = moment_recursion");
          t.check(rel_diff(pm, G(n, n).real()), 1e-8, "projection_moment vs oracle");
          t.check(rel_diff(rec[n], G(n, n).real()), 1e-8, "moment_recursion vs oracle");
        }
      });
    }

  t.guarded("rank-1 single mode", [&] {
    const CMatrix E = CMatrix::Identity(1, 1);
    double fact = 1.0;
    for (int n = 1; n <= 6; ++n) {
      fact *= (2.0 * n - 1.0) * (2.0 * n);
      t.require(projection_moment(E, n) == fact, "(2n)! exactly");
    }
  });

  // Commuting diagonal pairs, d = 2 (and d = 3 for the diagonal recursion).
  for (int rep = 0; rep < 6; ++rep) {
    const Eigen::Index d = rep < 4 ? 2 : 3;
    CMatrix M = zeros(d), N = zeros(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      M(k, k) = s.uniform(-1.0, 1.0);
      N(k, k) = s.uniform(-1.0, 1.0);
    }
    const FockSpace space(static_cast<int>(d), d == 2 ? 12 : 10);
    const int kmax = d == 2 ? 5 : 5;
    t.guarded("diagonal pairs", [&] {
      const auto G = oracle_moments(space, M, N, kmax);
      const auto rec = moment_recursion(M, N, kmax);
      for (int n = 1; n <= kmax; ++n) {
        t.check(rel_diff(rec[n], G(n, n).real()), 1e-8, "moment_recursion vs oracle");
        for (int m = 1; m < n; ++m) {
          const double c = cross_moment(M, N, n, m);
          const double o = std::abs(G(n, m));
          t.check(std::abs(c - o) / std::max({std::abs(c), o, 1.0}), 1e-8, "cross_moment vs oracle");
        }
      }
    });
  }
  return t;
}

Tally overlaps(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  t.guarded("scalar overlap", [&] {
    CMatrix a(1, 1);
    a(0, 0) = 0.3;
    t.check(std::abs(exp_vector_overlap(a, a, tol) - 1.25), 1e-9, "overlap(0.3, 0.3) = 1.25");
  });
  const FockSpace space(2, 24);
  for (int i = 0; i < 20; ++i) {
    const CMatrix A = s.symmetric(2, 0.2), B = s.symmetric(2, 0.2);
    t.guarded("random overlap", [&] {
      const QuadElement ea = quad(0.0, A, zeros(2), zeros(2)), eb = quad(0.0, B, zeros(2), zeros(2));
      t.check(std::max(truncation_residual(space, ea, space.vacuum()),
                       truncation_residual(space, eb, space.vacuum())),
              1e-7, "truncation gate", true);
      const CVector pa = exp_apply(space.materialize(ea), space.vacuum());
      const CVector pb = exp_apply(space.materialize(eb), space.vacuum());
      t.check(std::abs(exp_vector_overlap(A, B, tol) - pb.dot(pa)), 1e-6, "overlap vs oracle");
      t.check(std::abs(exp_vector_norm(A, tol) - pa.norm()), 1e-6, "norm vs oracle");
    });
  }
  return t;
}

std::vector<QuadElement> generator_monomials() {
  std::vector<QuadElement> out;
  for (int j = 0; j < 2; ++j)
    for (int k = j; k < 2; ++k) {
      QuadElement e = QuadElement::zero(2);
      e.A(j, k) += 0.5;
      e.A(k, j) += 0.5;
      out.push_back(e);
      QuadElement f = QuadElement::zero(2);
      f.C(j, k) += 0.5;
      f.C(k, j) += 0.5;
      out.push_back(f);
    }
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      QuadElement e = QuadElement::zero(2);
      e.B(j, k) = 1.0;
      out.push_back(e);
    }
  return out;
}

Tally adjoint_actions(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  const FockSpace space(2, 20);
  const auto interior = space.up_to(space.cutoff() - 4);
  const auto monomials = generator_monomials();

  using Action = std::function<QuadElement(const CMatrix&, const QuadElement&)>;
  struct Case {
    const char* name;
    Kind kind;
    Action act;
  };
  const std::vector<Case> cases{
      {"annihilator", Kind::Annihilator, [](const CMatrix& m, const QuadElement& e) { return adjoint_exp_annihilator(m, e); }},
      {"creator", Kind::Creator, [](const CMatrix& m, const QuadElement& e) { return adjoint_exp_creator(m, e); }},
      {"preservation", Kind::Preservation,
       [&](const CMatrix& m, const QuadElement& e) { return adjoint_exp_preservation(m, e, tol.series); }}};

  for (const Case& c : cases)
    for (int rep = 0; rep < 2; ++rep) {
      const CMatrix P = c.kind == Kind::Preservation ? s.general(2, 0.3) : s.symmetric(2, 0.3);
      QuadElement X = QuadElement::zero(2);
      (c.kind == Kind::Creator ? X.A : c.kind == Kind::Annihilator ? X.C : X.B) = P;
      const CMatrix Xm = space.materialize(X);
      const CMatrix U = oracle_expm(Xm), Uinv = oracle_expm(-Xm);
      for (const QuadElement& T : monomials)
        t.guarded(c.name, [&] {
          const CMatrix oracle = U * space.materialize(T) * Uinv;
          const CMatrix lib = space.materialize(c.act(P, T));
          t.check(max_abs(sub_block(oracle - lib, interior, interior)), 1e-7,
                  std::string("adjoint_exp_") + c.name + " vs conjugation");
        });
    }

  // Commuting symmetric closed form.
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::Index n = 1 + rep % 3;
    const CMatrix O = s.orthogonal(n).cast<cplx>();
    CMatrix dc = zeros(n), db = zeros(n), da = zeros(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      dc(k, k) = s.complex_unit();
      db(k, k) = s.complex_unit();
      da(k, k) = s.complex_unit();
    }
    const CMatrix C = O * dc * O.transpose(), B = O * db * O.transpose(), A = O * da * O.transpose();
    t.guarded("hatcirc", [&] {
      t.check(max_abs(hatcirc_right(C, B, tol.series) - C * exp_matrix(-2.0 * B)), 1e-10, "C e^{-2B}");
      t.check(max_abs(hatcirc_left(B, A, tol.series) - exp_matrix(-2.0 * B) * A), 1e-10, "e^{-2B} A");
    });
  }
  return t;
}

Tally normal_ordering(std::uint64_t seed, const Tolerances& tol) {
  Tally t;
  Sampler s(seed);
  const FockSpace space(2, 24);
  for (int i = 0; i < 25; ++i) {
    const CMatrix A = s.symmetric(2, 0.2), B = s.general(2, 0.2), C = s.symmetric(2, 0.2);
    const CMatrix Ap = s.symmetric(2, 0.2), Bp = zeros(2), Cp = s.symmetric(2, 0.2);
    t.guarded("normal_order_six", [&] {
      const SixFactorForm f = normal_order_six(A, B, C, Ap, Bp, Cp, tol);
      const CMatrix Z = zeros(2);
      const std::vector<QuadElement> lhs{quad(0.0, A, Z, Z), quad(0.0, Z, B, Z), quad(0.0, Z, Z, C),
                                         quad(0.0, Ap, Z, Z), quad(0.0, Z, Bp, Z), quad(0.0, Z, Z, Cp)};
      const std::vector<QuadElement> rhs{quad(std::log(f.c1 * f.c2), f.A4, Z, Z), quad(0.0, Z, f.B, Z),
                                         quad(0.0, Z, f.B1, Z), quad(0.0, Z, f.B2, Z),
                                         quad(0.0, Z, Z, f.C3)};
      t.check(std::max(truncation_residual(space, lhs, space.vacuum()),
                       truncation_residual(space, rhs, space.vacuum())),
              1e-7, "truncation gate", true);
      const cplx l = vacuum_expectation(space, materialize_all(space, lhs));
      const cplx r = vacuum_expectation(space, materialize_all(space, rhs));
      t.check(std::abs(l - r), 1e-6, "vacuum expectation");
    });
  }
  return t;
}

Tally bounds_suite(std::uint64_t seed, const Tolerances&) {
  Tally t;
  Sampler s(seed);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 2;
    const FockSpace space(d, 10);
    const CMatrix A = s.general(d, s.uniform(0.5, 4.0));
    for (Kind kind : {Kind::Creator, Kind::Annihilator, Kind::Preservation})
      for (const BoundReport& r : verify_sector_bounds(space, A, kind))
        if (r.sector <= 8) {
          t.require(r.satisfied, std::string("sector bound ") + to_string(kind));
          t.check(r.measured_norm, r.analytic_bound * (1.0 + 1e-9) + 1e-300, "sector bound");
        }
  }
  for (int d = 1; d <= 2; ++d) {
    const FockSpace space(d, 10);
    for (int k = 0; k < d; ++k)
      for (int n = 0; n <= 8; ++n) {
        t.check(std::abs(ladder_sector_norm(space, k, false, n) - std::sqrt(n)), 1e-12, "||a_k|n|| = sqrt n");
        t.check(std::abs(ladder_sector_norm(space, k, true, n) - std::sqrt(n + 1.0)), 1e-12,
                "||a†_k|n|| = sqrt(n+1)");
      }
  }
  return t;
}

Tally diophantine(std::uint64_t, const Tolerances&) {
  Tally t;
  const std::vector<DiophPair> expect{{1, 2}, {7, 10}, {41, 58}};
  t.require(dioph_pairs(50) == expect, "dioph_pairs(50)");
  return t;
}

using Suite = Tally (*)(std::uint64_t, const Tolerances&);

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{splitting_identity, degenerate_s, round_trip, group_laws,
                                      characteristic_function, moments, overlaps, adjoint_actions,
                                      normal_ordering, bounds_suite, diophantine};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "splitting", "degenerate_s", "round_trip", "group_laws", "char_function", "moments",
      "overlaps", "adjoint", "normal_order", "bounds", "dioph"};
  return names;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  const auto& names = suite_names();
  std::vector<int> ids;
  if (options.suite == "all") {
    for (int i = 1; i <= static_cast<int>(names.size()); ++i) ids.push_back(i);
  } else {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (options.suite == names[i] || options.suite == std::to_string(i + 1))
        ids.push_back(static_cast<int>(i) + 1);
    if (ids.empty())
      throw DomainError(ErrorCode::InvalidArgument, "verify", "unknown suite '" + options.suite + "'");
  }

  std::vector<CriterionResult> out;
  for (int id : ids) {
    // Each criterion owns an independent stream so suites can run alone.
    const std::uint64_t seed = options.seed * 1000003ULL + static_cast<std::uint64_t>(id);
    Tally t;
    try {
      t = suites()[id - 1](seed, options.tol);
    } catch (const DomainError& e) {
      t.fail(e.what());
    }
    if (t.checks == 0) t.fail("no checks ran");
    out.push_back({id, names[id - 1], t.failures == 0, t.checks, t.failures, t.worst_ratio, t.note});
  }
  return out;
}

}  // namespace quadheis
