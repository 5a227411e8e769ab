#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "quadheis/splitting.hpp"

using namespace quadheis;

namespace {

FirstKindCoords random_first(Sampler& s, Eigen::Index n, double r) {
  return make_coords<FirstKindCoords>(s.complex_unit(), s.symmetric(n, r), s.general(n, r),
                                      s.symmetric(n, r));
}

// i/2 (a†² - a²): its S block is cos(t)
FirstKindCoords rotation() {
  return make_coords<FirstKindCoords>(0.0, scalar_matrix(cplx(0, 0.5)), scalar_matrix(0.0),
                                      scalar_matrix(cplx(0, -0.5)));
}

}  // namespace

TEST(SpGenerator, BlockLayout) {
  const CMatrix B = mat({{1, 2}, {3, 4}});
  const CMatrix v = sp_generator(zeros(2), B, zeros(2));
  EXPECT_EQ(CMatrix(v.topLeftCorner(2, 2)), B);
  EXPECT_EQ(CMatrix(v.bottomRightCorner(2, 2)), CMatrix(-B.transpose()));
  EXPECT_EQ(CMatrix(v.topRightCorner(2, 2)), zeros(2));
  EXPECT_EQ(sp_generator(rotation().A, rotation().B, rotation().C),
            mat({{0, cplx(0, 1)}, {cplx(0, 1), 0}}));
}

TEST(SpGenerator, IsInfinitesimallySymplectic) {
  Sampler s(51);
  for (int i = 0; i < 10; ++i) {
    const FirstKindCoords w = random_first(s, 3, 2.0);
    const CMatrix v = sp_generator(w.A, w.B, w.C);
    const CMatrix J = symplectic_form(3);
    EXPECT_LE((v.transpose() * J + J * v).norm(), 1e-13 * (1 + v.norm()));
    EXPECT_LE(symplectic_residual(exp_matrix(v)), 1e-11 * exp_matrix(v).squaredNorm());
  }
}

TEST(SpGenerator, RejectsAsymmetric) {
  EXPECT_DOMAIN_ERROR(sp_generator(mat({{0, 1}, {0, 0}}), zeros(2), zeros(2)),
                      ErrorCode::AsymmetricInput);
}

TEST(Split, PreservationOnly) {
  Sampler s(52);
  const CMatrix B = s.general(3, 1.0);
  const auto w = make_coords<FirstKindCoords>(cplx(0.3, 0.1), zeros(3), B, zeros(3));
  const SecondKindCoords g = split(w);
  EXPECT_LE(max_abs(CMatrix(g.B - B)), 1e-12);
  EXPECT_LE(max_abs(g.A), 1e-14);
  EXPECT_LE(max_abs(g.C), 1e-14);
  EXPECT_LE(std::abs(g.x - w.x), 1e-12);
}

TEST(Split, IdentityMapsToIdentity) {
  const SecondKindCoords g = split(identity_coords<FirstKindCoords>(2));
  EXPECT_EQ(max_abs_diff(g, identity_coords<SecondKindCoords>(2)), 0.0);
}

TEST(Split, RotationCoefficients) {
  // e^{t i/2 (a†² - a²)} = (cos t)^{-1/2} e^{(i/2) tan t a†²} e^{-log(cos t) a†a} e^{-(i/2) tan t a²}
  for (double t : {0.2, 0.7, 1.2}) {
    const SecondKindCoords g = split(rotation(), t);
    EXPECT_LE(std::abs(g.A(0, 0) - cplx(0, 0.5 * std::tan(t))), 1e-13);
    EXPECT_LE(std::abs(g.C(0, 0) - cplx(0, -0.5 * std::tan(t))), 1e-13);
    EXPECT_LE(std::abs(g.B(0, 0) + std::log(std::cos(t))), 1e-13);
    EXPECT_LE(std::abs(g.x + 0.5 * std::log(std::cos(t))), 1e-13);
  }
}

TEST(Split, DegenerateSRaises) {
  try {
    split(rotation(), std::numbers::pi / 2);
    FAIL() << "expected SingularS";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularS);
    EXPECT_EQ(e.stage(), "split");
  }
  EXPECT_NO_THROW(split(rotation(), std::numbers::pi / 2 - 1e-3));
}

TEST(Split, ConditionIsReported) {
  const SplitData near = split_data(rotation().A, rotation().B, rotation().C, 1.5);
  const SplitData far = split_data(rotation().A, rotation().B, rotation().C, 0.1);
  EXPECT_LT(near.s_condition, far.s_condition);
  EXPECT_NEAR(far.s_condition, std::cos(0.1), 1e-12);
}

TEST(Split, TimeScalesGenerator) {
  Sampler s(53);
  const FirstKindCoords w = random_first(s, 2, 1.0);
  FirstKindCoords scaled = w;
  scaled.A *= 0.4;
  scaled.B *= 0.4;
  scaled.C *= 0.4;
  EXPECT_LE(max_abs_diff(split(w, 0.4), split(scaled, 1.0)), 1e-12);
}

TEST(SplitData, SymplecticRelations) {
  Sampler s(54);
  for (Eigen::Index n = 1; n <= 4; ++n)
    for (int i = 0; i < 10; ++i) {
      const FirstKindCoords w = random_first(s, n, 1.0);
      const SplitData d = split_data(w.A, w.B, w.C, 1.0);
      const CMatrix I = CMatrix::Identity(n, n);
      const double scale = 1 + d.P.norm() * d.S.norm() + d.Q.norm() * d.R.norm();
      EXPECT_LE(CMatrix(d.P.transpose() * d.S + d.R.transpose() * d.Q - I).norm(), 1e-11 * scale);
      EXPECT_LE(CMatrix(d.P.transpose() * d.R - d.R.transpose() * d.P).norm(), 1e-11 * scale);
      EXPECT_LE(CMatrix(d.Q.transpose() * d.S - d.S.transpose() * d.Q).norm(), 1e-11 * scale);
      // QS^{-1} and S^{-1}R are symmetric before any symmetrization
      const CMatrix Sinv = d.S.inverse();
      const CMatrix f = d.Q * Sinv, h = Sinv * d.R;
      EXPECT_LE(CMatrix(f - f.transpose()).norm(), 1e-10 * (1 + f.norm()));
      EXPECT_LE(CMatrix(h - h.transpose()).norm(), 1e-10 * (1 + h.norm()));
      EXPECT_LE(CMatrix(d.f_hat - f).norm(), 1e-10 * (1 + f.norm()));
      EXPECT_LE(CMatrix(exp_matrix(CMatrix(-d.g.transpose())) - d.S).norm(), 1e-11 * (1 + d.S.norm()));
    }
}

TEST(SplitData, SemigroupInTime) {
  Sampler s(55);
  for (int i = 0; i < 10; ++i) {
    const FirstKindCoords w = random_first(s, 2, 1.0);
    const double a = s.uniform(0.1, 0.6), b = s.uniform(0.1, 0.6);
    const SplitData x = split_data(w.A, w.B, w.C, a), y = split_data(w.A, w.B, w.C, b),
                    z = split_data(w.A, w.B, w.C, a + b);
    EXPECT_LE(max_abs(CMatrix(x.P * y.P - x.Q * y.R - z.P)), 1e-10);
    EXPECT_LE(max_abs(CMatrix(x.P * y.Q + x.Q * y.S - z.Q)), 1e-10);
    EXPECT_LE(max_abs(CMatrix(x.R * y.P + x.S * y.R - z.R)), 1e-10);
    EXPECT_LE(max_abs(CMatrix(x.S * y.S - x.R * y.Q - z.S)), 1e-10);
  }
}

TEST(Split, MatchesFockOracle) {
  Sampler s(56);
  const FockSpace space(2, 24);
  for (int i = 0; i < 3; ++i) {
    const FirstKindCoords w = random_first(s, 2, 0.2);
    const SecondKindCoords g = split(w);
    const double gap = product_gap(space, {quad(w.x, w.A, w.B, w.C)}, second_kind_factors(g),
                                   probes2());
    EXPECT_LE(gap, 1e-8);
  }
}

TEST(Merge, PreservationOnly) {
  Sampler s(57);
  const CMatrix B = s.general(2, 1.0);
  const auto g = make_coords<SecondKindCoords>(cplx(0.1, 0.2), zeros(2), B, zeros(2));
  const FirstKindCoords w = merge(g);
  EXPECT_LE(max_abs(CMatrix(w.B - B)), 1e-12);
  EXPECT_LE(max_abs(w.A), 1e-14);
  EXPECT_LE(max_abs(w.C), 1e-14);
  EXPECT_LE(std::abs(w.x - g.x), 1e-12);
}

TEST(Merge, IdentityMapsToIdentity) {
  const FirstKindCoords w = merge(identity_coords<SecondKindCoords>(3));
  EXPECT_LE(max_abs_diff(w, identity_coords<FirstKindCoords>(3)), 1e-15);
}

TEST(Merge, RoundTrips) {
  Sampler s(58);
  for (Eigen::Index n = 1; n <= 3; ++n)
    for (int i = 0; i < 20; ++i) {
      const FirstKindCoords w = random_first(s, n, 0.8);
      EXPECT_LE(max_abs_diff(merge(split(w)), w), 1e-9);
      const auto g = make_coords<SecondKindCoords>(s.complex_unit(), s.symmetric(n, 0.3),
                                                   s.general(n, 0.3), s.symmetric(n, 0.3));
      EXPECT_LE(max_abs_diff(split(merge(g)), g), 1e-9);
    }
}

TEST(Merge, Errors) {
  const auto huge = make_coords<SecondKindCoords>(0.0, zeros(2),
                                                  CMatrix(-1000.0 * CMatrix::Identity(2, 2)), zeros(2));
  EXPECT_DOMAIN_ERROR(merge(huge), ErrorCode::SymplecticViolation);
  // S = -I puts the block matrix on the branch cut
  const auto flip = make_coords<SecondKindCoords>(
      0.0, zeros(2), CMatrix(cplx(0, std::numbers::pi) * CMatrix::Identity(2, 2)), zeros(2));
  EXPECT_DOMAIN_ERROR(merge(flip), ErrorCode::BranchCut);
  SecondKindCoords bad = identity_coords<SecondKindCoords>(2);
  bad.A = mat({{0, 1}, {0, 0}});
  EXPECT_DOMAIN_ERROR(merge(bad), ErrorCode::AsymmetricInput);
}
