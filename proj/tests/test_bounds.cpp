#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "quadheis/bounds.hpp"

using namespace quadheis;

TEST(AbsNorm, Examples) {
  EXPECT_EQ(abs_norm(zeros(3)), 0.0);
  EXPECT_EQ(abs_norm(CMatrix::Identity(2, 2)), 4.0);
  EXPECT_EQ(abs_norm(mat({{0, cplx(0, 3)}, {cplx(0, 3), 0}})), 12.0);
}

TEST(AbsNorm, DominatesSpectralNorm) {
  Sampler s(111);
  for (int i = 0; i < 20; ++i) {
    const CMatrix A = s.complex_matrix(3);
    EXPECT_GE(abs_norm(A), op_norm(A));
  }
}

TEST(SectorBound, Examples) {
  const CMatrix one = scalar_matrix(1.0);
  EXPECT_DOUBLE_EQ(sector_bound(Kind::Creator, one, 0), std::sqrt(2.0));
  EXPECT_EQ(sector_bound(Kind::Annihilator, one, 1), 0.0);
  EXPECT_DOUBLE_EQ(sector_bound(Kind::Preservation, CMatrix::Identity(2, 2), 5), 20.0);
  const CMatrix A = CMatrix::Identity(2, 2);
  EXPECT_DOUBLE_EQ(sector_bound(Kind::Creator, A, 3), 4.0 * std::sqrt(4.0 * 5.0));
  EXPECT_DOUBLE_EQ(sector_bound(Kind::Annihilator, A, 3), 4.0 * std::sqrt(3.0 * 2.0));
}

TEST(PowerBound, Examples) {
  const CMatrix one = scalar_matrix(1.0);
  EXPECT_EQ(power_bound(Kind::Annihilator, one, 3, 2), 0.0);
  EXPECT_DOUBLE_EQ(power_bound(Kind::Creator, one, 0, 2), std::sqrt(24.0));
  EXPECT_EQ(power_bound(Kind::Creator, one, 4, 0), 1.0);
  EXPECT_DOUBLE_EQ(power_bound(Kind::Annihilator, one, 4, 2), std::sqrt(24.0));
}

TEST(PowerBound, FirstPowerIsSectorBound) {
  Sampler s(112);
  const CMatrix A = s.general(2, 3.0);
  for (Kind k : {Kind::Creator, Kind::Annihilator, Kind::Preservation})
    for (int n = 0; n < 8; ++n) EXPECT_EQ(power_bound(k, A, n, 1), sector_bound(k, A, n));
}

TEST(PowerBound, AnnihilatorSupport) {
  // nonzero exactly when 2m - 1 < n
  const CMatrix A = scalar_matrix(1.0);
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(power_bound(Kind::Annihilator, A, n, m) > 0, 2 * m - 1 < n);
}

TEST(PowerBound, AnnihilatorMirrorsCreator) {
  // aAa from sector n lands where a†Aa† from sector n - 2 started
  Sampler s(113);
  const CMatrix A = s.symmetric(2, 2.0);
  for (int n = 2; n < 12; ++n)
    EXPECT_DOUBLE_EQ(sector_bound(Kind::Annihilator, A, n), sector_bound(Kind::Creator, A, n - 2));
}

TEST(PowerBound, MonotoneInPowerForLargeNorm) {
  const CMatrix A = CMatrix::Identity(2, 2);
  for (Kind k : {Kind::Creator, Kind::Preservation})
    for (int m = 1; m < 5; ++m) EXPECT_GE(power_bound(k, A, 3, m + 1), power_bound(k, A, 3, m));
}

TEST(PowerBound, RejectsMixedAndNegative) {
  EXPECT_DOMAIN_ERROR(power_bound(Kind::Mixed, zeros(1), 1, 1), ErrorCode::InvalidArgument);
  EXPECT_DOMAIN_ERROR(power_bound(Kind::Creator, zeros(1), -1, 1), ErrorCode::InvalidArgument);
}

TEST(MixedProductBound, Examples) {
  EXPECT_DOUBLE_EQ(mixed_product_bound({2.0}, 3), 2.0 * std::sqrt(4.0 * 5.0));
  EXPECT_DOUBLE_EQ(mixed_product_bound({1.0, 3.0}, 0), 9.0 * std::sqrt(24.0));
  const CMatrix A = CMatrix::Identity(2, 2);
  for (int m = 1; m <= 4; ++m)
    EXPECT_DOUBLE_EQ(mixed_product_bound(std::vector<double>(m, abs_norm(A)), 2),
                     power_bound(Kind::Creator, A, 2, m));
  EXPECT_DOMAIN_ERROR(mixed_product_bound({}, 2), ErrorCode::EmptyInput);
}

TEST(ConvergenceRadius, Examples) {
  EXPECT_DOUBLE_EQ(convergence_radius(1.0, 0.5, 0.2, 1), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(convergence_radius(0.0, 2.0, 0.0, 2), 1.0 / 36.0);
  EXPECT_EQ(convergence_radius(0.0, 0.0, 0.0, 3), std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(convergence_radius(2.0, 0.0, 0.0, 3), 0.5 * convergence_radius(1.0, 0.0, 0.0, 3));
}

TEST(ConvergenceRadius, RatioTestAtHalfRadius) {
  for (int n = 1; n <= 5; ++n) {
    const double z = 0.5 * convergence_radius(0.7, 1.3, 0.4, n);
    for (int m = 1; m < 30; ++m) {
      const double ratio = series_term_bound(0.7, 1.3, 0.4, n, m + 1, z) /
                           series_term_bound(0.7, 1.3, 0.4, n, m, z);
      EXPECT_LT(ratio, 0.51);
    }
  }
}

TEST(VerifySectorBounds, PreservationIdentity) {
  const FockSpace space(2, 10);
  for (const BoundReport& r : verify_sector_bounds(space, CMatrix::Identity(2, 2), Kind::Preservation)) {
    EXPECT_NEAR(r.measured_norm, r.sector, 1e-12);
    EXPECT_DOUBLE_EQ(r.analytic_bound, 4.0 * r.sector);
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(VerifySectorBounds, CreatorOneModeIsTight) {
  const FockSpace space(1, 10);
  const auto reports = verify_sector_bounds(space, scalar_matrix(1.0), Kind::Creator);
  ASSERT_FALSE(reports.empty());
  EXPECT_EQ(reports.front().sector, 0);
  EXPECT_NEAR(reports.front().measured_norm, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(reports.front().analytic_bound, std::sqrt(2.0), 1e-14);
  EXPECT_TRUE(reports.front().satisfied);
  EXPECT_EQ(reports.back().sector, 8);
}

TEST(VerifySectorBounds, RandomOperatorsSatisfyBounds) {
  Sampler s(114);
  const FockSpace space(2, 12);
  for (int i = 0; i < 5; ++i) {
    const CMatrix Asym = s.symmetric(2, 2.0), Agen = s.general(2, 2.0);
    for (const auto& [kind, A] : {std::pair{Kind::Creator, Asym}, std::pair{Kind::Annihilator, Asym},
                                  std::pair{Kind::Preservation, Agen}})
      for (const BoundReport& r : verify_sector_bounds(space, A, kind)) {
        EXPECT_TRUE(r.satisfied) << to_string(kind) << " sector " << r.sector;
        EXPECT_LE(r.measured_norm, r.analytic_bound * (1 + 1e-9));
      }
  }
}

TEST(VerifySectorBounds, DimensionMismatch) {
  EXPECT_DOMAIN_ERROR(verify_sector_bounds(FockSpace(2, 4), zeros(3), Kind::Creator),
                      ErrorCode::DimensionMismatch);
}

TEST(VerifyMixedBound, RandomProductsSatisfyBound) {
  Sampler s(115);
  const FockSpace space(2, 14);
  const Kind kinds[] = {Kind::Creator, Kind::Annihilator, Kind::Preservation};
  for (int i = 0; i < 6; ++i) {
    std::vector<std::pair<Kind, CMatrix>> factors;
    for (int k = 0; k < 3; ++k) {
      const Kind kind = kinds[(i + k * (i + 1)) % 3];
      factors.emplace_back(kind, kind == Kind::Preservation ? s.general(2, 2.0) : s.symmetric(2, 2.0));
    }
    for (int n = 0; n <= 8; n += 2) {
      const BoundReport r = verify_mixed_bound(space, factors, n);
      EXPECT_TRUE(r.satisfied) << "pattern " << i << " sector " << n;
      EXPECT_EQ(r.kind, Kind::Mixed);
    }
  }
}

TEST(VerifyMixedBound, Errors) {
  const FockSpace space(1, 6);
  EXPECT_DOMAIN_ERROR(verify_mixed_bound(space, {}, 0), ErrorCode::EmptyInput);
  EXPECT_DOMAIN_ERROR(
      verify_mixed_bound(space, {{Kind::Creator, scalar_matrix(1.0)}, {Kind::Creator, scalar_matrix(1.0)}}, 3),
      ErrorCode::InvalidArgument);
}

TEST(LadderSectorNorm, SquareRootLaw) {
  const FockSpace space(2, 10);
  for (int n = 0; n < 10; ++n)
    for (int k = 0; k < 2; ++k) {
      EXPECT_LE(ladder_sector_norm(space, k, false, n), std::sqrt(static_cast<double>(n)) + 1e-14);
      EXPECT_LE(ladder_sector_norm(space, k, true, n), std::sqrt(n + 1.0) + 1e-14);
      EXPECT_NEAR(ladder_sector_norm(space, k, true, n), std::sqrt(n + 1.0), 1e-14);
    }
  EXPECT_EQ(ladder_sector_norm(space, 0, false, 0), 0.0);
  EXPECT_DOMAIN_ERROR(ladder_sector_norm(space, 0, true, 10), ErrorCode::InvalidArgument);
}
