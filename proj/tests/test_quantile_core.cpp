#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ninv/quantile.hpp"
#include "reference_values.hpp"

namespace ninv {
namespace {

using testing::quantile_ref;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TEST(Probability, RejectsClosedEndpointsAndNaN) {
  EXPECT_THROW(Probability{0.0}, DomainError);
  EXPECT_THROW(Probability{1.0}, DomainError);
  EXPECT_THROW(Probability{-0.1}, DomainError);
  EXPECT_THROW(Probability{kNaN}, DomainError);
  EXPECT_DOUBLE_EQ(Probability(0.3).value(), 0.3);
}

TEST(Probability, HardFloorIsExpOfMinus684Point5) {
  EXPECT_EQ(kHardFloor, std::exp(-37.0 * 37.0 / 2.0));
}

TEST(RegionPartition, CutsAreSymmetric) {
  for (const auto& part : {kNarrowPartition, kWidePartition}) {
    EXPECT_LT(0.0, part.hard_floor);
    EXPECT_LT(part.hard_floor, part.lower_cut);
    EXPECT_LT(part.lower_cut, 0.5);
    EXPECT_LT(0.5, part.upper_cut);
    EXPECT_LT(part.upper_cut, 1.0);
    EXPECT_EQ(part.lower_cut + part.upper_cut, 1.0);
    EXPECT_TRUE(part.in_central(part.lower_cut));
    EXPECT_TRUE(part.in_central(part.upper_cut));
  }
}

TEST(CenteredSquare, SquareIsExactProduct) {
  const auto cs = CenteredSquare::from(0.2);
  EXPECT_EQ(cs.q, 0.2 - 0.5);
  EXPECT_EQ(cs.r, cs.q * cs.q);
  EXPECT_LE(CenteredSquare::from(1e-300).r, 0.25);
}

TEST(TailVariable, DoesNotUnderflowForTinyP) {
  // p^2 would be 0 here.
  const double r = TailVariable::from(1e-290).r;
  EXPECT_TRUE(std::isfinite(r));
  EXPECT_NEAR(r, std::sqrt(2.0 * 290.0 * std::log(10.0)), 1e-12);
  EXPECT_LE(TailVariable::from(std::nextafter(kHardFloor, 1.0)).r, 37.0);
}

TEST(Central22, MidpointIsExactlyZero) { EXPECT_EQ(central_2_2(0.5), 0.0); }

TEST(Central22, LowerCutErrorMatchesPublishedTable) {
  const double err = static_cast<double>(central_2_2(0.0465) - quantile_ref(0.0465));
  EXPECT_NEAR(std::abs(err), 2.494327e-5, 1e-10);
}

TEST(Central22, QuarterWithinBound) {
  EXPECT_NEAR(central_2_2(0.25), static_cast<double>(quantile_ref(0.25)), 2.5e-5);
}

TEST(Central22, OddSymmetryIsBitExact) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.0465, 0.5);
  for (int i = 0; i < 10000; ++i) {
    const double p = dist(rng);
    const double c = 1.0 - p;
    if (1.0 - c != p) continue;
    EXPECT_EQ(central_2_2(c), -central_2_2(p)) << p;
  }
}

TEST(Central22, DomainErrors) {
  EXPECT_THROW(central_2_2(0.0464), DomainError);
  EXPECT_THROW(central_2_2(0.9536), DomainError);
  EXPECT_THROW(central_2_2(kNaN), DomainError);
  EXPECT_NO_THROW(central_2_2(0.0465));
  EXPECT_NO_THROW(central_2_2(0.9535));
}

TEST(Central22Wide, MidpointAndUpperCut) {
  EXPECT_EQ(central_2_2_wide(0.5), 0.0);
  EXPECT_NEAR(central_2_2_wide(0.975), static_cast<double>(quantile_ref(0.975)), 1.16e-4);
  EXPECT_THROW(central_2_2_wide(0.0249), DomainError);
  EXPECT_THROW(central_2_2_wide(0.9751), DomainError);
}

TEST(Tail32, OnePercent) {
  EXPECT_NEAR(tail_3_2(0.01), static_cast<double>(quantile_ref(0.01)), 2.458e-5);
}

TEST(Tail32, FarTailStaysFinite) {
  const double v = tail_3_2(1e-290);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v, static_cast<double>(quantile_ref(1e-290)), 2.5e-5);
}

TEST(Tail32, MeetsCentralAtLowerCut) {
  const double eps = 1e-12;
  EXPECT_LT(std::abs(tail_3_2(0.0465 - eps) - central_2_2(0.0465 + eps)), 5e-5);
}

TEST(Tail32, DomainErrors) {
  EXPECT_THROW(tail_3_2(kHardFloor), DomainError);
  EXPECT_THROW(tail_3_2(0.0465), DomainError);
  EXPECT_THROW(tail_3_2(0.0), DomainError);
  EXPECT_NO_THROW(tail_3_2(std::nextafter(kHardFloor, 1.0)));
  EXPECT_NO_THROW(tail_3_2(std::nextafter(0.0465, 0.0)));
}

TEST(Rat22A, MidpointAndReferenceValue) {
  EXPECT_EQ(inv_cdf_rat22a(0.5), 0.0);
  EXPECT_NEAR(inv_cdf_rat22a(0.975), static_cast<double>(quantile_ref(0.975)), 2.5e-5);
  EXPECT_NEAR(inv_cdf_rat22a(0.975), 1.959964, 2.5e-5 + 1e-6);
}

TEST(Rat22A, DispatchesToTheThreePieces) {
  EXPECT_EQ(inv_cdf_rat22a(0.01), tail_3_2(0.01));
  EXPECT_EQ(inv_cdf_rat22a(0.0465), central_2_2(0.0465));
  EXPECT_EQ(inv_cdf_rat22a(0.9535), central_2_2(0.9535));
  EXPECT_EQ(inv_cdf_rat22a(0.99), -tail_3_2(1.0 - 0.99));
}

TEST(Rat22A, RejectsEndpointsNeverReturnsInfinity) {
  EXPECT_THROW(inv_cdf_rat22a(0.0), DomainError);
  EXPECT_THROW(inv_cdf_rat22a(1.0), DomainError);
  EXPECT_THROW(inv_cdf_rat22a(kHardFloor), DomainError);
  EXPECT_THROW(inv_cdf_rat22a(kNaN), DomainError);
  EXPECT_THROW(inv_cdf_rat22a(Probability(1e-300)), DomainError);
  EXPECT_TRUE(std::isfinite(inv_cdf_rat22a(std::nextafter(1.0, 0.0))));
}

TEST(Rat22A, DomainErrorNamesValueAndInterval) {
  try {
    inv_cdf_rat22a(1.5);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.p(), 1.5);
    EXPECT_EQ(e.upper(), 1.0);
    EXPECT_EQ(e.lower(), kHardFloor);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("p=1.5"), std::string::npos) << msg;
    EXPECT_NE(msg.find(", 1)"), std::string::npos) << msg;
  }
}

TEST(Rat22A, OddSymmetryAcrossAllRegions) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double p = i % 2 == 0 ? 0.5 * unit(rng) : std::pow(10.0, -20.0 * unit(rng));
    if (!(p > kHardFloor)) continue;
    const double c = 1.0 - p;
    if (c >= 1.0 || 1.0 - c != p) continue;
    EXPECT_EQ(inv_cdf_rat22a(c), -inv_cdf_rat22a(p)) << p;
  }
}

TEST(Rat22B, MidpointAndSharedTail) {
  EXPECT_EQ(inv_cdf_rat22b(0.5), 0.0);
  EXPECT_EQ(inv_cdf_rat22b(0.003), tail_3_2(0.003));
  EXPECT_EQ(inv_cdf_rat22b(0.003), inv_cdf_rat22a(0.003));
  EXPECT_EQ(inv_cdf_rat22b(0.03), central_2_2_wide(0.03));
  EXPECT_THROW(inv_cdf_rat22b(1.0), DomainError);
  EXPECT_THROW(inv_cdf_rat22b(0.0), DomainError);
}

}  // namespace
}  // namespace ninv
