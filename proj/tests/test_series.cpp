#include <gtest/gtest.h>

#include "support/property.hpp"

using namespace skewring;
using skewring::testing::for_all;

namespace {

PolyRingPtr gaussian_q2() { return skew_ring(q_twist(gaussian_rationals(), 2), Shape::laurent); }

TruncatedSeries series(const std::string& text, const PolyRingPtr& ring, SeriesKind kind = SeriesKind::power) {
  return parse_series(text, ring, kind);
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

}  // namespace

// Frozen from tests/oracles/skew_series.py.
TEST(SeriesInverse, RightInverseUnderQTwist) {
  auto ring = gaussian_q2();
  TruncatedSeries a = series("1 - iX + O(X^5)", ring);
  TruncatedSeries b = series_right_inverse(a);
  EXPECT_EQ(b, series("1 + iX - 2X^2 - 2iX^3 + 4X^4 + O(X^5)", ring));
  EXPECT_EQ(a * b, TruncatedSeries::one(ring, SeriesKind::power, 4));
  EXPECT_EQ(series_invert(a), b);
}

TEST(SeriesInverse, LeftInverseDiffers) {
  auto ring = gaussian_q2();
  TruncatedSeries a = series("1 - iX + O(X^5)", ring);
  TruncatedSeries c = series_left_inverse(a);
  EXPECT_EQ(c, series("1 + iX - 2X^2 - 8iX^3 + 64X^4 + O(X^5)", ring));
  EXPECT_EQ(c * a, TruncatedSeries::one(ring, SeriesKind::power, 4));
  EXPECT_EQ(error_of([&] { series_two_sided_inverse(a); }), Errc::not_a_unit);
}

TEST(SeriesInverse, TwoSidedUnderAnAutomorphism) {
  auto h = quaternions();
  auto ring = skew_ring(inner(h, h->element({1, 1, 0, 0})), Shape::laurent);
  for_all(30, 41, [&](Sampler& rng, std::size_t) {
    Element p = ring->constant(rng.nonzero(*h)) + rng.element(*ring, 1, 4, 3);
    TruncatedSeries a = TruncatedSeries::embed(p, SeriesKind::power, 5);
    TruncatedSeries b = series_two_sided_inverse(a);
    EXPECT_EQ(a * b, TruncatedSeries::one(ring, SeriesKind::power, 5));
    EXPECT_EQ(b * a, TruncatedSeries::one(ring, SeriesKind::power, 5));
  });
}

TEST(SeriesInverse, RightInverseProperty) {
  // Holds for every bijective sigma respecting 1, multiplicative or not.
  std::vector<PolyRingPtr> rings{gaussian_q2(), skew_ring(conjugation(octonions()), Shape::laurent),
                                 skew_ring(diag_swap(matrix_algebra(rationals(), 2)), Shape::laurent)};
  for (const auto& ring : rings) {
    SCOPED_TRACE(ring->descriptor());
    for_all(20, 42, [&](Sampler& rng, std::size_t) {
      Element lead = rng.nonzero(*ring->coefficients());
      if (!try_invert(lead)) return;
      Element p = ring->constant(lead) + rng.element(*ring, 1, 4, 3);
      TruncatedSeries a = TruncatedSeries::embed(p, SeriesKind::power, 4);
      EXPECT_EQ(a * series_right_inverse(a), TruncatedSeries::one(ring, SeriesKind::power, 4));
      EXPECT_EQ(series_left_inverse(a) * a, TruncatedSeries::one(ring, SeriesKind::power, 4));
    });
  }
}

TEST(SeriesInverse, LaurentSeriesShiftPrecision) {
  auto ring = gaussian_q2();
  // a = iX^2 (1 + X), v = 2: inverse known through N - 2v
  TruncatedSeries a = series("iX^2 + iX^3 + O(X^7)", ring, SeriesKind::laurent);
  TruncatedSeries b = series_right_inverse(a);
  EXPECT_EQ(b.valuation(), -2);
  EXPECT_EQ(b.precision(), 2);
  EXPECT_EQ(a * b, TruncatedSeries::one(ring, SeriesKind::laurent, 4));
}

TEST(SeriesInverse, NotUnits) {
  auto ring = gaussian_q2();
  EXPECT_EQ(error_of([&] { series_invert(series("X + O(X^4)", ring)); }), Errc::not_a_unit);
  EXPECT_EQ(error_of([&] { series_invert(series("O(X^4)", ring)); }), Errc::not_a_unit);
  auto m2 = matrix_algebra(rationals(), 2);
  auto mring = skew_ring(diag_swap(m2), Shape::laurent);
  EXPECT_EQ(error_of([&] { series_invert(series("E11 + X + O(X^3)", mring)); }), Errc::not_a_unit);
}

TEST(SeriesArithmetic, PrecisionRules) {
  auto ring = gaussian_q2();
  TruncatedSeries a = series("1 + X + O(X^5)", ring), b = series("X^2 + O(X^3)", ring);
  EXPECT_EQ((a + b).precision(), 2);
  // min(N_a + ord b, N_b + ord a) = min(4 + 2, 2 + 0)
  EXPECT_EQ((a * b).precision(), 2);
  EXPECT_EQ((a * b).str(), "X^2 + O(X^3)");
  EXPECT_EQ(a.truncated(2).str(), "1 + X + O(X^3)");
  EXPECT_EQ(error_of([&] { a.truncated(6); }), Errc::invalid_argument);
  EXPECT_EQ(error_of([&] { a.coefficient(5); }), Errc::invalid_argument);
  EXPECT_EQ(error_of([&] { series_order_leading(series("O(X^3)", ring)); }), Errc::order_undefined);
}

TEST(SeriesArithmetic, MatchesPolynomialProductBelowPrecision) {
  auto ring = skew_ring(conjugation(octonions()), Shape::laurent);
  for_all(40, 43, [&](Sampler& rng, std::size_t) {
    Element p = rng.element(*ring, 0, 4, 3), q = rng.element(*ring, 0, 4, 3);
    const auto n = rng.integer(0, 6);
    auto sp = TruncatedSeries::embed(p, SeriesKind::power, n), sq = TruncatedSeries::embed(q, SeriesKind::power, n);
    auto prod = sp * sq;
    EXPECT_EQ(prod, TruncatedSeries::embed(p * q, SeriesKind::power, prod.precision()));
  });
}

TEST(SeriesArithmetic, RejectsDeltaAndMixedRings) {
  auto weyl = weyl_algebra(rationals());
  EXPECT_EQ(error_of([&] { TruncatedSeries::one(weyl, SeriesKind::power, 3); }), Errc::invalid_config);
  auto ore = skew_ring(identity_map(gaussian_rationals()), Shape::ore);
  EXPECT_EQ(error_of([&] { TruncatedSeries::one(ore, SeriesKind::laurent, 3); }), Errc::invalid_config);
  auto a = TruncatedSeries::one(gaussian_q2(), SeriesKind::power, 2);
  auto b = TruncatedSeries::one(skew_ring(conjugation(gaussian_rationals()), Shape::laurent), SeriesKind::power, 2);
  EXPECT_EQ(error_of([&] { (void)(a * b); }), Errc::incompatible_rings);
}
