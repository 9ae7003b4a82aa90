#include <gtest/gtest.h>

#include "support/property.hpp"

using namespace skewring;
using skewring::testing::for_all;
using skewring::testing::sample_rings;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

Element word(const PiFamily& fam, const std::string& w, Element r) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = *it == 's' ? fam.sigma(r) : fam.delta(r);
  return r;
}

}  // namespace

TEST(LaurentProduct, MonomialRule) {
  for (const auto& [label, ring] : sample_rings()) {
    if (ring->shape() != Shape::laurent) continue;
    SCOPED_TRACE(label);
    const auto& coeffs = *ring->coefficients();
    for_all(25, 21, [&](Sampler& rng, std::size_t) {
      Element r = rng.element(coeffs, -1, 1, 2), s = rng.element(coeffs, -1, 1, 2);
      const auto m = rng.integer(-3, 3), n = rng.integer(-3, 3);
      Element expected = ring->monomial(r * apply_power(ring->sigma(), m, s), m + n);
      EXPECT_EQ(ring->monomial(r, m) * ring->monomial(s, n), expected);
    });
  }
}

TEST(LaurentProduct, FrozenValues) {
  auto c = gaussian_rationals();
  auto ring = skew_ring(q_twist(c, 2), Shape::laurent);
  Element i = c->basis_element(1);
  EXPECT_EQ(ring->monomial(i, 1) * ring->monomial(i, -1), ring->constant(Rational(-2) * c->one()));
  EXPECT_EQ((ring->monomial(i, 1) * ring->monomial(i, -1)).str(), "-2");
  // X i = 2i X, X^-1 i = (1/2) i X^-1
  EXPECT_EQ(ring->power(1) * ring->constant(i), ring->monomial(Rational(2) * i, 1));
  EXPECT_EQ(ring->power(-1) * ring->constant(i), ring->monomial(Rational(1, 2) * i, -1));
  EXPECT_EQ(ring->power(3) * ring->power(-3), ring->one());
}

TEST(OreProduct, MonomialRuleAgainstWordSums) {
  auto o = octonions();
  TwistMap sigma = conjugation(o);
  TwistMap delta(o, "d", [sigma, a = o->basis_element(3)](const Element& r) { return a * r - sigma(r) * a; });
  auto ring = SkewPolyRing::create(RingConfig{o, sigma, delta, "X", Shape::ore});
  PiFamily fam{sigma, delta};
  for_all(30, 22, [&](Sampler& rng, std::size_t) {
    Element r = rng.element(*o), s = rng.element(*o);
    const auto m = rng.integer(0, 4), n = rng.integer(0, 3);
    Element expected = ring->zero();
    for (std::int64_t i = 0; i <= m; ++i) {
      Element c = o->zero();
      for (const auto& w : pi_words(i, m)) c += word(fam, w, s);
      expected += ring->monomial(r * c, i + n);
    }
    EXPECT_EQ(ring->monomial(r, m) * ring->monomial(s, n), expected);
  });
}

TEST(OreProduct, WeylAndTorus) {
  auto weyl = weyl_algebra(rationals());
  auto inner_ring = as_poly_ring(weyl->coefficients());
  Element y = inner_ring->power(1);
  Element X = weyl->power(1), Y = weyl->constant(y);
  EXPECT_EQ(X * Y, Y * X + weyl->one());
  EXPECT_EQ((X * Y - Y * X).str(), "1");
  // X Y^2 = Y^2 X + 2Y
  EXPECT_EQ(X * (Y * Y), (Y * Y) * X + Rational(2) * Y);

  auto torus = quantum_torus(octonions(), 2);
  auto ty = as_poly_ring(torus->coefficients());
  Element TY = torus->constant(ty->power(1)), TX = torus->power(1);
  EXPECT_EQ(TX * TY, Rational(2) * (TY * TX));
  EXPECT_EQ(torus->power(-1) * TY, Rational(1, 2) * (TY * torus->power(-1)));
}

TEST(RingAxioms, UnitDistributivityScalars) {
  for (const auto& [label, ring] : sample_rings()) {
    SCOPED_TRACE(label);
    for_all(40, 23, [&](Sampler& rng, std::size_t) {
      Element a = rng.element(*ring), b = rng.element(*ring), c = rng.element(*ring);
      EXPECT_EQ(ring->one() * a, a);
      EXPECT_EQ(a * ring->one(), a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_TRUE((a - a).is_zero());
      const Rational q = rng.rational();
      EXPECT_EQ(q * (a * b), (q * a) * b);
      EXPECT_EQ(q * (a * b), a * (q * b));
    });
  }
}

TEST(RingAxioms, AssociativeWhenCoefficientsAndTwistAre) {
  auto h = quaternions();
  std::vector<PolyRingPtr> rings{
      skew_ring(conjugation(gaussian_rationals()), Shape::laurent),
      skew_ring(inner(h, h->element({1, 1, 0, 0})), Shape::laurent),
      skew_ring(inner(h, h->element({1, 0, 2, 1})), Shape::ore),
      weyl_algebra(rationals()),
  };
  for (const auto& ring : rings) {
    SCOPED_TRACE(ring->descriptor());
    for_all(30, 24, [&](Sampler& rng, std::size_t) {
      Element a = rng.element(*ring), b = rng.element(*ring), c = rng.element(*ring);
      EXPECT_EQ((a * b) * c, a * (b * c));
    });
  }
}

// (S,S,X) = (S,X,S) = 0 in every shape, whatever the twist does to associativity.
TEST(RingAxioms, VariableAssociatesOnTheRightAndInTheMiddle) {
  for (const auto& [label, ring] : sample_rings()) {
    SCOPED_TRACE(label);
    const Element X = ring->power(1);
    const std::int64_t lo = ring->shape() == Shape::laurent ? -4 : 0;
    for_all(50, 26, [&](Sampler& rng, std::size_t) {
      Element p = rng.element(*ring, lo, 4, 4), q = rng.element(*ring, lo, 4, 4);
      EXPECT_EQ((p * q) * X, p * (q * X));
      EXPECT_EQ((p * X) * q, p * (X * q));
      EXPECT_EQ((p + q) * X * q, p * X * q + q * X * q);
    });
  }
}

TEST(RingAxioms, NonMultiplicativeTwistBreaksAssociativity) {
  auto c = gaussian_rationals();
  auto ring = skew_ring(q_twist(c, 2), Shape::ore);
  Element X = ring->power(1), I = ring->constant(c->basis_element(1));
  // (X i) i = -4 X, X (i i) = -X
  EXPECT_EQ((X * I) * I, Rational(-4) * X);
  EXPECT_EQ(X * (I * I), -X);
}

TEST(RightForm, RoundTrip) {
  for (const auto& [label, ring] : sample_rings()) {
    if (ring->delta()) continue;
    SCOPED_TRACE(label);
    for_all(30, 25, [&](Sampler& rng, std::size_t) {
      Element p = rng.element(*ring);
      EXPECT_EQ(from_right_form(ring, to_right_form(p)), p);
    });
  }
}

TEST(RightForm, OreWithDelta) {
  auto weyl = weyl_algebra(rationals());
  for_all(30, 26, [&](Sampler& rng, std::size_t) {
    Element p = rng.element(*weyl, 0, 3);
    EXPECT_EQ(from_right_form(weyl, to_right_form(p)), p);
  });
}

TEST(DegreeData, DegreeOrderLeading) {
  auto c = gaussian_rationals();
  auto ring = skew_ring(q_twist(c, 2), Shape::laurent);
  Element p = ring->from_terms({{-2, c->one()}, {3, c->basis_element(1)}, {1, c->one()}});
  EXPECT_EQ(degree(p), 3);
  EXPECT_EQ(order(p), -2);
  EXPECT_EQ(leading_coefficient(p), c->basis_element(1));
  EXPECT_EQ(coefficient(p, 1), c->one());
  EXPECT_TRUE(coefficient(p, 2).is_zero());
  EXPECT_EQ(error_of([&] { degree(ring->zero()); }), Errc::zero_polynomial);
}

TEST(DegreeData, LikeTermsCombine) {
  auto h = quaternions();
  auto ring = skew_ring(identity_map(h), Shape::ore);
  Element p = ring->from_terms({{2, h->one()}, {2, -h->one()}, {0, h->basis_element(2)}});
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(degree(p), 0);
}

TEST(Construction, RejectsBadConfigurations) {
  auto c = gaussian_rationals();
  EXPECT_EQ(error_of([&] { SkewPolyRing::create(RingConfig{c, zero_map(c), std::nullopt, "X", Shape::ore}); }),
            Errc::does_not_respect_one);
  EXPECT_EQ(error_of([&] {
              SkewPolyRing::create(RingConfig{c, identity_map(c), zero_map(c), "X", Shape::laurent});
            }),
            Errc::invalid_config);
  EXPECT_EQ(error_of([&] {
              SkewPolyRing::create(RingConfig{c, identity_map(c), identity_map(c), "X", Shape::ore});
            }),
            Errc::invalid_config);
  auto h = quaternions();
  EXPECT_EQ(error_of([&] { SkewPolyRing::create(RingConfig{c, identity_map(h), std::nullopt, "X", Shape::ore}); }),
            Errc::incompatible_rings);
  auto ore = skew_ring(identity_map(c), Shape::ore);
  EXPECT_EQ(error_of([&] { ore->power(-1); }), Errc::invalid_argument);
}

TEST(Construction, IteratedExtensionNeedsCommutingMaps) {
  auto h = quaternions();
  auto s = skew_ring(inner(h, h->basis_element(1)), Shape::laurent, "Y");
  EXPECT_EQ(error_of([&] { iterated_extend(s, "X", inner(h, h->element({1, 0, 1, 0}))); }), Errc::non_commuting);
  auto t = iterated_extend(s, "X", inner(h, h->basis_element(1)), 3);
  Element X = t->power(1), Y = t->constant(s->power(1));
  EXPECT_EQ(X * Y, Rational(3) * (Y * X));
}

TEST(Units, MonomialInverses) {
  auto c = gaussian_rationals();
  auto conj_ring = skew_ring(conjugation(c), Shape::laurent);
  Element a = conj_ring->monomial(c->element({1, 1}), 1);
  auto inv = try_invert(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, conj_ring->one());
  EXPECT_EQ(*inv * a, conj_ring->one());
  // under a non-multiplicative twist iX has a right inverse but no two-sided one
  auto q2 = skew_ring(q_twist(c, 2), Shape::laurent);
  EXPECT_FALSE(try_invert(q2->monomial(c->basis_element(1), 1)).has_value());
  auto ore = skew_ring(identity_map(c), Shape::ore);
  EXPECT_FALSE(try_invert(ore->power(1)).has_value());
}

TEST(Formatting, Examples) {
  auto c = gaussian_rationals();
  auto ring = skew_ring(q_twist(c, 2), Shape::laurent);
  Element i = c->basis_element(1);
  EXPECT_EQ(ring->zero().str(), "0");
  EXPECT_EQ(ring->one().str(), "1");
  EXPECT_EQ(ring->power(-1).str(), "X^-1");
  Element p = ring->from_terms({{2, Rational(3) * c->one()}, {1, -i}, {0, c->element({Rational(1, 2), 1})}});
  EXPECT_EQ(p.str(), "3X^2 + [0,-1]X + [1/2,1]");
}
