#include <gtest/gtest.h>

#include "support/property.hpp"

using namespace skewring;
using skewring::testing::for_all;

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

TEST(TwistTags, QTwistIsAutomorphismOnlyForPlusMinusOne) {
  for (Rational q : {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3), Rational(-3, 2)}) {
    TwistMap s = q_twist(gaussian_rationals(), q);
    SCOPED_TRACE(s.descriptor());
    EXPECT_TRUE(s.has(MapTag::additive));
    EXPECT_TRUE(s.has(MapTag::respects_one));
    EXPECT_TRUE(s.has(MapTag::bijective));
    EXPECT_EQ(classify_multiplicativity(s).has(MapTag::automorphism), q == 1 || q == -1);
  }
  EXPECT_EQ(q_twist(gaussian_rationals(), 2).tags().names(),
            (std::vector<std::string>{"additive", "respects_one", "bijective"}));
}

TEST(TwistTags, QTwistZeroIsNotBijective) {
  EXPECT_EQ(error_of([] { q_twist(gaussian_rationals(), 0); }), Errc::not_bijective);
}

TEST(TwistTags, OctonionConjugation) {
  EXPECT_EQ(conjugation(octonions()).tags().names(),
            (std::vector<std::string>{"additive", "respects_one", "bijective", "antiautomorphism", "involution"}));
  // commutative coefficients: conjugation is both
  auto c = conjugation(gaussian_rationals());
  EXPECT_TRUE(c.has(MapTag::automorphism));
  EXPECT_TRUE(c.has(MapTag::antiautomorphism));
}

TEST(TwistTags, MatrixMaps) {
  auto m = matrix_algebra(rationals(), 2);
  EXPECT_TRUE(transpose(m).has(MapTag::antiautomorphism));
  EXPECT_FALSE(transpose(m).has(MapTag::automorphism));
  TwistMap d = diag_swap(m);
  EXPECT_FALSE(d.has(MapTag::automorphism));
  EXPECT_EQ(d(m->unit_matrix(0, 0)), m->unit_matrix(1, 1));
  EXPECT_EQ(d(m->unit_matrix(0, 1)), m->unit_matrix(0, 1));
  auto mc = matrix_algebra(gaussian_rationals(), 2);
  TwistMap ct = conj_transpose(mc);
  EXPECT_EQ(ct.descriptor(), "conj_transpose");
  EXPECT_TRUE(ct.has(MapTag::involution));
  EXPECT_EQ(error_of([&] { diag_swap(matrix_algebra(rationals(), 3)); }), Errc::invalid_argument);
}

TEST(TwistTags, InnerAutomorphismIsConjugation) {
  auto h = quaternions();
  Element i = h->basis_element(1), j = h->basis_element(2);
  TwistMap s = inner(h, i);
  EXPECT_EQ(s(j), -j);
  EXPECT_EQ(s(i), i);
  EXPECT_TRUE(s.has(MapTag::automorphism));
  for_all(20, 9, [&](Sampler& rng, std::size_t) {
    Element u = rng.nonzero(*h);
    EXPECT_TRUE(classify_multiplicativity(inner(h, u)).has(MapTag::automorphism));
  });
  auto m = matrix_algebra(rationals(), 2);
  EXPECT_EQ(error_of([&] { inner(m, m->unit_matrix(0, 0)); }), Errc::requires_unit);
}

TEST(TwistTags, LinearMapRoundTrip) {
  auto c = gaussian_rationals();
  TwistMap s = q_twist(c, 3);
  QMatrix m = matrix_of(s);
  EXPECT_EQ(m(1, 1), Rational(3));
  TwistMap t = linear_map(c, m);
  for (const auto& b : c->basis()) EXPECT_EQ(t(b), s(b));
  EXPECT_TRUE(t.has(MapTag::bijective));
  QMatrix singular(2, 2);
  singular(0, 0) = 1;
  EXPECT_FALSE(linear_map(c, singular).has(MapTag::bijective));
}

TEST(TwistTags, WrongInverseIsRejected) {
  auto c = gaussian_rationals();
  TwistMap s = q_twist(c, 2);
  auto fwd = [s](const Element& x) { return s(x); };
  EXPECT_EQ(error_of([&] { TwistMap(c, "bad", fwd, fwd); }), Errc::not_bijective);
}

TEST(TwistTags, UndecidableRings) {
  auto inner_ring = polynomial_ring(rationals(), "Y");
  auto outer = polynomial_ring(inner_ring, "Z");
  EXPECT_EQ(error_of([&] { classify_multiplicativity(identity_map(outer)); }), Errc::cannot_decide);
}

TEST(TwistAxioms, RolesSigmaAndDelta) {
  auto c = gaussian_rationals();
  EXPECT_TRUE(validate_twist_axioms(q_twist(c, 2), MapRole::sigma).ok());
  EXPECT_FALSE(validate_twist_axioms(zero_map(c), MapRole::sigma).ok());
  EXPECT_TRUE(validate_twist_axioms(zero_map(c), MapRole::delta).ok());
  EXPECT_FALSE(validate_twist_axioms(identity_map(c), MapRole::delta).ok());
}

TEST(Derivations, StandardDerivationLaw) {
  auto o = octonions();
  for_all(10, 13, [&](Sampler& rng, std::size_t) {
    TwistMap d = standard_derivation(rng.element(*o), rng.element(*o));
    EXPECT_TRUE(d.has(MapTag::kills_one));
    EXPECT_TRUE(d.has(MapTag::additive));
    for (const auto& x : o->basis())
      for (const auto& y : o->basis()) EXPECT_EQ(d(x * y), d(x) * y + x * d(y));
  });
}

TEST(Derivations, AdditivityOnRandomSums) {
  auto o = octonions();
  TwistMap d = standard_derivation(o->basis_element(1), o->basis_element(2));
  for_all(50, 14, [&](Sampler& rng, std::size_t) {
    Element x = rng.element(*o), y = rng.element(*o);
    EXPECT_EQ(d(x + y), d(x) + d(y));
  });
}

TEST(PiFamily, OneOfThreeIsTheWordSum) {
  auto o = octonions();
  PiFamily fam{conjugation(o), standard_derivation(o->basis_element(1), o->basis_element(4))};
  for_all(25, 15, [&](Sampler& rng, std::size_t) {
    Element r = rng.element(*o);
    const auto& s = fam.sigma;
    const auto& d = fam.delta;
    EXPECT_EQ(pi_apply(fam, 1, 3, r), s(d(d(r))) + d(s(d(r))) + d(d(s(r))));
  });
}

TEST(PiFamily, RecursionMatchesEnumeration) {
  auto h = quaternions();
  TwistMap s = inner(h, h->element({1, 2, 0, 1}));
  Element a = h->basis_element(3);
  TwistMap d(h, "inner_delta", [s, a](const Element& r) { return a * r - s(r) * a; });
  PiFamily fam{s, d};
  for (std::int64_t m = 0; m <= 6; ++m)
    for (std::int64_t i = 0; i <= m; ++i)
      for (const auto& r : h->basis()) {
        Element sum = h->zero();
        for (const auto& w : pi_words(i, m)) sum += word(fam, w, r);
        EXPECT_EQ(pi_apply(fam, i, m, r), sum) << "i=" << i << " m=" << m;
      }
}

TEST(PiFamily, WordsAndEdgeCases) {
  EXPECT_EQ(pi_words(1, 3), (std::vector<std::string>{"sdd", "dsd", "dds"}));
  EXPECT_EQ(pi_words(0, 0), (std::vector<std::string>{""}));
  EXPECT_EQ(pi_words(2, 4).size(), 6u);
  auto c = gaussian_rationals();
  PiFamily fam{q_twist(c, 2), zero_map(c)};
  Element i = c->basis_element(1);
  EXPECT_TRUE(pi_apply(fam, 3, 2, i).is_zero());  // i > m
  EXPECT_EQ(pi_apply(fam, 2, 2, i), Rational(4) * i);
  EXPECT_TRUE(pi_apply(fam, 1, 2, i).is_zero());
}

TEST(Powers, ApplyPowerAndMapPower) {
  auto c = gaussian_rationals();
  TwistMap s = q_twist(c, 2);
  Element i = c->basis_element(1);
  EXPECT_EQ(apply_power(s, 3, i), Rational(8) * i);
  EXPECT_EQ(apply_power(s, -2, i), Rational(1, 4) * i);
  EXPECT_EQ(apply_power(s, 0, i), i);
  TwistMap s2 = map_power(conjugation(octonions()), 2);
  EXPECT_TRUE(s2.has(MapTag::automorphism));
  TwistMap z = zero_map(c);
  EXPECT_EQ(error_of([&] { apply_power(z, -1, i); }), Errc::inverse_unavailable);
}

TEST(FiniteOrderDetection, OrdersAndCertificates) {
  auto c = gaussian_rationals();
  EXPECT_EQ(detect_finite_order(conjugation(c), 8).order, 2);
  EXPECT_EQ(detect_finite_order(identity_map(c), 8).order, 1);
  auto fo = detect_finite_order(q_twist(c, 2), 8);
  EXPECT_FALSE(fo.order);
  EXPECT_TRUE(fo.infinite_certified);
  EXPECT_EQ(detect_finite_order(inner(quaternions(), quaternions()->element({1, 1, 0, 0})), 8).order, 4);
  EXPECT_EQ(error_of([] { detect_finite_order(identity_map(polynomial_ring(rationals())), 3); }),
            Errc::order_unsupported);
}

TEST(Commuting, MapsCommute) {
  auto c = gaussian_rationals();
  EXPECT_TRUE(maps_commute(q_twist(c, 2), conjugation(c)));
  auto h = quaternions();
  EXPECT_FALSE(maps_commute(inner(h, h->basis_element(1)), inner(h, h->element({1, 0, 1, 0}))));
}
