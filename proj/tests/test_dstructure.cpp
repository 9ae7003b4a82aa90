#include <gtest/gtest.h>

#include "support/property.hpp"

using namespace skewring;
using skewring::testing::for_all;
using skewring::testing::sample_rings;

namespace {

std::vector<Element> sample_of(const Ring& ring, std::uint64_t seed, std::size_t n = 6) {
  Sampler rng(seed);
  std::vector<Element> out{ring.one()};
  for (std::size_t k = 0; k < n; ++k) out.push_back(rng.element(ring));
  return out;
}

}  // namespace

TEST(DStructure, LaurentFamiliesSatisfyTheAxioms) {
  auto h = quaternions();
  std::vector<TwistMap> maps{q_twist(gaussian_rationals(), 2), conjugation(octonions()),
                             inner(h, h->element({1, 1, 0, 0})), diag_swap(matrix_algebra(rationals(), 2))};
  for (const auto& s : maps) {
    SCOPED_TRACE(s.descriptor());
    auto report = validate_d_structure(laurent_family(s), 3, sample_of(*s.ring(), 61));
    for (const auto& a : report.axioms) EXPECT_TRUE(a.pass) << a.axiom << ": " << a.detail;
  }
}

TEST(DStructure, OreFamiliesSatisfyTheAxioms) {
  auto o = octonions();
  auto weyl = weyl_algebra(rationals());
  std::vector<PiFamily> families{
      {conjugation(o), standard_derivation(o->basis_element(1), o->basis_element(2))},
      {q_twist(gaussian_rationals(), 3), zero_map(gaussian_rationals())},
      {weyl->sigma(), *weyl->delta()},
  };
  for (const auto& fam : families) {
    SCOPED_TRACE(fam.sigma.descriptor() + " / " + fam.delta.descriptor());
    auto report = validate_d_structure(ore_family(fam), 3, sample_of(*fam.sigma.ring(), 62));
    EXPECT_TRUE(report.ok());
    for (const auto& a : report.axioms) EXPECT_TRUE(a.pass) << a.axiom << ": " << a.detail;
  }
}

TEST(DStructure, BrokenFamiliesAreCaught) {
  auto c = gaussian_rationals();
  TwistMap s = q_twist(c, 2);
  DStructure bad = laurent_family(s);
  bad.apply = [s](std::int64_t a, std::int64_t b, const Element& r) {
    if (a != b) return r.owner().zero();
    return apply_power(s, a * a, r);  // sigma^{a^2} is not a composition-compatible family
  };
  auto report = validate_d_structure(bad, 2, sample_of(*c, 63));
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.axiom("D1").pass);
  EXPECT_FALSE(report.axiom("D4").pass);
  EXPECT_NE(report.axiom("D4").detail.find("composition rule fails"), std::string::npos);

  DStructure leaky = laurent_family(s);
  leaky.support = [](std::int64_t a) { return std::pair{a, a}; };
  leaky.apply = [](std::int64_t a, std::int64_t b, const Element& r) { return a + 1 == b ? r : r.owner().zero(); };
  auto lr = validate_d_structure(leaky, 1, sample_of(*c, 64));
  EXPECT_FALSE(lr.axiom("D0").pass);
  EXPECT_FALSE(lr.axiom("D1").pass);
  EXPECT_THROW(lr.axiom("D9"), Error);
}

TEST(DStructure, MonoidRingProductMatchesTheRing) {
  for (const auto& [label, ring] : sample_rings()) {
    SCOPED_TRACE(label);
    DStructure d = ring->shape() == Shape::laurent
                       ? laurent_family(ring->sigma())
                       : ore_family({ring->sigma(), ring->delta() ? *ring->delta() : zero_map(ring->coefficients())});
    for_all(15, 65, [&](Sampler& rng, std::size_t) {
      Element p = rng.element(*ring), q = rng.element(*ring);
      EXPECT_EQ(dstructure_mul(d, ring, p, q), p * q);
    });
  }
}
