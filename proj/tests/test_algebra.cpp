#include <gtest/gtest.h>

#include <cstdlib>

#include "support/property.hpp"

using namespace skewring;
using skewring::testing::for_all;

namespace {

// Basis products as sign * (index + 1), row p column q = e_p e_q.
// Frozen from tests/oracles/cayley_dickson.py.
const int kOctonionTable[8][8] = {
    {1, 2, 3, 4, 5, 6, 7, 8},         {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},     {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},     {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},     {8, -7, 6, 5, -4, -3, 2, -1},
};
const int kQuaternionTable[4][4] = {{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}};

Element signed_basis(const AlgebraRing& a, int code) {
  Element e = a.basis_element(static_cast<std::size_t>(std::abs(code) - 1));
  return code < 0 ? -e : e;
}

std::vector<AlgebraPtr> all_algebras() {
  return {rationals(), gaussian_rationals(), quaternions(), octonions(), sedenions(), jordan_quaternions()};
}

}  // namespace

TEST(CayleyDickson, OctonionTableMatchesOracle) {
  auto o = octonions();
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q)
      EXPECT_EQ(o->basis_element(p) * o->basis_element(q), signed_basis(*o, kOctonionTable[p][q]))
          << "e" << p << " e" << q;
}

TEST(CayleyDickson, QuaternionTableMatchesOracle) {
  auto h = quaternions();
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      EXPECT_EQ(h->basis_element(p) * h->basis_element(q), signed_basis(*h, kQuaternionTable[p][q]));
}

TEST(CayleyDickson, OctonionAssociatorWitness) {
  auto o = octonions();
  auto e = [&](std::size_t p) { return o->basis_element(p); };
  EXPECT_EQ(associator(e(1), e(2), e(4)), Rational(2) * e(7));
  std::size_t count = 0;
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q)
      for (std::size_t r = 0; r < 8; ++r) count += !associator(e(p), e(q), e(r)).is_zero();
  EXPECT_EQ(count, 168u);
}

TEST(CayleyDickson, ChainProperties) {
  EXPECT_TRUE(is_commutative(*gaussian_rationals()));
  EXPECT_TRUE(is_associative(*gaussian_rationals()));
  EXPECT_TRUE(is_associative(*quaternions()));
  EXPECT_FALSE(is_commutative(*quaternions()));
  EXPECT_FALSE(is_associative(*octonions()));
  EXPECT_TRUE(find_nonassociative_triple(*octonions()).has_value());
  // octonions are alternative: (x, x, y) = 0 on basis elements
  auto o = octonions();
  for (const auto& x : o->basis())
    for (const auto& y : o->basis()) {
      EXPECT_TRUE(associator(x, x, y).is_zero());
      EXPECT_TRUE(associator(y, x, x).is_zero());
    }
}

TEST(CayleyDickson, LabelsAndNames) {
  EXPECT_EQ(gaussian_rationals()->spec().basis, (std::vector<std::string>{"1", "i"}));
  EXPECT_EQ(quaternions()->spec().basis, (std::vector<std::string>{"1", "i", "j", "k"}));
  EXPECT_EQ(octonions()->spec().basis.back(), "e7");
  EXPECT_EQ(octonions()->name(), "O");
  EXPECT_TRUE(octonions()->is_division_ring());
  EXPECT_FALSE(sedenions()->is_division_ring());
}

TEST(CayleyDickson, RequiresInvolution) {
  auto hp = jordan_quaternions();
  AlgebraSpec s = hp->spec();
  s.involution.reset();
  auto plain = AlgebraRing::create(s);
  try {
    cayley_dickson_double(*plain);
    FAIL() << "doubled an algebra without involution";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_star_algebra);
  }
}

TEST(AlgebraAxioms, UnitAndDistributivityOnBasis) {
  for (const auto& a : all_algebras()) {
    SCOPED_TRACE(a->name());
    auto basis = a->basis();
    const Element one = a->one();
    for (const auto& x : basis) {
      EXPECT_EQ(one * x, x);
      EXPECT_EQ(x * one, x);
      for (const auto& y : basis)
        for (const auto& z : basis) {
          EXPECT_EQ(x * (y + z), x * y + x * z);
          EXPECT_EQ((x + y) * z, x * z + y * z);
        }
    }
  }
}

TEST(AlgebraAxioms, RandomElements) {
  for (const auto& a : all_algebras()) {
    SCOPED_TRACE(a->name());
    for_all(200, 7, [&](Sampler& rng, std::size_t) {
      Element x = rng.element(*a), y = rng.element(*a), z = rng.element(*a);
      EXPECT_EQ(a->one() * x, x);
      EXPECT_EQ(x * a->one(), x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_TRUE((x - x).is_zero());
      EXPECT_EQ(x + a->zero(), x);
      const Rational q = rng.rational();
      EXPECT_EQ(q * (x * y), (q * x) * y);
      EXPECT_EQ(q * (x * y), x * (q * y));
    });
  }
}

TEST(AlgebraAxioms, InvolutionReversesProducts) {
  for (const auto& a : all_algebras()) {
    if (!a->has_involution()) continue;
    SCOPED_TRACE(a->name());
    for (const auto& r : a->basis()) {
      EXPECT_EQ(a->involution(a->involution(r)), r);
      for (const auto& s : a->basis()) EXPECT_EQ(a->involution(r * s), a->involution(s) * a->involution(r));
    }
  }
}

TEST(AlgebraAxioms, InvertIsTwoSidedWheneverItReturns) {
  std::vector<RingPtr> rings{gaussian_rationals(), quaternions(), octonions(), sedenions(),
                             matrix_algebra(rationals(), 2), matrix_algebra(gaussian_rationals(), 2)};
  for (const auto& r : rings) {
    SCOPED_TRACE(r->descriptor());
    for_all(60, 3, [&](Sampler& rng, std::size_t) {
      Element x = rng.element(*r);
      if (auto inv = try_invert(x)) {
        EXPECT_EQ(x * *inv, r->one());
        EXPECT_EQ(*inv * x, r->one());
      }
    });
  }
}

TEST(AlgebraAxioms, SingularMatrixHasNoInverse) {
  auto m = matrix_algebra(rationals(), 2);
  EXPECT_FALSE(try_invert(m->unit_matrix(0, 0)).has_value());
  try {
    invert(m->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_invertible);
  }
}

TEST(AlgebraAxioms, SolveLeftAndRight) {
  auto h = quaternions();
  Element i = h->basis_element(1), j = h->basis_element(2), k = h->basis_element(3);
  auto y = solve_left(i, k);  // i y = k
  ASSERT_TRUE(y);
  EXPECT_EQ(i * *y, k);
  EXPECT_EQ(*y, j);
  auto z = solve_right(k, i);  // z i = k
  ASSERT_TRUE(z);
  EXPECT_EQ(*z * i, k);
  EXPECT_EQ(*z, -j);
}

TEST(Jordan, AssociatorAndIdentity) {
  auto hp = jordan_quaternions();
  Element i = hp->basis_element(1), j = hp->basis_element(2);
  EXPECT_EQ(associator(i, i, j), -j);
  EXPECT_TRUE(is_commutative(*hp));
  EXPECT_FALSE(is_associative(*hp));
  for_all(100, 17, [&](Sampler& rng, std::size_t) {
    Element a = rng.element(*hp), b = rng.element(*hp);
    Element aa = a * a;
    EXPECT_EQ((a * b) * aa, a * (b * aa));
  });
}

TEST(Jordan, RequiresAssociativeInput) {
  try {
    jordan_algebra(*octonions());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::requires_associative);
  }
}

TEST(AlgebraSpecValidation, RejectsBrokenSpecs) {
  AlgebraSpec s = quaternions()->spec();
  s.name = "broken";
  s.unit = {Rational(0), Rational(1), Rational(0), Rational(0)};
  EXPECT_THROW(AlgebraRing::create(s), Error);
  s = quaternions()->spec();
  s.table.pop_back();
  EXPECT_THROW(AlgebraRing::create(s), Error);
  s = quaternions()->spec();
  (*s.involution)[1] = {Rational(0), Rational(1), Rational(0), Rational(0)};  // i* = i breaks reversal
  try {
    AlgebraRing::create(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_algebra);
  }
}

TEST(MatrixRing, EntriesAndBasis) {
  auto m = matrix_algebra(rationals(), 2);
  EXPECT_EQ(m->dimension(), 4u);
  EXPECT_EQ(m->basis_labels(), (std::vector<std::string>{"E11", "E12", "E21", "E22"}));
  Element e12 = m->unit_matrix(0, 1), e21 = m->unit_matrix(1, 0);
  EXPECT_EQ(e12 * e21, m->unit_matrix(0, 0));
  EXPECT_TRUE((e12 * e12).is_zero());
  EXPECT_EQ(m->from_coordinates(m->coordinates(e12 + e21)), e12 + e21);
  auto mh = matrix_algebra(quaternions(), 2);
  EXPECT_EQ(mh->dimension(), 16u);
  EXPECT_EQ(mh->basis_labels()[1], "E11_i");
}
