#ifndef SKEWRING_DSTRUCTURE_HPP
#define SKEWRING_DSTRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "skewring/maps.hpp"
#include "skewring/poly.hpp"

namespace skewring {

enum class Monoid { naturals, integers };

/// A family pi_b^a : R -> R indexed by a monoid (N or Z under addition).
/// `support(a)` bounds the b with pi_b^a possibly nonzero; D0 is checked
/// against it.
struct DStructure {
  Monoid monoid;
  RingPtr ring;
  std::function<Element(std::int64_t a, std::int64_t b, const Element& r)> apply;
  std::function<std::pair<std::int64_t, std::int64_t>(std::int64_t a)> support;
  std::string name;
};

/// pi_b^a = sigma^a when a = b and 0 otherwise, over Z.
inline DStructure laurent_family(const TwistMap& sigma) {
  DStructure d;
  d.monoid = Monoid::integers;
  d.ring = sigma.ring();
  d.apply = [sigma](std::int64_t a, std::int64_t b, const Element& r) {
    if (a != b) return r.owner().zero();
    return apply_power(sigma, a, r);
  };
  d.support = [](std::int64_t a) { return std::pair{a, a}; };
  d.name = "laurent(" + sigma.descriptor() + ")";
  return d;
}

/// pi_b^a = pi_b^a(sigma, delta) over N.
inline DStructure ore_family(const PiFamily& fam) {
  DStructure d;
  d.monoid = Monoid::naturals;
  d.ring = fam.sigma.ring();
  d.apply = [fam](std::int64_t a, std::int64_t b, const Element& r) { return pi_apply(fam, b, a, r); };
  d.support = [](std::int64_t a) { return std::pair<std::int64_t, std::int64_t>{0, a}; };
  d.name = "ore(" + fam.sigma.descriptor() + "," + fam.delta.descriptor() + ")";
  return d;
}

struct DAxiomResult {
  std::string axiom;
  bool pass = true;
  std::string detail;
};

struct DReport {
  std::vector<DAxiomResult> axioms;

  bool ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const DAxiomResult& a) { return a.pass; });
  }
  const DAxiomResult& axiom(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.axiom == name) return a;
    throw Error(Errc::invalid_argument, "unknown axiom " + name);
  }
};

/// Checks D0 through D4 for all monoid elements a, b, c with |a|, |b|, |c| <=
/// bound (0 <= . <= bound over N) and every sampled ring element.
inline DReport validate_d_structure(const DStructure& d, std::int64_t bound, const std::vector<Element>& sample) {
  DReport report;
  auto fail = [](DAxiomResult& res, std::string why) {
    if (res.pass) res.detail = std::move(why);
    res.pass = false;
  };
  const std::int64_t lo = d.monoid == Monoid::integers ? -bound : 0;
  const Ring& ring = *d.ring;
  const Element one = ring.one();
  auto idx = [](std::int64_t a, std::int64_t b) {
    return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
  };

  DAxiomResult d0{"D0", true, ""};
  for (std::int64_t a = lo; a <= bound; ++a) {
    auto [s_lo, s_hi] = d.support(a);
    // scan a margin beyond the declared support inside the monoid
    for (std::int64_t b = std::min(lo, s_lo) - 2; b <= std::max(bound, s_hi) + 2; ++b) {
      if (d.monoid == Monoid::naturals && b < 0) continue;
      if (b >= s_lo && b <= s_hi) continue;
      for (const auto& r : sample)
        if (!d.apply(a, b, r).is_zero()) fail(d0, "nonzero outside support at " + idx(a, b));
    }
  }
  report.axioms.push_back(d0);

  DAxiomResult d1{"D1", true, ""};
  for (const auto& r : sample)
    if (!(d.apply(0, 0, r) == r)) fail(d1, "pi_e^e is not the identity");
  for (std::int64_t a = lo; a <= bound; ++a) {
    if (a == 0) continue;
    for (const auto& r : sample)
      if (!d.apply(0, a, r).is_zero()) fail(d1, "pi_a^e nonzero at a=" + std::to_string(a));
  }
  report.axioms.push_back(d1);

  DAxiomResult d2{"D2", true, ""};
  for (std::int64_t a = lo; a <= bound; ++a)
    for (std::int64_t b = lo; b <= bound; ++b) {
      Element v = d.apply(a, b, one);
      if (!(v == (a == b ? one : ring.zero()))) fail(d2, "pi_b^a(1) is not the Kronecker delta at " + idx(a, b));
    }
  report.axioms.push_back(d2);

  DAxiomResult d3{"D3", true, ""};
  for (std::int64_t a = lo; a <= bound; ++a)
    for (std::int64_t b = lo; b <= bound; ++b)
      for (std::size_t p = 0; p + 1 < sample.size(); ++p) {
        const Element& r = sample[p];
        const Element& s = sample[p + 1];
        if (!(d.apply(a, b, r + s) == d.apply(a, b, r) + d.apply(a, b, s)))
          fail(d3, "not additive at " + idx(a, b));
      }
  report.axioms.push_back(d3);

  DAxiomResult d4{"D4", true, ""};
  for (std::int64_t a = lo; a <= bound; ++a)
    for (std::int64_t b = lo; b <= bound; ++b)
      for (std::int64_t c = lo; c <= bound; ++c) {
        auto [s_lo, s_hi] = d.support(a);
        for (const auto& r : sample) {
          Element lhs = d.apply(a + b, c, r);
          Element rhs = ring.zero();
          for (std::int64_t x = s_lo; x <= s_hi; ++x) {
            const std::int64_t y = c - x;
            if (d.monoid == Monoid::naturals && y < 0) continue;
            rhs += d.apply(a, x, d.apply(b, y, r));
          }
          if (!(lhs == rhs))
            fail(d4, "composition rule fails at (a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                         ",c=" + std::to_string(c) + ")");
        }
      }
  report.axioms.push_back(d4);
  return report;
}

/// Product in the monoid ring R[G; pi] of two polynomials of `ring`, computed
/// from the family alone: (r X^a)(s X^b) = sum_c (r pi_c^a(s)) X^{c+b}.
inline Element dstructure_mul(const DStructure& d, const PolyRingPtr& ring, const Element& p, const Element& q) {
  std::vector<Term> out;
  for (const auto& x : p.terms())
    for (const auto& y : q.terms()) {
      auto [lo, hi] = d.support(x.exponent);
      for (std::int64_t c = lo; c <= hi; ++c) {
        Element v = x.coeff * d.apply(x.exponent, c, y.coeff);
        if (!v.is_zero()) out.push_back({c + y.exponent, std::move(v)});
      }
    }
  return ring->from_terms(std::move(out));
}

}  // namespace skewring

#endif
