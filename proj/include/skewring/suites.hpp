#ifndef SKEWRING_SUITES_HPP
#define SKEWRING_SUITES_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "skewring/algebra.hpp"
#include "skewring/config.hpp"
#include "skewring/dstructure.hpp"
#include "skewring/maps.hpp"
#include "skewring/matrix.hpp"
#include "skewring/poly.hpp"
#include "skewring/random.hpp"
#include "skewring/report.hpp"
#include "skewring/series.hpp"
#include "skewring/structure.hpp"
#include "skewring/text.hpp"

namespace skewring {

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  std::string detail;
};

inline Outcome pass_with(std::string detail = {}) { return {CheckStatus::pass, std::nullopt, std::move(detail)}; }
inline Outcome fail_with(std::string detail, std::optional<std::string> witness = std::nullopt) {
  return {CheckStatus::fail, std::move(witness), std::move(detail)};
}
inline Outcome witness_with(std::string witness, std::string detail = {}) {
  return {CheckStatus::witness, std::move(witness), std::move(detail)};
}

struct CheckSpec {
  std::string id;
  int criterion;
  std::string anchor;
  std::function<Outcome()> run;
};

/// A named ring used by the suites; `label` keeps check ids readable.
struct NamedRing {
  std::string label;
  PolyRingPtr ring;
};

/// Rings supplied by the user with --config. Empty means the built-in set.
using SuiteScope = std::vector<NamedRing>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"nuclei",      "laurent-axioms",    "associativity", "simplicity",
                                              "finite-order-ideals", "hilbert-reduction", "series", "jordan",
                                              "quantum-torus", "d-structure", "all"};
  return names;
}

namespace suites {

// ---------------------------------------------------------------------------
// Built-in configurations

inline PolyRingPtr gaussian_twisted(const Rational& q, Shape shape = Shape::laurent) {
  return skew_ring(q_twist(gaussian_rationals(), q), shape);
}

inline std::shared_ptr<const MatrixRing> m2() { return matrix_algebra(rationals(), 2); }

inline NamedRing gaussian_q2() { return {"qi-q2", gaussian_twisted(2)}; }
inline NamedRing gaussian_conj() { return {"qi-conj", skew_ring(conjugation(gaussian_rationals()), Shape::laurent)}; }
inline NamedRing matrix_diag_swap() { return {"m2-diag-swap", skew_ring(diag_swap(m2()), Shape::laurent)}; }
inline NamedRing octonion_conj() { return {"o-conj", skew_ring(conjugation(octonions()), Shape::laurent)}; }

inline Element quaternion(std::vector<Rational> c) { return quaternions()->element(c); }

inline NamedRing quaternion_inner() {
  return {"h-inner", skew_ring(inner(quaternions(), quaternion({1, 1, 0, 0})), Shape::laurent)};
}

/// The laurent configurations with finite-dimensional coefficients.
inline std::vector<NamedRing> finite_laurent_rings() {
  return {gaussian_q2(),
          {"qi-q-1", gaussian_twisted(-1)},
          gaussian_conj(),
          matrix_diag_swap(),
          {"m2-transpose", skew_ring(transpose(m2()), Shape::laurent)},
          octonion_conj(),
          quaternion_inner()};
}

/// delta(r) = a r - sigma(r) a, a sigma-derivation on associative rings.
inline TwistMap inner_sigma_derivation(const TwistMap& sigma, const Element& a) {
  return TwistMap(sigma.ring(), "inner_delta(" + a.str() + ")",
                  [sigma, a](const Element& r) { return a * r - sigma(r) * a; });
}

struct OreFamilyCase {
  std::string label;
  PiFamily family;
};

/// One (sigma, delta) pair per implemented coefficient ring.
inline std::vector<OreFamilyCase> ore_family_cases() {
  std::vector<OreFamilyCase> out;
  auto q = rationals();
  out.push_back({"q", {identity_map(q), zero_map(q)}});
  auto c = gaussian_rationals();
  TwistMap cc = conjugation(c);
  out.push_back({"qi", {cc, inner_sigma_derivation(cc, c->basis_element(1))}});
  auto h = quaternions();
  TwistMap hi = inner(h, quaternion({1, 1, 0, 0}));
  out.push_back({"h", {hi, inner_sigma_derivation(hi, h->basis_element(2))}});
  auto o = octonions();
  out.push_back({"o", {conjugation(o), standard_derivation(o->basis_element(1), o->basis_element(2))}});
  auto hp = jordan_quaternions();
  out.push_back({"h+", {conjugation(hp), zero_map(hp)}});
  auto m = m2();
  TwistMap mt = transpose(m);
  out.push_back({"m2", {mt, inner_sigma_derivation(mt, m->unit_matrix(0, 1))}});
  auto y = polynomial_ring(q, "Y");
  out.push_back({"q[y]", {variable_scale(y, 2), derivative(y)}});
  return out;
}

// ---------------------------------------------------------------------------
// Helpers

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

inline std::vector<Element> units_of(const Ring& ring) {
  std::vector<Element> out;
  for (const auto& b : ring.basis())
    if (try_invert(b)) out.push_back(b);
  if (const auto* m = dynamic_cast<const MatrixRing*>(&ring)) {
    out.push_back(m->unit_matrix(0, 1) + m->unit_matrix(1, 0));
    out.push_back(m->one() + m->unit_matrix(0, 1));
  }
  return out;
}

/// sigma^m by repeated application, ignoring any installed closed form.
inline Element naive_power(const TwistMap& sigma, std::int64_t m, Element r) {
  for (std::int64_t k = 0; k < m; ++k) r = sigma(r);
  for (std::int64_t k = 0; k > m; --k) r = sigma.inverse(r);
  return r;
}

inline Element apply_word(const PiFamily& fam, const std::string& word, Element r) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = *it == 's' ? fam.sigma(r) : fam.delta(r);
  return r;
}

inline bool finite_laurent(const SkewPolyRing& ring) {
  return ring.shape() == Shape::laurent && ring.coefficients()->dimension().has_value();
}

// ---------------------------------------------------------------------------
// nuclei

/// X^n is middle and right nuclear for |n| <= 4 at degree bound 4.
inline CheckSpec nuclei_middle_right(const NamedRing& r, const std::string& prefix, Side side) {
  return {prefix + "." + r.label + "." + side_name(side), 3,
          "powers of the variable lie in the middle and right nuclei",
          [r, side]() -> Outcome {
            if (!finite_laurent(*r.ring)) return fail_with("requires a laurent ring over a finite-dimensional algebra");
            NucleusChecker checker(r.ring, 4);
            for (std::int64_t n = -4; n <= 4; ++n)
              if (auto w = checker.violation(r.ring->power(n), side))
                return fail_with("X^" + std::to_string(n) + " not in the " + side_name(side) + " nucleus", w->str());
            return pass_with("X^n for |n| <= 4, degree bound 4");
          }};
}

/// Left nuclearity of X^n fails exactly when sigma^n is not an automorphism.
inline CheckSpec nuclei_left(const NamedRing& r, const std::string& prefix) {
  return {prefix + "." + r.label + ".left", 3, "left nuclearity of X^n is equivalent to sigma^n being multiplicative",
          [r]() -> Outcome {
            if (!finite_laurent(*r.ring)) return fail_with("requires a laurent ring over a finite-dimensional algebra");
            NucleusChecker checker(r.ring, 4);
            std::optional<std::string> first;
            std::vector<std::string> denied;
            for (std::int64_t n = -4; n <= 4; ++n) {
              const bool automorphism =
                  classify_multiplicativity(map_power(r.ring->sigma(), n)).has(MapTag::automorphism);
              auto w = checker.violation(r.ring->power(n), Side::left);
              if (automorphism == static_cast<bool>(w))
                return fail_with("left nucleus and classification disagree at X^" + std::to_string(n),
                                 w ? std::optional(w->str()) : std::nullopt);
              if (w) {
                denied.push_back(std::to_string(n));
                if (!first) first = "X^" + std::to_string(n) + ": " + w->str();
              }
            }
            if (!first) return pass_with("sigma^n multiplicative for all |n| <= 4");
            return witness_with(*first, "witnesses at n in {" + join(denied, ",") + "}");
          }};
}

inline CheckSpec nuclear_inverse(const NamedRing& r, const std::string& prefix) {
  return {prefix + "." + r.label + ".inverse", 12, "inverses of nuclear elements stay in the corresponding nucleus",
          [r]() -> Outcome {
            if (!finite_laurent(*r.ring)) return fail_with("requires a laurent ring over a finite-dimensional algebra");
            NucleusChecker checker(r.ring, 3);
            std::vector<Element> xs{r.ring->power(1), r.ring->power(2)};
            for (const auto& e : units_of(*r.ring->coefficients())) xs.push_back(r.ring->constant(e));
            std::size_t verified = 0, vacuous = 0;
            for (const auto& x : xs)
              for (auto h : {NuclearHypothesis::left_middle, NuclearHypothesis::full, NuclearHypothesis::middle_right}) {
                auto rep = nuclear_inverse_check(checker, x, h);
                if (!rep.ok())
                  return fail_with(std::string("clause ") + hypothesis_name(h) + " violated for " + x.str(),
                                   rep.witness ? std::optional(rep.witness->str()) : std::nullopt);
                (rep.status == ClauseStatus::verified ? verified : vacuous)++;
              }
            return pass_with(std::to_string(xs.size()) + " elements, " + std::to_string(verified) + " verified, " +
                             std::to_string(vacuous) + " vacuous");
          }};
}

inline std::vector<CheckSpec> nuclei(const SuiteScope& scope) {
  std::vector<CheckSpec> out;
  auto rings = scope.empty() ? std::vector<NamedRing>{gaussian_q2(), matrix_diag_swap(), octonion_conj()} : scope;
  for (const auto& r : rings) {
    out.push_back(nuclei_middle_right(r, "nuclei", Side::middle));
    out.push_back(nuclei_middle_right(r, "nuclei", Side::right));
    out.push_back(nuclei_left(r, "nuclei"));
  }
  auto inverse_rings = scope.empty() ? finite_laurent_rings() : scope;
  for (const auto& r : inverse_rings) out.push_back(nuclear_inverse(r, "nuclei"));
  return out;
}

// ---------------------------------------------------------------------------
// laurent-axioms

inline std::vector<CheckSpec> laurent_axioms(const SuiteScope& scope) {
  std::vector<CheckSpec> out;
  auto rings = scope.empty() ? finite_laurent_rings() : scope;
  if (scope.empty()) rings.push_back({"o-torus", quantum_torus(octonions(), 2)});
  for (const auto& r : rings) {
    out.push_back({"laurent-axioms." + r.label + ".twist", 0, "sigma is an additive bijection fixing 1",
                   [r]() -> Outcome {
                     auto rep = validate_twist_axioms(r.ring->sigma(), MapRole::sigma);
                     for (const auto& c : rep.checks)
                       if (!c.pass) return fail_with("axiom " + c.axiom + " fails");
                     if (r.ring->delta()) {
                       auto d = validate_twist_axioms(*r.ring->delta(), MapRole::delta);
                       if (!d.ok()) return fail_with("delta does not kill 1 additively");
                     }
                     return pass_with(join(r.ring->sigma().tags().names(), ","));
                   }});
    if (r.ring->shape() != Shape::laurent) continue;
    out.push_back({"laurent-axioms." + r.label + ".product-rule", 0,
                   "(r X^m)(s X^n) = (r sigma^m(s)) X^{m+n}", [r]() -> Outcome {
                     Sampler rng(11);
                     const auto& ring = *r.ring;
                     for (int t = 0; t < 20; ++t) {
                       Element a = rng.element(*ring.coefficients());
                       Element b = rng.element(*ring.coefficients());
                       const auto m = rng.integer(-3, 3), n = rng.integer(-3, 3);
                       Element lhs = ring.monomial(a, m) * ring.monomial(b, n);
                       Element rhs = ring.monomial(a * naive_power(ring.sigma(), m, b), m + n);
                       if (!(lhs == rhs)) return fail_with("product rule fails", lhs.str() + " != " + rhs.str());
                     }
                     return pass_with("20 random monomial pairs");
                   }});
    out.push_back({"laurent-axioms." + r.label + ".units", 0, "X is invertible with inverse X^-1",
                   [r]() -> Outcome {
                     const auto& ring = *r.ring;
                     for (std::int64_t m = 1; m <= 4; ++m) {
                       if (!(ring.power(m) * ring.power(-m) == ring.one()) || !(ring.power(-m) * ring.power(m) == ring.one()))
                         return fail_with("X^" + std::to_string(m) + " X^-" + std::to_string(m) + " != 1");
                       if (!(invert(ring.power(m)) == ring.power(-m))) return fail_with("inverse of X^m is not X^-m");
                     }
                     return pass_with();
                   }});
  }
  if (!scope.empty()) return out;
  out.push_back({"laurent-axioms.q-twist-classification", 4, "q_twist(q) is an automorphism exactly for q = 1, -1",
                 []() -> Outcome {
                   for (Rational q : {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3), Rational(-2)}) {
                     const bool aut = classify_multiplicativity(q_twist(gaussian_rationals(), q)).has(MapTag::automorphism);
                     if (aut != (q == 1 || q == -1)) return fail_with("wrong classification at q = " + format_rational(q));
                   }
                   return pass_with("q in {1,-1,2,1/2,3,-2}");
                 }});
  out.push_back({"laurent-axioms.conjugation-tags", 0, "octonion conjugation is an involutive antiautomorphism",
                 []() -> Outcome {
                   auto tags = conjugation(octonions()).tags();
                   if (!tags.has(MapTag::antiautomorphism) || !tags.has(MapTag::involution) ||
                       tags.has(MapTag::automorphism))
                     return fail_with("tags " + join(tags.names(), ","));
                   return pass_with(join(tags.names(), ","));
                 }});
  out.push_back({"laurent-axioms.inner-automorphism", 0, "inner maps of H are automorphisms", []() -> Outcome {
                   Sampler rng(5);
                   for (int t = 0; t < 10; ++t) {
                     Element u = rng.nonzero(*quaternions());
                     if (!classify_multiplicativity(inner(quaternions(), u)).has(MapTag::automorphism))
                       return fail_with("inner(" + u.str() + ") not an automorphism");
                   }
                   return pass_with("10 random units");
                 }});
  out.push_back({"laurent-axioms.twisted-product", 0, "(iX)(iX^-1) = -2 under q_twist(2)", []() -> Outcome {
                   auto ring = gaussian_twisted(2);
                   Element v = parse_element("iX", ring) * parse_element("iX^-1", ring);
                   if (!(v == parse_element("-2", ring))) return fail_with("got " + v.str());
                   return pass_with(v.str());
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// associativity

inline CheckSpec associativity_case(const NamedRing& r, std::optional<bool> expect_associative) {
  return {"associativity." + r.label, 4, "associative exactly when R is associative and sigma an automorphism",
          [r, expect_associative]() -> Outcome {
            auto cert = associativity_certificate(r.ring, 3);
            if (!cert.consistent)
              return fail_with("certificate disagrees with the structural criterion",
                               cert.witness ? std::optional(cert.witness->str()) : std::nullopt);
            if (expect_associative && *expect_associative != cert.pass)
              return fail_with(cert.pass ? "expected a witness" : "expected associativity",
                               cert.witness ? std::optional(cert.witness->str()) : std::nullopt);
            if (cert.witness) return witness_with(cert.witness->str());
            return pass_with("all spanning triples associate at degree bound 3");
          }};
}

inline std::vector<CheckSpec> associativity(const SuiteScope& scope) {
  std::vector<CheckSpec> out;
  if (!scope.empty()) {
    for (const auto& r : scope) out.push_back(associativity_case(r, std::nullopt));
    return out;
  }
  for (Rational q : {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3)}) {
    std::string label = "qi-q" + format_rational(q);
    std::replace(label.begin(), label.end(), '/', '_');
    out.push_back(associativity_case({label, gaussian_twisted(q)}, q == 1 || q == -1));
  }
  out.push_back(associativity_case(matrix_diag_swap(), false));
  out.push_back(associativity_case(octonion_conj(), false));
  return out;
}

// ---------------------------------------------------------------------------
// finite-order-ideals

inline std::vector<CheckSpec> finite_order_ideals() {
  std::vector<CheckSpec> out;
  const std::string anchor = "finite order m gives the proper nonzero ideal generated by 1 + X^{m^2}";
  out.push_back({"finite-order-ideals.order", 5, anchor, []() -> Outcome {
                   auto ring = gaussian_conj().ring;
                   auto fo = detect_finite_order(ring->sigma(), 6);
                   if (!fo.order || *fo.order != 2) return fail_with("conjugation should have order 2");
                   if (!twist_has_order_dividing(ring->sigma(), 2)) return fail_with("sigma^2 != id");
                   return pass_with("m = 2");
                 }});
  out.push_back({"finite-order-ideals.x4-nuclear-central", 5, anchor, []() -> Outcome {
                   auto ring = gaussian_conj().ring;
                   NucleusChecker checker(ring, 4);
                   Element x4 = ring->power(4);
                   for (Side s : {Side::left, Side::middle, Side::right})
                     if (auto w = checker.violation(x4, s))
                       return fail_with(std::string("X^4 not ") + side_name(s) + " nuclear", w->str());
                   for (const auto& s : checker.spanning())
                     if (!(x4 * s == s * x4)) return fail_with("X^4 does not commute with " + s.str());
                   return pass_with("X^4 nuclear and central on spanning monomials, degree bound 4");
                 }});
  out.push_back({"finite-order-ideals.multiples", 5, anchor, []() -> Outcome {
                   auto ring = gaussian_conj().ring;
                   Sampler rng(21);
                   Element g = parse_element("1 + X^4", ring);
                   for (int t = 0; t < 50; ++t) {
                     Element p = rng.element(*ring) * g * rng.element(*ring);
                     if (t % 2) p += rng.element(*ring) * g * rng.element(*ring);
                     Element red = central_reduction(p, 2);
                     if (!red.is_zero()) return fail_with("multiple not reduced to 0", p.str() + " -> " + red.str());
                   }
                   return pass_with("50 random two-sided multiples reduce to 0");
                 }});
  out.push_back({"finite-order-ideals.proper", 5, anchor, []() -> Outcome {
                   auto ring = gaussian_conj().ring;
                   Element red = central_reduction(ring->one(), 2);
                   if (!(red == ring->one())) return fail_with("1 reduces to " + red.str());
                   return pass_with("1 -> 1");
                 }});
  out.push_back({"finite-order-ideals.hypothesis", 5, anchor, []() -> Outcome {
                   try {
                     central_reduction(gaussian_q2().ring->one(), 2);
                   } catch (const Error& e) {
                     if (e.code() == Errc::finite_order_fails) return pass_with(e.what());
                     throw;
                   }
                   return fail_with("q_twist(2) accepted as finite order");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// simplicity

inline std::vector<CheckSpec> simplicity() {
  std::vector<CheckSpec> out;
  out.push_back({"simplicity.infinite-order", 6, "infinite order over a commutative division ring gives a simple ring",
                 []() -> Outcome {
                   auto ring = gaussian_q2().ring;
                   Sampler rng(31);
                   for (int t = 0; t < 25; ++t) {
                     Element p = rng.polynomial_of_degree(*ring, 0, rng.integer(0, 4));
                     const std::int64_t d = degree(normalize_order(p));
                     auto res = simplicity_probe(p, static_cast<std::size_t>(d + 1));
                     if (!res.unit_reached || static_cast<std::int64_t>(res.steps) > d + 1)
                       return fail_with("no unit within deg + 1 steps", p.str());
                   }
                   return pass_with("25 random p of degree <= 4");
                 }});
  out.push_back({"simplicity.finite-order", 6, "finite order leaves 1 + X^4 without a shrinking step",
                 []() -> Outcome {
                   auto ring = gaussian_conj().ring;
                   auto res = simplicity_probe(parse_element("1 + X^4", ring), 5);
                   if (res.unit_reached || !res.all_shrinks_zero) return fail_with("expected inconclusive probe");
                   return pass_with("inconclusive, all shrinks zero");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// hilbert-reduction

inline Outcome check_monic_left(const PolyRingPtr& ring, std::uint64_t seed) {
  Sampler rng(seed);
  for (int t = 0; t < 50; ++t) {
    Element p = rng.polynomial_of_degree(*ring, 0, rng.integer(1, 3));
    Element f = rng.element(*ring, 0, 6, 5);
    auto r = monic_left_reduce(f, p);
    if (r.irreducible) return fail_with("division stalled", f.str() + " by " + p.str());
    if (!r.remainder.is_zero() && degree(r.remainder) >= degree(p))
      return fail_with("remainder degree not below divisor degree", r.remainder.str());
    if (!(replay(r) == f)) return fail_with("replay differs from input", f.str());
  }
  return pass_with("50 random pairs");
}

inline std::vector<CheckSpec> hilbert_reduction() {
  std::vector<CheckSpec> out;
  out.push_back({"hilbert-reduction.right-form", 7, "left and right coefficient forms span the same module",
                 []() -> Outcome {
                   std::vector<PolyRingPtr> rings{gaussian_twisted(2), gaussian_twisted(2, Shape::ore),
                                                  octonion_conj().ring, matrix_diag_swap().ring};
                   Sampler rng(41);
                   for (int t = 0; t < 100; ++t) {
                     const auto& ring = rings[static_cast<std::size_t>(t) % rings.size()];
                     Element p = rng.element(*ring, -4, 4, 5);
                     if (!(from_right_form(ring, to_right_form(p)) == p)) return fail_with("round trip fails", p.str());
                   }
                   return pass_with("100 random polynomials over 4 rings");
                 }});
  out.push_back({"hilbert-reduction.monic-left-octonions", 7, "division by a monic polynomial lowers the degree",
                 []() -> Outcome { return check_monic_left(skew_ring(identity_map(octonions()), Shape::ore), 51); }});
  out.push_back({"hilbert-reduction.monic-left-gaussian", 7, "division by a monic polynomial lowers the degree",
                 []() -> Outcome { return check_monic_left(gaussian_twisted(2, Shape::ore), 52); }});
  out.push_back({"hilbert-reduction.right-reduce-example", 7, "reduction by X - i", []() -> Outcome {
                   auto ring = gaussian_twisted(2, Shape::ore);
                   auto r = right_reduce(parse_element("X^2", ring), {parse_element("X - i", ring)});
                   if (r.steps.size() != 2 || !(r.remainder == parse_element("-1/2", ring)))
                     return fail_with("expected 2 steps and remainder -1/2, got " + r.remainder.str());
                   return pass_with("2 steps, remainder -1/2");
                 }});
  out.push_back({"hilbert-reduction.right-reduce-replay", 7, "every reduction replays to its input", []() -> Outcome {
                   std::vector<PolyRingPtr> rings{gaussian_twisted(2, Shape::ore), gaussian_twisted(2),
                                                  matrix_diag_swap().ring};
                   Sampler rng(61);
                   std::size_t stalled = 0;
                   for (int t = 0; t < 60; ++t) {
                     const auto& ring = rings[static_cast<std::size_t>(t) % rings.size()];
                     std::vector<Element> gens{rng.nonzero(*ring, 0, 2, 2)};
                     if (t % 2) gens.push_back(rng.nonzero(*ring, 0, 3, 2));
                     Element f = rng.element(*ring, 0, 5, 4);
                     auto r = right_reduce(f, gens);
                     stalled += r.irreducible;
                     if (!(replay(r) == f)) return fail_with("replay differs from input", f.str());
                   }
                   return pass_with("60 runs, " + std::to_string(stalled) + " stalled without a matching cofactor");
                 }});
  out.push_back({"hilbert-reduction.series-replay", 7, "series reduction replays to its input", []() -> Outcome {
                   auto ring = gaussian_twisted(2, Shape::ore);
                   Sampler rng(71);
                   for (int t = 0; t < 30; ++t) {
                     auto f = TruncatedSeries::embed(rng.element(*ring, 0, 6, 5), SeriesKind::power, 6);
                     std::vector<TruncatedSeries> gens{
                         TruncatedSeries::embed(rng.nonzero(*ring, 0, 3, 3), SeriesKind::power, 6)};
                     auto r = right_reduce(f, gens, 10);
                     if (!(replay(r) == f)) return fail_with("replay differs from input", f.str());
                   }
                   return pass_with("30 runs at precision 6");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// series

inline std::vector<CheckSpec> series() {
  std::vector<CheckSpec> out;
  out.push_back({"series.invert", 8, "inverse of 1 - iX by the coefficient recurrence", []() -> Outcome {
                   auto ring = gaussian_twisted(2, Shape::ore);
                   auto a = parse_series("1 - iX + O(X^5)", ring, SeriesKind::power);
                   auto inv = series_invert(a);
                   auto expected = parse_series("1 + iX - 2X^2 - 2iX^3 + 4X^4 + O(X^5)", ring, SeriesKind::power);
                   if (!(inv == expected)) return fail_with("got " + inv.str());
                   auto back = a * inv;
                   if (!(back == TruncatedSeries::one(ring, SeriesKind::power, 4)))
                     return fail_with("multiply-back gives " + back.str());
                   return pass_with(inv.str());
                 }});
  out.push_back({"series.order-additivity", 8, "order and leading coefficient of a product", []() -> Outcome {
                   auto ring = gaussian_twisted(2);
                   Sampler rng(81);
                   for (int t = 0; t < 50; ++t) {
                     auto make = [&] {
                       const auto v = rng.integer(-2, 2);
                       Element p = rng.polynomial_of_degree(*ring, v, v) + rng.element(*ring, v + 1, 6, 3);
                       return TruncatedSeries::embed(p, SeriesKind::laurent, 6);
                     };
                     auto a = make(), b = make();
                     auto oa = series_order_leading(a), ob = series_order_leading(b);
                     auto oab = series_order_leading(a * b);
                     if (oab.order != oa.order + ob.order) return fail_with("order not additive", a.str() + " * " + b.str());
                     if (!(oab.leading == oa.leading * apply_power(ring->sigma(), oa.order, ob.leading)))
                       return fail_with("leading coefficient mismatch", a.str() + " * " + b.str());
                   }
                   return pass_with("50 random pairs");
                 }});
  out.push_back({"series.sidedness", 0, "left and right inverses agree only for associative data", []() -> Outcome {
                   auto ring = gaussian_twisted(2, Shape::ore);
                   auto a = parse_series("1 - iX + O(X^5)", ring, SeriesKind::power);
                   auto l = series_left_inverse(a);
                   if (!(l * a == TruncatedSeries::one(ring, SeriesKind::power, 4)))
                     return fail_with("left inverse fails: " + l.str());
                   return pass_with(l.str());
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// jordan

inline std::vector<CheckSpec> jordan() {
  std::vector<CheckSpec> out;
  out.push_back({"jordan.associator", 9, "associator (i, i, j) = -j in H+", []() -> Outcome {
                   auto hp = jordan_quaternions();
                   Element i = hp->basis_element(1), j = hp->basis_element(2);
                   Element v = associator(i, i, j);
                   if (!(v == -j)) return fail_with("got " + v.str());
                   return pass_with(v.str());
                 }});
  out.push_back({"jordan.identity", 9, "H+ satisfies the Jordan identity", []() -> Outcome {
                   auto hp = jordan_quaternions();
                   auto law = [](const Element& a, const Element& b) {
                     Element aa = a * a;
                     return (a * b) * aa == a * (b * aa);
                   };
                   for (const auto& a : hp->basis())
                     for (const auto& b : hp->basis())
                       if (!law(a, b)) return fail_with("fails on basis pair", a.str() + ", " + b.str());
                   Sampler rng(91);
                   for (int t = 0; t < 100; ++t) {
                     Element a = rng.element(*hp), b = rng.element(*hp);
                     if (!law(a, b)) return fail_with("fails on random pair", a.str() + ", " + b.str());
                   }
                   return pass_with("all basis pairs and 100 random pairs");
                 }});
  out.push_back({"jordan.derivations", 9, "delta_{a,b} is a derivation of O", []() -> Outcome {
                   auto o = octonions();
                   Sampler rng(101);
                   auto basis = o->basis();
                   for (int t = 0; t < 10; ++t) {
                     Element a = rng.element(*o), b = rng.element(*o);
                     TwistMap d = standard_derivation(a, b);
                     if (!d.has(MapTag::kills_one) || !d.has(MapTag::additive))
                       return fail_with("derivation does not kill 1 additively");
                     for (const auto& x : basis)
                       for (const auto& y : basis)
                         if (!(d(x * y) == d(x) * y + x * d(y)))
                           return fail_with("Leibniz rule fails for " + d.descriptor(), x.str() + ", " + y.str());
                   }
                   return pass_with("10 random (a, b), all basis pairs");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// quantum-torus

inline std::vector<CheckSpec> quantum_torus_checks() {
  std::vector<CheckSpec> out;
  const std::string anchor = "octonionic quantum torus with XY = qYX";
  auto torus = [] { return skewring::quantum_torus(octonions(), 2); };
  out.push_back({"quantum-torus.relation", 10, anchor, [torus]() -> Outcome {
                   auto t = torus();
                   Element x = parse_element("X", t), y = parse_element("Y", t);
                   if (!(x * y == Rational(2) * (y * x))) return fail_with("XY = " + (x * y).str());
                   return pass_with("XY = " + (x * y).str());
                 }});
  out.push_back({"quantum-torus.coefficients-commute", 10, anchor, [torus]() -> Outcome {
                   auto t = torus();
                   Element x = parse_element("X", t), y = parse_element("Y", t);
                   auto inner_ring = as_poly_ring(t->coefficients());
                   for (const auto& e : octonions()->basis()) {
                     Element c = t->constant(inner_ring->constant(e));
                     if (!(c * x == x * c) || !(c * y == y * c)) return fail_with(e.str() + " does not commute");
                   }
                   return pass_with("all octonion basis elements");
                 }});
  for (const char* gen : {"X", "Y"})
    for (std::int64_t n : {-3, -2, -1, 1, 2, 3}) {
      const std::string name = std::string(gen) + "^" + std::to_string(n);
      out.push_back({"quantum-torus.nuclear." + name, 10, anchor, [torus, name]() -> Outcome {
                       auto t = torus();
                       Element p = parse_element(name, t);
                       NucleusChecker checker(t, 3);
                       for (Side s : {Side::middle, Side::right})
                         if (auto w = checker.violation(p, s))
                           return fail_with(name + " not " + side_name(s) + " nuclear", w->str());
                       return pass_with("middle and right nuclear at degree bound 3");
                     }});
    }
  return out;
}

// ---------------------------------------------------------------------------
// d-structure

inline std::vector<Element> d_sample(const Ring& ring, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<Element> out{ring.one()};
  for (int k = 0; k < 3; ++k) out.push_back(rng.element(ring, -1, 1, 2));
  return out;
}

inline Outcome d_report_outcome(const DReport& rep) {
  for (const auto& a : rep.axioms)
    if (!a.pass) return fail_with("axiom " + a.axiom + " fails: " + a.detail);
  return pass_with("D0-D4");
}

inline std::vector<CheckSpec> d_structure(const SuiteScope& scope) {
  std::vector<CheckSpec> out;
  if (!scope.empty()) {
    for (const auto& r : scope)
      out.push_back({"d-structure." + r.label, 11, "the twisting family satisfies D0-D4", [r]() -> Outcome {
                       const auto& ring = *r.ring;
                       auto sample = d_sample(*ring.coefficients(), 7);
                       if (ring.shape() == Shape::laurent)
                         return d_report_outcome(validate_d_structure(laurent_family(ring.sigma()), 4, sample));
                       PiFamily fam{ring.sigma(), ring.delta() ? *ring.delta() : zero_map(ring.coefficients())};
                       return d_report_outcome(validate_d_structure(ore_family(fam), 5, sample));
                     }});
    return out;
  }
  out.push_back({"d-structure.pi-word-sum", 1, "pi_1^3 is the sum of the three words with one sigma",
                 []() -> Outcome {
                   for (const auto& c : ore_family_cases()) {
                     Sampler rng(3);
                     for (int t = 0; t < 25; ++t) {
                       Element r = rng.element(*c.family.sigma.ring(), -1, 1, 2);
                       const auto& s = c.family.sigma;
                       const auto& d = c.family.delta;
                       Element words = s(d(d(r))) + d(s(d(r))) + d(d(s(r)));
                       if (!(pi_apply(c.family, 1, 3, r) == words))
                         return fail_with("mismatch over " + c.label, r.str());
                     }
                   }
                   return pass_with("25 random elements per coefficient ring");
                 }});
  out.push_back({"d-structure.pi-recursion", 1, "recursion agrees with word enumeration", []() -> Outcome {
                   for (const auto& c : ore_family_cases()) {
                     auto elems = d_sample(*c.family.sigma.ring(), 13);
                     for (std::int64_t m = 0; m <= 6; ++m)
                       for (std::int64_t i = 0; i <= m; ++i) {
                         auto words = pi_words(i, m);
                         for (const auto& r : elems) {
                           Element sum = r.owner().zero();
                           for (const auto& w : words) sum += apply_word(c.family, w, r);
                           if (!(pi_apply(c.family, i, m, r) == sum))
                             return fail_with("mismatch over " + c.label + " at i=" + std::to_string(i) +
                                              ", m=" + std::to_string(m));
                         }
                       }
                   }
                   return pass_with("all i <= m <= 6");
                 }});
  out.push_back({"d-structure.weyl", 2, "XY - YX = 1 in the Weyl algebra", []() -> Outcome {
                   auto w = weyl_algebra(rationals());
                   Element x = parse_element("X", w), y = parse_element("Y", w);
                   Element c = x * y - y * x;
                   if (!(c == w->one())) return fail_with("XY - YX = " + c.str());
                   return pass_with("XY = " + (x * y).str());
                 }});
  for (const auto& r : finite_laurent_rings())
    out.push_back({"d-structure.laurent." + r.label, 11, "pi_b^a = sigma^a when a = b, else 0", [r]() -> Outcome {
                     auto sample = d_sample(*r.ring->coefficients(), 17);
                     return d_report_outcome(validate_d_structure(laurent_family(r.ring->sigma()), 4, sample));
                   }});
  for (const auto& c : ore_family_cases())
    out.push_back({"d-structure.ore." + c.label, 11, "the Ore family pi_i^m satisfies D0-D4", [c]() -> Outcome {
                     auto sample = d_sample(*c.family.sigma.ring(), 19);
                     return d_report_outcome(validate_d_structure(ore_family(c.family), 5, sample));
                   }});
  out.push_back({"d-structure.corrupted", 11, "a family with pi_e^e != id is rejected", []() -> Outcome {
                   DStructure d = laurent_family(gaussian_q2().ring->sigma());
                   auto good = d.apply;
                   d.apply = [good](std::int64_t a, std::int64_t b, const Element& r) {
                     if (a == 0 && b == 0) return Rational(2) * r;
                     return good(a, b, r);
                   };
                   auto rep = validate_d_structure(d, 2, d_sample(*gaussian_rationals(), 23));
                   if (rep.axiom("D1").pass) return fail_with("corrupted family passed D1");
                   return witness_with(rep.axiom("D1").detail);
                 }});
  out.push_back({"d-structure.monoid-ring-product", 0, "the family reproduces the ring product", []() -> Outcome {
                   auto cases = ore_family_cases();
                   Sampler rng(29);
                   for (const auto& c : cases) {
                     auto ring = SkewPolyRing::create({c.family.sigma.ring(), c.family.sigma, c.family.delta, "X", Shape::ore});
                     DStructure d = ore_family(c.family);
                     for (int t = 0; t < 5; ++t) {
                       Element p = rng.element(*ring, 0, 3, 3), q = rng.element(*ring, 0, 3, 3);
                       if (!(dstructure_mul(d, ring, p, q) == p * q))
                         return fail_with("product mismatch over " + c.label, p.str() + " * " + q.str());
                     }
                   }
                   return pass_with();
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// Running

inline std::vector<CheckSpec> checks_for(const std::string& name, const SuiteScope& scope) {
  if (name == "nuclei") return nuclei(scope);
  if (name == "laurent-axioms") return laurent_axioms(scope);
  if (name == "associativity") return associativity(scope);
  if (name == "simplicity") return simplicity();
  if (name == "finite-order-ideals") return finite_order_ideals();
  if (name == "hilbert-reduction") return hilbert_reduction();
  if (name == "series") return series();
  if (name == "jordan") return jordan();
  if (name == "quantum-torus") return quantum_torus_checks();
  if (name == "d-structure") return d_structure(scope);
  if (name == "all") {
    std::vector<CheckSpec> out;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = checks_for(n, scope);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }
  throw Error(Errc::unknown_suite, "unknown suite '" + name + "'");
}

inline CheckRecord run_check(const CheckSpec& spec) {
  CheckRecord rec{spec.id, spec.criterion, spec.anchor, CheckStatus::pass, std::nullopt, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = spec.run();
    rec.status = o.status;
    rec.witness = std::move(o.witness);
    rec.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    rec.status = CheckStatus::fail;
    rec.detail = std::string("error: ") + e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace suites

/// Runs a suite on a worker pool; records keep the declaration order.
inline SuiteReport run_suite(const std::string& name, const SuiteScope& scope = {}, std::string config_digest = {},
                             unsigned workers = 0) {
  auto specs = suites::checks_for(name, scope);
  if (config_digest.empty()) config_digest = detail::digest("builtin:" + name);
  SuiteReport report{name, config_digest, std::vector<CheckRecord>(specs.size())};
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) report.checks[k] = suites::run_check(specs[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace skewring

#endif
