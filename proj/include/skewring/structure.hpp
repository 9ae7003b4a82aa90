#ifndef SKEWRING_STRUCTURE_HPP
#define SKEWRING_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewring/algebra.hpp"
#include "skewring/inverse.hpp"
#include "skewring/maps.hpp"
#include "skewring/poly.hpp"
#include "skewring/series.hpp"

namespace skewring {

enum class Side { left, middle, right };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::middle: return "middle";
    case Side::right: return "right";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Nuclei

/// A triple with nonzero associator, plus that associator.
struct Witness {
  std::array<Element, 3> triple;
  Element value;

  std::string str() const {
    return "(" + triple[0].str() + ", " + triple[1].str() + ", " + triple[2].str() + ") = " + value.str();
  }
};

/// Whether the finite spanning sets of `ring` describe all of it up to a
/// degree bound: finite-dimensional rings, and polynomial towers over them.
inline bool spanning_checkable(const Ring& ring) {
  if (ring.dimension()) return true;
  if (ring.kind() != RingKind::polynomial) return false;
  auto c = ring.coefficient_ring();
  return c && spanning_checkable(*c);
}

inline void require_spanning_checkable(const Ring& ring) {
  if (!spanning_checkable(ring)) throw Error(Errc::cannot_decide, "cannot decide by basis exhaustion");
}

/// Caches the spanning monomials of a ring up to a degree bound and their
/// pairwise products, so that many nucleus queries share the work.
class NucleusChecker {
 public:
  NucleusChecker(RingPtr ring, int degree_bound) : ring_(std::move(ring)), bound_(degree_bound) {
    require_spanning_checkable(*ring_);
    span_ = ring_->spanning_set(bound_);
  }

  const std::vector<Element>& spanning() const noexcept { return span_; }
  int degree_bound() const noexcept { return bound_; }

  /// First witness against x lying in the given nucleus, or nullopt when the
  /// associator vanishes on every spanning pair. By biadditivity this decides
  /// membership for all elements spanned by the monomials up to the bound.
  std::optional<Witness> violation(const Element& x, Side side) const {
    require_ring(*ring_, x);
    const std::size_t n = span_.size();
    switch (side) {
      case Side::left: {
        // (x, s, t) = (xs)t - x(st)
        std::vector<Element> xs(n);
        for (std::size_t p = 0; p < n; ++p) xs[p] = x * span_[p];
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Element v = xs[p] * span_[q] - x * pair(p, q);
            if (!v.is_zero()) return Witness{{x, span_[p], span_[q]}, v};
          }
        return std::nullopt;
      }
      case Side::middle: {
        // (s, x, t) = (sx)t - s(xt)
        std::vector<Element> sx(n), xt(n);
        for (std::size_t p = 0; p < n; ++p) {
          sx[p] = span_[p] * x;
          xt[p] = x * span_[p];
        }
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Element v = sx[p] * span_[q] - span_[p] * xt[q];
            if (!v.is_zero()) return Witness{{span_[p], x, span_[q]}, v};
          }
        return std::nullopt;
      }
      case Side::right: {
        // (s, t, x) = (st)x - s(tx)
        std::vector<Element> tx(n);
        for (std::size_t p = 0; p < n; ++p) tx[p] = span_[p] * x;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Element v = pair(p, q) * x - span_[p] * tx[q];
            if (!v.is_zero()) return Witness{{span_[p], span_[q], x}, v};
          }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  /// First basis-monomial triple with nonzero associator.
  std::optional<Witness> associativity_violation() const {
    const std::size_t n = span_.size();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          Element v = pair(p, q) * span_[r] - span_[p] * pair(q, r);
          if (!v.is_zero()) return Witness{{span_[p], span_[q], span_[r]}, v};
        }
    return std::nullopt;
  }

 private:
  const Element& pair(std::size_t p, std::size_t q) const {
    if (products_.empty()) {
      const std::size_t n = span_.size();
      products_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) products_[a * n + b] = span_[a] * span_[b];
    }
    return products_[p * span_.size() + q];
  }

  RingPtr ring_;
  int bound_;
  std::vector<Element> span_;
  mutable std::vector<Element> products_;
};

struct NucleusResult {
  bool pass;
  std::optional<Witness> witness;
};

inline NucleusResult nucleus_membership(const Element& x, Side side, int degree_bound) {
  NucleusChecker checker(x.ring(), degree_bound);
  auto w = checker.violation(x, side);
  return {!w, w};
}

// ---------------------------------------------------------------------------
// Associativity

struct AssociativityCertificate {
  bool pass;
  std::optional<Witness> witness;
  /// Coefficient ring associative on its spanning triples.
  bool coefficients_associative;
  /// The twist classifies as an automorphism.
  bool sigma_automorphism;
  /// pass == (coefficients_associative && sigma_automorphism); the two sides
  /// of the associativity criterion computed independently.
  bool consistent;
};

inline bool spanning_associative(const RingPtr& ring, int bound) {
  return !NucleusChecker(ring, bound).associativity_violation();
}

/// All associators of spanning monomials up to the degree bound, cross-checked
/// against "coefficients associative and sigma an automorphism".
inline AssociativityCertificate associativity_certificate(const PolyRingPtr& ring, int degree_bound) {
  NucleusChecker checker(ring, degree_bound);
  AssociativityCertificate out{};
  out.witness = checker.associativity_violation();
  out.pass = !out.witness;
  out.coefficients_associative = spanning_associative(ring->coefficients(), degree_bound);
  out.sigma_automorphism = classify_multiplicativity(ring->sigma()).has(MapTag::automorphism);
  bool predicted = out.coefficients_associative && out.sigma_automorphism;
  if (ring->delta()) predicted = out.pass;  // the criterion speaks about delta-free rings only
  out.consistent = predicted == out.pass;
  return out;
}

// ---------------------------------------------------------------------------
// Inverses of nuclear elements

enum class NuclearHypothesis { left_middle, full, middle_right };

inline const char* hypothesis_name(NuclearHypothesis h) {
  switch (h) {
    case NuclearHypothesis::left_middle: return "l&m";
    case NuclearHypothesis::full: return "full";
    case NuclearHypothesis::middle_right: return "m&r";
  }
  return "?";
}

enum class ClauseStatus { verified, vacuous, violated };

inline const char* status_name(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::verified: return "verified";
    case ClauseStatus::vacuous: return "hypothesis not satisfied";
    case ClauseStatus::violated: return "violated";
  }
  return "?";
}

struct NuclearInverseReport {
  NuclearHypothesis hypothesis;
  Element inverse;
  bool hypothesis_holds;
  bool conclusion_holds;
  ClauseStatus status;
  std::optional<Witness> witness;

  /// The implication holds on the checked set.
  bool ok() const { return status != ClauseStatus::violated; }
};

/// Hypothesis on x and conclusion on x^{-1}:
///   l&m  : x in N_l and N_m  =>  x^{-1} in N_l
///   full : x in N            =>  x^{-1} in N_m
///   m&r  : x in N_m and N_r  =>  x^{-1} in N_r
inline NuclearInverseReport nuclear_inverse_check(const NucleusChecker& checker, const Element& x,
                                                  NuclearHypothesis h) {
  auto inv = try_invert(x);
  if (!inv) throw Error(Errc::inverse_not_representable, "inverse not representable");
  std::vector<Side> premise;
  Side conclusion = Side::left;
  switch (h) {
    case NuclearHypothesis::left_middle:
      premise = {Side::left, Side::middle};
      conclusion = Side::left;
      break;
    case NuclearHypothesis::full:
      premise = {Side::left, Side::middle, Side::right};
      conclusion = Side::middle;
      break;
    case NuclearHypothesis::middle_right:
      premise = {Side::middle, Side::right};
      conclusion = Side::right;
      break;
  }
  NuclearInverseReport r{h, *inv, true, false, ClauseStatus::verified, std::nullopt};
  for (Side s : premise)
    if (auto w = checker.violation(x, s)) {
      r.hypothesis_holds = false;
      r.witness = w;
      break;
    }
  auto w = checker.violation(*inv, conclusion);
  r.conclusion_holds = !w;
  if (!r.hypothesis_holds)
    r.status = ClauseStatus::vacuous;
  else if (!r.conclusion_holds) {
    r.status = ClauseStatus::violated;
    r.witness = w;
  }
  return r;
}

inline NuclearInverseReport nuclear_inverse_check(const Element& x, NuclearHypothesis h, int degree_bound) {
  return nuclear_inverse_check(NucleusChecker(x.ring(), degree_bound), x, h);
}

// ---------------------------------------------------------------------------
// Finite order: reduction modulo 1 + X^{m^2}

/// sigma^m = id on a spanning set of the coefficients.
inline bool twist_has_order_dividing(const TwistMap& sigma, std::int64_t m) {
  for (const auto& b : sigma.ring()->spanning_set(kPolynomialCheckBound))
    if (!(apply_power(sigma, m, b) == b)) return false;
  return true;
}

/// Representative of p modulo the ideal generated by 1 + X^{m^2}: every
/// exponent e is moved into [0, m^2) and the coefficient picks up the sign
/// (-1)^floor(e / m^2). Valid because sigma^{m^2} = id makes X^{m^2} nuclear
/// and central.
inline Element central_reduction(const Element& p, std::int64_t m) {
  const auto& ring = poly_ring_of(p);
  if (ring.shape() != Shape::laurent) throw Error(Errc::invalid_argument, "central reduction needs a laurent ring");
  if (m <= 0 || !twist_has_order_dividing(ring.sigma(), m))
    throw Error(Errc::finite_order_fails, "finite order hypothesis fails");
  const std::int64_t period = m * m;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    std::int64_t q = t.exponent / period;
    std::int64_t r = t.exponent % period;
    if (r < 0) {
      r += period;
      --q;
    }
    out.push_back({r, (q % 2 == 0) ? t.coeff : -t.coeff});
  }
  return Element::from_terms(p.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// Simplicity over commutative division rings

inline void require_commutative_division(const SkewPolyRing& ring) {
  const Ring& c = *ring.coefficients();
  if (!c.dimension() || !c.is_division_ring() || !is_commutative(c))
    throw Error(Errc::requires_commutative_division, "proposition hypothesis requires commutative division ring");
}

/// p X^{-ord p}: the same two-sided ideal, with order 0.
inline Element normalize_order(const Element& p) {
  const auto& ring = poly_ring_of(p);
  if (p.is_zero()) return p;
  return p * ring.power(-order(p));
}

/// p d - sigma^m(d) p with m = deg p, after normalizing p to order 0.
inline Element shrink(const Element& p, const Element& d) {
  const auto& ring = poly_ring_of(p);
  require_commutative_division(ring);
  if (ring.shape() != Shape::laurent) throw Error(Errc::invalid_argument, "shrink needs a laurent ring");
  if (p.is_zero()) return p;
  Element q = normalize_order(p);
  const std::int64_t m = degree(q);
  return q * ring.constant(d) - ring.constant(apply_power(ring.sigma(), m, d)) * q;
}

struct SimplicityResult {
  /// A nonzero constant was reached: the ideal generated by p is everything.
  bool unit_reached;
  std::optional<Element> unit;
  std::size_t steps;
  /// The normalized polynomials visited, starting with p.
  std::vector<Element> trail;
  /// Inconclusive because every shrink of the last polynomial vanished.
  bool all_shrinks_zero;
};

/// Alternates order normalization and shrink with coefficient basis elements
/// (scanned in basis order; the first giving a nonzero result of smaller
/// degree is taken) until a nonzero constant appears or the budget runs out.
inline SimplicityResult simplicity_probe(const Element& p, std::size_t budget) {
  const auto& ring = poly_ring_of(p);
  require_commutative_division(ring);
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial has no degree");
  SimplicityResult out{false, std::nullopt, 0, {}, false};
  Element current = normalize_order(p);
  out.trail.push_back(current);
  const auto basis = ring.coefficients()->basis();
  while (true) {
    if (degree(current) == 0) {
      out.unit_reached = true;
      out.unit = current;
      return out;
    }
    if (out.steps >= budget) return out;
    std::optional<Element> next;
    bool all_zero = true;
    for (const auto& d : basis) {
      Element s = shrink(current, d);
      if (s.is_zero()) continue;
      all_zero = false;
      Element n = normalize_order(s);
      if (degree(n) < degree(current)) {
        next = n;
        break;
      }
    }
    if (!next) {
      out.all_shrinks_zero = all_zero;
      return out;
    }
    current = *next;
    ++out.steps;
    out.trail.push_back(current);
  }
}

// ---------------------------------------------------------------------------
// Reduction by generators

enum class CofactorSide { left, right };

inline const char* cofactor_side_name(CofactorSide s) { return s == CofactorSide::left ? "left" : "right"; }

/// One subtraction: cofactor * generator (left) or generator * cofactor (right).
struct ReductionStep {
  std::size_t generator;
  Element cofactor;
  CofactorSide side;
};

/// generators[i] are the generators as used (e.g. made monic); the input
/// equals sum over steps of the step products plus the remainder.
struct ReductionResult {
  std::vector<Element> generators;
  std::vector<ReductionStep> steps;
  Element remainder;
  bool irreducible = false;
};

inline Element step_product(const ReductionResult& r, const ReductionStep& s) {
  const Element& g = r.generators.at(s.generator);
  return s.side == CofactorSide::left ? s.cofactor * g : g * s.cofactor;
}

/// Sum of the recorded products plus the remainder.
inline Element replay(const ReductionResult& r) {
  Element acc = r.remainder;
  for (const auto& s : r.steps) acc += step_product(r, s);
  return acc;
}

inline constexpr std::size_t kDefaultReductionSteps = 10000;

namespace detail {

/// Cofactor s X^k with lead(s X^k * g) = c at exponent n, i.e.
/// s sigma^k(c(g)) = c.
inline std::optional<Element> left_cofactor(const SkewPolyRing& ring, const Element& g, std::int64_t n,
                                            const Element& c) {
  const std::int64_t k = n - degree(g);
  if (k < 0 && ring.shape() == Shape::ore) return std::nullopt;
  auto s = solve_right(c, apply_power(ring.sigma(), k, leading_coefficient(g)));
  if (!s) return std::nullopt;
  return ring.monomial(*s, k);
}

/// Cofactor s X^k with lead(g * s X^k) = c, i.e. c(g) sigma^m(s) = c.
inline std::optional<Element> right_cofactor(const SkewPolyRing& ring, const Element& g, std::int64_t n,
                                             const Element& c) {
  const std::int64_t m = degree(g);
  const std::int64_t k = n - m;
  if (k < 0 && ring.shape() == Shape::ore) return std::nullopt;
  auto y = solve_left(leading_coefficient(g), c);
  if (!y) return std::nullopt;
  return ring.monomial(apply_power(ring.sigma(), -m, *y), k);
}

}  // namespace detail

/// Cancels leading terms of f against the generators from the given side
/// until the degree drops below the least generator degree. A step needs a
/// single cofactor s X^k matching leading coefficients (always available over
/// division rings); when none exists the result is flagged irreducible.
inline ReductionResult reduce(const Element& f, const std::vector<Element>& gens, CofactorSide side,
                              std::size_t max_steps = kDefaultReductionSteps) {
  const auto& ring = poly_ring_of(f);
  if (gens.empty()) throw Error(Errc::invalid_argument, "empty generator set");
  std::int64_t min_degree = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_ring(f, gens[i]);
    if (gens[i].is_zero()) throw Error(Errc::invalid_argument, "zero generator");
    min_degree = i == 0 ? degree(gens[i]) : std::min(min_degree, degree(gens[i]));
  }
  ReductionResult out{gens, {}, f, false};
  while (!out.remainder.is_zero() && degree(out.remainder) >= min_degree) {
    if (out.steps.size() >= max_steps) {
      out.irreducible = true;
      break;
    }
    const std::int64_t n = degree(out.remainder);
    const Element c = leading_coefficient(out.remainder);
    std::optional<ReductionStep> step;
    for (std::size_t i = 0; i < gens.size() && !step; ++i) {
      if (degree(gens[i]) > n) continue;
      auto cof = side == CofactorSide::left ? detail::left_cofactor(ring, gens[i], n, c)
                                            : detail::right_cofactor(ring, gens[i], n, c);
      if (cof) step = ReductionStep{i, *cof, side};
    }
    if (!step) {
      out.irreducible = true;
      break;
    }
    Element next = out.remainder - step_product(out, *step);
    if (!next.is_zero() && degree(next) >= n) {
      // leading term did not cancel (possible over non-associative coefficients)
      out.irreducible = true;
      break;
    }
    out.remainder = std::move(next);
    out.steps.push_back(std::move(*step));
  }
  return out;
}

inline ReductionResult right_reduce(const Element& f, const std::vector<Element>& gens,
                                    std::size_t max_steps = kDefaultReductionSteps) {
  return reduce(f, gens, CofactorSide::right, max_steps);
}

/// Left division by p over a division ring: p is first made monic by
/// left-multiplying with the inverse of its leading coefficient, then
/// f = sum (r_t X^{k_t}) p' + remainder with deg remainder < deg p.
inline ReductionResult monic_left_reduce(const Element& f, const Element& p) {
  const auto& ring = poly_ring_of(p);
  require_same_ring(f, p);
  if (!ring.coefficients()->is_division_ring())
    throw Error(Errc::requires_division, "left division requires division ring");
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial has no degree");
  Element monic = ring.constant(invert(leading_coefficient(p))) * p;
  return reduce(f, {monic}, CofactorSide::left);
}

// ---------------------------------------------------------------------------
// Series reduction

struct SeriesReductionStep {
  std::size_t generator;
  /// A monomial s X^k of the underlying polynomial ring.
  Element cofactor;
};

struct SeriesReductionResult {
  std::vector<TruncatedSeries> generators;
  std::vector<SeriesReductionStep> steps;
  TruncatedSeries remainder;
  bool irreducible = false;
};

inline TruncatedSeries series_step_product(const SeriesReductionResult& r, const SeriesReductionStep& s) {
  const TruncatedSeries& g = r.generators.at(s.generator);
  return g * TruncatedSeries::embed(s.cofactor, g.kind(), g.precision());
}

inline TruncatedSeries replay(const SeriesReductionResult& r) {
  TruncatedSeries acc = r.remainder;
  for (const auto& s : r.steps) acc = acc + series_step_product(r, s);
  return acc;
}

/// Right reduction of series: each step subtracts g_i (s X^k) so that the
/// lowest term cancels, raising the order of the remainder. Runs `steps`
/// iterations, or stops early when the remainder vanishes at its precision.
inline SeriesReductionResult right_reduce(const TruncatedSeries& f, const std::vector<TruncatedSeries>& gens,
                                          std::size_t steps) {
  if (gens.empty()) throw Error(Errc::invalid_argument, "empty generator set");
  for (const auto& g : gens) {
    f.require_compatible(g);
    if (g.is_zero()) throw Error(Errc::invalid_argument, "zero generator");
  }
  const auto& ring = *f.ring();
  SeriesReductionResult out{gens, {}, f, false};
  for (std::size_t it = 0; it < steps && !out.remainder.is_zero(); ++it) {
    const std::int64_t n = out.remainder.valuation();
    const Element c = out.remainder.coeffs().front();
    std::optional<SeriesReductionStep> step;
    for (std::size_t i = 0; i < gens.size() && !step; ++i) {
      const std::int64_t m = gens[i].valuation();
      const std::int64_t k = n - m;
      if (k < 0 && f.kind() == SeriesKind::power) continue;
      auto y = solve_left(gens[i].coeffs().front(), c);
      if (!y) continue;
      step = SeriesReductionStep{i, ring.monomial(apply_power(ring.sigma(), -m, *y), k)};
    }
    if (!step) {
      out.irreducible = true;
      break;
    }
    TruncatedSeries next = out.remainder - series_step_product(out, *step);
    if (!next.is_zero() && next.valuation() <= n) {
      out.irreducible = true;
      break;
    }
    out.remainder = std::move(next);
    out.steps.push_back(std::move(*step));
  }
  return out;
}

}  // namespace skewring

#endif
