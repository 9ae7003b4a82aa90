#ifndef SKEWRING_POLY_HPP
#define SKEWRING_POLY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skewring/inverse.hpp"
#include "skewring/maps.hpp"
#include "skewring/ring.hpp"

namespace skewring {

enum class Shape { ore, laurent };

inline const char* shape_name(Shape s) { return s == Shape::ore ? "ore" : "laurent"; }

/// Data defining R[X; sigma, delta] (ore) or R[X^+-; sigma] (laurent).
struct RingConfig {
  RingPtr coefficients;
  TwistMap sigma;
  std::optional<TwistMap> delta;
  std::string variable = "X";
  Shape shape = Shape::ore;
};

class SkewPolyRing;
using PolyRingPtr = std::shared_ptr<const SkewPolyRing>;

/// Polynomials sum r_i X^i with
///   ore:     (r X^m)(s X^n) = sum_i (r pi_i^m(s)) X^{i+n}
///   laurent: (r X^m)(s X^n) = (r sigma^m(s)) X^{m+n},  m, n in Z.
/// The coefficient ring may itself be non-associative.
class SkewPolyRing : public Ring {
  struct Token {};

 public:
  SkewPolyRing(Token, RingConfig config, std::string descriptor)
      : Ring(std::move(descriptor)), config_(std::move(config)) {}

  /// Validates the configuration: sigma respects 1 and is bijective, delta
  /// (ore only) kills 1, both act on the coefficient ring.
  static PolyRingPtr create(RingConfig config);

  const RingConfig& config() const noexcept { return config_; }
  Shape shape() const noexcept { return config_.shape; }
  const std::string& variable() const noexcept { return config_.variable; }
  const TwistMap& sigma() const noexcept { return config_.sigma; }
  const std::optional<TwistMap>& delta() const noexcept { return config_.delta; }
  const RingPtr& coefficients() const noexcept { return config_.coefficients; }

  /// True when the product is the plain twisted rule (no delta terms).
  bool untwisted_by_delta() const noexcept { return !config_.delta.has_value(); }

  RingKind kind() const noexcept override { return RingKind::polynomial; }
  RingPtr coefficient_ring() const override { return config_.coefficients; }

  Element zero() const override { return Element::from_terms(self(), {}); }
  Element one() const override { return monomial(config_.coefficients->one(), 0); }

  Element monomial(const Element& coeff, std::int64_t exponent) const {
    require_ring(*config_.coefficients, coeff);
    check_exponent(exponent);
    return Element::from_terms(self(), {{exponent, coeff}});
  }

  /// X^n
  Element power(std::int64_t n) const { return monomial(config_.coefficients->one(), n); }

  Element constant(const Element& coeff) const { return monomial(coeff, 0); }

  Element from_terms(std::vector<Term> terms) const {
    for (const auto& t : terms) {
      require_ring(*config_.coefficients, t.coeff);
      check_exponent(t.exponent);
    }
    return Element::from_terms(self(), std::move(terms));
  }

  void check_exponent(std::int64_t e) const {
    if (e < 0 && config_.shape == Shape::ore) throw Error(Errc::invalid_argument, "negative exponent");
  }

  /// Sum over i of (r pi_i^m(s)) X^{i+n}, or (r sigma^m(s)) X^{m+n}.
  std::vector<Term> monomial_product(const Element& r, std::int64_t m, const Element& s,
                                     std::int64_t n) const {
    std::vector<Term> out;
    if (config_.shape == Shape::laurent || !config_.delta) {
      Element c = r * apply_power(config_.sigma, m, s);
      if (!c.is_zero()) out.push_back({m + n, std::move(c)});
      return out;
    }
    auto row = pi_row(PiFamily{config_.sigma, *config_.delta}, m, s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      Element c = r * row[i];
      if (!c.is_zero()) out.push_back({static_cast<std::int64_t>(i) + n, std::move(c)});
    }
    return out;
  }

  Element multiply(const Element& a, const Element& b) const override {
    std::vector<Term> out;
    for (const auto& x : a.terms())
      for (const auto& y : b.terms()) {
        auto part = monomial_product(x.coeff, x.exponent, y.coeff, y.exponent);
        for (auto& t : part) out.push_back(std::move(t));
      }
    return Element::from_terms(self(), std::move(out));
  }

  /// Coefficient spanning set times X^e for 0 <= e <= bound (ore) or
  /// |e| <= bound (laurent), ordered by exponents 0, 1, -1, 2, -2, ...
  std::vector<Element> spanning_set(int bound) const override {
    std::vector<Element> out;
    auto coeffs = config_.coefficients->spanning_set(bound);
    for (std::int64_t e = 0; e <= bound; ++e)
      for (std::int64_t sign : {1, -1}) {
        if (sign == -1 && (e == 0 || config_.shape == Shape::ore)) continue;
        for (const auto& c : coeffs) out.push_back(monomial(c, sign * e));
      }
    return out;
  }

  bool has_involution() const override { return false; }

  /// Monomials u X^m whose candidate inverse sigma^{-m}(u^{-1}) X^{-m} checks
  /// out on both sides. Ore rings only have constant candidates.
  std::optional<Element> fast_inverse(const Element& a) const override {
    if (a.terms().size() != 1) return std::nullopt;
    const Term& t = a.terms().front();
    if (config_.shape == Shape::ore && t.exponent != 0) return std::nullopt;
    auto ui = try_invert(t.coeff);
    if (!ui) return std::nullopt;
    Element cand = monomial(apply_power(config_.sigma, -t.exponent, *ui), -t.exponent);
    const Element one_ = one();
    if (!(a * cand == one_) || !(cand * a == one_)) return std::nullopt;
    return cand;
  }

  std::string format(const Element& a) const override;

 private:
  RingConfig config_;
};

inline PolyRingPtr SkewPolyRing::create(RingConfig config) {
  if (!config.coefficients) throw Error(Errc::invalid_config, "missing coefficient ring");
  if (config.variable.empty()) throw Error(Errc::invalid_config, "missing variable name");
  if (!same_ring(*config.sigma.ring(), *config.coefficients))
    throw Error(Errc::incompatible_rings, "incompatible rings");
  if (!config.sigma.has(MapTag::respects_one)) throw Error(Errc::does_not_respect_one, "does not respect one");
  if (!config.sigma.has(MapTag::bijective)) throw Error(Errc::not_bijective, "not bijective");
  if (config.delta) {
    if (config.shape == Shape::laurent)
      throw Error(Errc::invalid_config, "laurent rings take no delta");
    if (!same_ring(*config.delta->ring(), *config.coefficients))
      throw Error(Errc::incompatible_rings, "incompatible rings");
    if (!config.delta->has(MapTag::kills_one)) throw Error(Errc::invalid_config, "delta must kill one");
  }
  std::string d = config.coefficients->descriptor() + "[" + config.variable +
                  (config.shape == Shape::laurent ? "^+-" : "") + ";" + config.sigma.descriptor();
  if (config.delta) d += "," + config.delta->descriptor();
  d += "]";
  return std::make_shared<SkewPolyRing>(Token{}, std::move(config), std::move(d));
}

inline PolyRingPtr as_poly_ring(const RingPtr& ring) {
  auto p = std::dynamic_pointer_cast<const SkewPolyRing>(ring);
  if (!p) throw Error(Errc::invalid_argument, "not a polynomial ring");
  return p;
}

inline const SkewPolyRing& poly_ring_of(const Element& p) {
  auto* r = dynamic_cast<const SkewPolyRing*>(p.ring().get());
  if (!r) throw Error(Errc::invalid_argument, "not a polynomial ring");
  return *r;
}

// ---------------------------------------------------------------------------
// Formatting (the grammar accepted by text.hpp)

namespace detail {

/// q when c = q 1.
inline std::optional<Rational> scalar_value(const Element& c) {
  const Ring& ring = c.owner();
  if (c.is_zero()) return Rational(0);
  switch (ring.kind()) {
    case RingKind::algebra: {
      auto coords = ring.coordinates(c);
      auto unit = ring.coordinates(ring.one());
      std::size_t k = 0;
      while (unit[k].is_zero()) ++k;
      Rational q = coords[k] / unit[k];
      if (q * ring.one() == c) return q;
      return std::nullopt;
    }
    case RingKind::polynomial:
      if (c.terms().size() != 1 || c.terms().front().exponent != 0) return std::nullopt;
      return scalar_value(c.terms().front().coeff);
    case RingKind::matrix:
      return std::nullopt;
  }
  return std::nullopt;
}

/// A coefficient written in front of a variable (or alone). Returns the text
/// without sign and whether the term should be written with a minus.
/// Scalar multiples of 1 are written as plain rationals.
inline std::pair<std::string, bool> coefficient_text(const Element& c, bool before_variable) {
  if (auto v = scalar_value(c)) {
    const bool negative = *v < 0;
    Rational a = negative ? Rational(-*v) : *v;
    if (before_variable && a == 1) return {"", negative};
    return {format_rational(a), negative};
  }
  if (c.owner().kind() == RingKind::polynomial) return {"(" + c.str() + ")", false};
  return {c.str(), false};
}

}  // namespace detail

/// Descending exponents, "+" / "-" separators, X^e with e = 1 written as X
/// and e = 0 omitted. Coefficients equal to 1 are omitted before a variable.
inline std::string SkewPolyRing::format(const Element& a) const {
  if (a.terms().empty()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const bool has_var = it->exponent != 0;
    auto [coeff, negative] = detail::coefficient_text(it->coeff, has_var);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff;
    if (has_var) {
      out += config_.variable;
      if (it->exponent != 1) out += "^" + std::to_string(it->exponent);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree data

struct DegreeData {
  std::int64_t degree;
  std::int64_t order;
  Element leading;
};

inline DegreeData degree_order_leading(const Element& p) {
  poly_ring_of(p);
  if (p.terms().empty()) throw Error(Errc::zero_polynomial, "zero polynomial has no degree");
  return {p.terms().back().exponent, p.terms().front().exponent, p.terms().back().coeff};
}

inline std::int64_t degree(const Element& p) { return degree_order_leading(p).degree; }
inline std::int64_t order(const Element& p) { return degree_order_leading(p).order; }
inline Element leading_coefficient(const Element& p) { return degree_order_leading(p).leading; }

/// Coefficient of X^e (zero when absent).
inline Element coefficient(const Element& p, std::int64_t e) {
  const auto& ring = poly_ring_of(p);
  for (const auto& t : p.terms())
    if (t.exponent == e) return t.coeff;
  return ring.coefficients()->zero();
}

// ---------------------------------------------------------------------------
// Right form: p = sum_i X^i c_i

/// Coefficients c_i with p = sum_i X^i c_i, ascending exponents. Laurent:
/// c_i = sigma^{-i}(r_i). Ore: peel off X^m sigma^{-m}(r) for the leading
/// term r X^m and recurse on the lower-degree rest.
inline std::vector<Term> to_right_form(const Element& p) {
  const auto& ring = poly_ring_of(p);
  const TwistMap& sigma = ring.sigma();
  std::vector<Term> out;
  if (ring.shape() == Shape::laurent) {
    for (const auto& t : p.terms()) out.push_back({t.exponent, apply_power(sigma, -t.exponent, t.coeff)});
    return out;
  }
  Element rest = p;
  while (!rest.is_zero()) {
    const Term& top = rest.terms().back();
    Element c = apply_power(sigma, -top.exponent, top.coeff);
    out.push_back({top.exponent, c});
    rest -= ring.power(top.exponent) * ring.constant(c);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline Element from_right_form(const PolyRingPtr& ring, const std::vector<Term>& form) {
  Element out = ring->zero();
  for (const auto& t : form) out += ring->power(t.exponent) * ring->constant(t.coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient rings and maps on polynomial rings

/// R[Y] or R[Y^+-] with commuting variable (sigma = id, no delta).
inline PolyRingPtr polynomial_ring(RingPtr coefficients, std::string variable = "Y", bool laurent = false) {
  TwistMap id = identity_map(coefficients);
  return SkewPolyRing::create(
      RingConfig{std::move(coefficients), id, std::nullopt, std::move(variable), laurent ? Shape::laurent : Shape::ore});
}

namespace detail {

/// q^e for integer e, with the small exponents precomputed.
class RationalPowers {
 public:
  static constexpr std::int64_t kTable = 32;

  explicit RationalPowers(const Rational& q) : q_(q), table_(2 * kTable + 1) {
    table_[kTable] = 1;
    for (std::int64_t e = 1; e <= kTable; ++e) {
      table_[kTable + e] = table_[kTable + e - 1] * q;
      table_[kTable - e] = table_[kTable - e + 1] / q;
    }
  }

  Rational operator()(std::int64_t e) const {
    if (e >= -kTable && e <= kTable) return table_[static_cast<std::size_t>(e + kTable)];
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const unsigned k = static_cast<unsigned>(e > 0 ? e : -e);
    Integer n = boost::multiprecision::pow(Integer(numerator(q_)), k);
    Integer d = boost::multiprecision::pow(Integer(denominator(q_)), k);
    return e > 0 ? Rational(n, d) : Rational(d, n);
  }

 private:
  Rational q_;
  std::vector<Rational> table_;
};

/// sum r_i Y^i -> sum q^{m i} tau^m(r_i) Y^i
inline Element scaled_power(const SkewPolyRing& ring, const TwistMap& base, const RationalPowers& q, std::int64_t m,
                            const Element& p) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Element c = apply_power(base, m, t.coeff);
    const std::int64_t e = m * t.exponent;
    if (e != 0) c = q(e) * c;
    out.push_back({t.exponent, std::move(c)});
  }
  return Element::from_terms(ring.self(), std::move(out));
}

}  // namespace detail

/// sum r_i Y^i -> sum q^i tau(r_i) Y^i, where tau acts on the coefficients.
/// With q = 1 this is the coefficient-wise extension of tau.
inline TwistMap variable_scale(const PolyRingPtr& ring, const Rational& q, const TwistMap& base) {
  if (q.is_zero()) throw Error(Errc::not_bijective, "not bijective");
  if (!same_ring(*base.ring(), *ring->coefficients()))
    throw Error(Errc::incompatible_rings, "incompatible rings");
  const SkewPolyRing* raw = ring.get();
  auto powers = std::make_shared<const detail::RationalPowers>(q);
  auto power = [raw, base, powers](std::int64_t m, const Element& p) {
    return detail::scaled_power(*raw, base, *powers, m, p);
  };
  TwistMap::Fn inv;
  if (base.has_inverse()) inv = [power](const Element& p) { return power(-1, p); };
  std::string d = q == 1 ? "cw(" + base.descriptor() + ")"
                         : "y_scale(" + format_rational(q) + (base.descriptor() == "id" ? "" : "," + base.descriptor()) + ")";
  TwistMap::Fn fwd = [power](const Element& p) { return power(1, p); };
  TwistMap out(ring, std::move(d), fwd, inv);
  if (base.has_inverse()) out = out.with_power(power);
  return out;
}

inline TwistMap variable_scale(const PolyRingPtr& ring, const Rational& q) {
  return variable_scale(ring, q, identity_map(ring->coefficients()));
}

inline TwistMap coefficientwise(const PolyRingPtr& ring, const TwistMap& base) {
  return variable_scale(ring, Rational(1), base);
}

/// d/dY on R[Y] (or R[Y^+-]).
inline TwistMap derivative(const PolyRingPtr& ring) {
  const SkewPolyRing* raw = ring.get();
  auto fwd = [raw](const Element& p) {
    std::vector<Term> out;
    for (const auto& t : p.terms())
      if (t.exponent != 0) out.push_back({t.exponent - 1, Rational(t.exponent) * t.coeff});
    return Element::from_terms(raw->self(), std::move(out));
  };
  return TwistMap(ring, "d/d" + ring->variable(), fwd);
}

// ---------------------------------------------------------------------------
// Iterated constructions

/// S[X; sigma-hat] over a twisted ring S = R[Y; sigma], where sigma-hat acts
/// on R by `base` and sends Y to qY. Requires `base` to commute with the
/// twist of S on R.
inline PolyRingPtr iterated_extend(const PolyRingPtr& inner_ring, std::string variable, const TwistMap& base,
                                   const Rational& q = 1, Shape shape = Shape::laurent) {
  if (!maps_commute(base, inner_ring->sigma()))
    throw Error(Errc::non_commuting, "iterated construction requires commuting automorphisms");
  TwistMap hat = variable_scale(inner_ring, q, base);
  return SkewPolyRing::create(RingConfig{inner_ring, hat, std::nullopt, std::move(variable), shape});
}

/// R[Y^+-][X^+-; Y -> qY]: X Y = q Y X.
inline PolyRingPtr quantum_torus(RingPtr coefficients, const Rational& q) {
  if (q.is_zero()) throw Error(Errc::invalid_argument, "quantum torus parameter must be nonzero");
  auto inner_ring = polynomial_ring(coefficients, "Y", true);
  return SkewPolyRing::create(
      RingConfig{inner_ring, variable_scale(inner_ring, q), std::nullopt, "X", Shape::laurent});
}

/// The Weyl algebra Q[Y][X; id, d/dY].
inline PolyRingPtr weyl_algebra(RingPtr base) {
  auto inner_ring = polynomial_ring(std::move(base), "Y", false);
  return SkewPolyRing::create(
      RingConfig{inner_ring, identity_map(inner_ring), derivative(inner_ring), "X", Shape::ore});
}

/// Convenience: R[X^+-; sigma] or R[X; sigma].
inline PolyRingPtr skew_ring(const TwistMap& sigma, Shape shape, std::string variable = "X") {
  return SkewPolyRing::create(RingConfig{sigma.ring(), sigma, std::nullopt, std::move(variable), shape});
}

}  // namespace skewring

#endif
