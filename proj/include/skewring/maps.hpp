#ifndef SKEWRING_MAPS_HPP
#define SKEWRING_MAPS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewring/algebra.hpp"
#include "skewring/inverse.hpp"
#include "skewring/linalg.hpp"
#include "skewring/matrix.hpp"
#include "skewring/ring.hpp"

namespace skewring {

enum class MapTag : unsigned {
  additive = 1u << 0,
  respects_one = 1u << 1,
  kills_one = 1u << 2,
  bijective = 1u << 3,
  automorphism = 1u << 4,
  antiautomorphism = 1u << 5,
  involution = 1u << 6,
};

inline const char* tag_name(MapTag t) {
  switch (t) {
    case MapTag::additive: return "additive";
    case MapTag::respects_one: return "respects_one";
    case MapTag::kills_one: return "kills_one";
    case MapTag::bijective: return "bijective";
    case MapTag::automorphism: return "automorphism";
    case MapTag::antiautomorphism: return "antiautomorphism";
    case MapTag::involution: return "involution";
  }
  return "?";
}

class TagSet {
 public:
  TagSet() = default;
  TagSet(std::initializer_list<MapTag> tags) {
    for (auto t : tags) insert(t);
  }

  bool has(MapTag t) const noexcept { return bits_ & static_cast<unsigned>(t); }
  void insert(MapTag t) noexcept { bits_ |= static_cast<unsigned>(t); }
  void erase(MapTag t) noexcept { bits_ &= ~static_cast<unsigned>(t); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (unsigned b = 1; b <= static_cast<unsigned>(MapTag::involution); b <<= 1)
      if (bits_ & b) out.emplace_back(tag_name(static_cast<MapTag>(b)));
    return out;
  }

  friend bool operator==(const TagSet&, const TagSet&) = default;

 private:
  unsigned bits_ = 0;
};

/// Degree bound used when a property of a map on a polynomial ring is
/// checked on basis monomials.
inline constexpr int kPolynomialCheckBound = 2;

/// Rings on which a Q-linear map can be classified by checking basis pairs:
/// finite-dimensional rings, and polynomial rings over them (up to a degree bound).
inline bool basis_checkable(const Ring& ring) {
  if (ring.dimension()) return true;
  if (ring.kind() == RingKind::polynomial) {
    auto c = ring.coefficient_ring();
    return c && c->dimension();
  }
  return false;
}

/// An additive map on a coefficient ring, optionally with an exact inverse,
/// carrying the set of properties verified at construction.
///
/// Additive maps between Q-vector spaces are automatically Q-linear, so all
/// property checks reduce to (bounded) basis exhaustion.
class TwistMap {
 public:
  using Fn = std::function<Element(const Element&)>;
  /// Optional shortcut for the m-fold power (m < 0: of the inverse).
  using PowerFn = std::function<Element(std::int64_t, const Element&)>;

  /// Builds the map and verifies its tags. `linear` declares the map additive
  /// by construction; otherwise additivity is checked on spanning pairs.
  /// Throws "not bijective" when a supplied inverse is not a two-sided inverse.
  TwistMap(RingPtr ring, std::string descriptor, Fn forward, Fn inverse = {}, bool linear = true);

  const RingPtr& ring() const noexcept { return state_->ring; }
  const std::string& descriptor() const noexcept { return state_->descriptor; }
  const TagSet& tags() const noexcept { return state_->tags; }
  bool has(MapTag t) const noexcept { return state_->tags.has(t); }
  bool has_inverse() const noexcept { return static_cast<bool>(state_->inverse); }

  Element operator()(const Element& r) const {
    require_ring(*state_->ring, r);
    return state_->forward(r);
  }

  Element inverse(const Element& r) const {
    if (!state_->inverse) throw Error(Errc::inverse_unavailable, "inverse unavailable");
    require_ring(*state_->ring, r);
    return state_->inverse(r);
  }

  /// The map with forward and inverse swapped. Requires an inverse.
  /// Installs a closed form for powers, used by apply_power. Must agree with
  /// repeated application.
  TwistMap with_power(PowerFn power) const {
    auto state = std::make_shared<State>(*state_);
    state->power = std::move(power);
    TwistMap out = *this;
    out.state_ = std::move(state);
    return out;
  }

  const PowerFn& power_fn() const noexcept { return state_->power; }

  TwistMap inverted() const {
    if (!state_->inverse) throw Error(Errc::inverse_unavailable, "inverse unavailable");
    return TwistMap(state_->ring, "inv(" + state_->descriptor + ")", state_->inverse, state_->forward);
  }

 private:
  struct State {
    RingPtr ring;
    std::string descriptor;
    Fn forward;
    Fn inverse;
    TagSet tags;
    PowerFn power;
  };
  std::shared_ptr<const State> state_;
};

/// Exhaustive check of multiplicativity on basis pairs (basis monomials up to
/// `bound` for polynomial rings). Returns the subset of
/// {automorphism, antiautomorphism, involution} that holds.
inline TagSet classify_multiplicativity(const TwistMap& map, int bound = kPolynomialCheckBound) {
  const Ring& ring = *map.ring();
  if (!basis_checkable(ring))
    throw Error(Errc::cannot_decide, "cannot decide by basis exhaustion");
  auto basis = ring.spanning_set(bound);
  std::vector<Element> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(map(b));

  bool multiplicative = true;
  bool anti = true;
  for (std::size_t p = 0; p < basis.size() && (multiplicative || anti); ++p)
    for (std::size_t q = 0; q < basis.size() && (multiplicative || anti); ++q) {
      Element lhs = map(basis[p] * basis[q]);
      if (multiplicative && !(lhs == images[p] * images[q])) multiplicative = false;
      if (anti && !(lhs == images[q] * images[p])) anti = false;
    }
  bool order_two = true;
  for (std::size_t p = 0; p < basis.size() && order_two; ++p)
    if (!(map(images[p]) == basis[p])) order_two = false;

  TagSet out;
  const bool bijective = map.has(MapTag::bijective);
  if (multiplicative && bijective) out.insert(MapTag::automorphism);
  if (anti && (bijective || order_two)) out.insert(MapTag::antiautomorphism);
  if (anti && order_two) out.insert(MapTag::involution);
  return out;
}

inline TwistMap::TwistMap(RingPtr ring, std::string descriptor, Fn forward, Fn inverse, bool linear) {
  auto state = std::make_shared<State>();
  state->ring = std::move(ring);
  state->descriptor = std::move(descriptor);
  state->forward = std::move(forward);
  state->inverse = std::move(inverse);
  const Ring& r = *state->ring;

  const Element one = r.one();
  const Element image_of_one = state->forward(one);
  if (image_of_one == one) state->tags.insert(MapTag::respects_one);
  if (image_of_one.is_zero()) state->tags.insert(MapTag::kills_one);

  const bool checkable = basis_checkable(r);
  std::vector<Element> span;
  if (checkable) span = r.spanning_set(kPolynomialCheckBound);

  if (linear) {
    state->tags.insert(MapTag::additive);
  } else if (checkable) {
    bool additive = true;
    for (std::size_t p = 0; p < span.size() && additive; ++p)
      for (std::size_t q = p; q < span.size() && additive; ++q)
        if (!(state->forward(span[p] + span[q]) == state->forward(span[p]) + state->forward(span[q])))
          additive = false;
    if (additive) state->tags.insert(MapTag::additive);
  }

  if (state->inverse) {
    // On non-checkable rings the inverse is trusted as supplied.
    for (const auto& b : span)
      if (!(state->inverse(state->forward(b)) == b) || !(state->forward(state->inverse(b)) == b))
        throw Error(Errc::not_bijective, "not bijective");
    state->tags.insert(MapTag::bijective);
  }
  state_ = state;

  if (checkable && state->tags.has(MapTag::respects_one)) {
    TagSet mult = classify_multiplicativity(*this);
    for (auto t : {MapTag::automorphism, MapTag::antiautomorphism, MapTag::involution})
      if (mult.has(t)) state->tags.insert(t);
  }
}

// ---------------------------------------------------------------------------
// Powers and the pi family

/// m-fold composition of the map (m >= 0) or of its inverse (m < 0).
inline Element apply_power(const TwistMap& map, std::int64_t m, Element r) {
  if (m < 0 && !map.has_inverse()) throw Error(Errc::inverse_unavailable, "inverse unavailable");
  if (m == 0) return r;
  if (map.power_fn()) {
    require_ring(*map.ring(), r);
    return map.power_fn()(m, r);
  }
  for (std::int64_t k = 0; k < m; ++k) r = map(r);
  for (std::int64_t k = 0; k > m; --k) r = map.inverse(r);
  return r;
}

/// sigma^m as a map in its own right, with tags recomputed.
inline TwistMap map_power(const TwistMap& map, std::int64_t m) {
  TwistMap::Fn inv;
  if (map.has_inverse()) inv = [map, m](const Element& x) { return apply_power(map, -m, x); };
  return TwistMap(map.ring(), map.descriptor() + "^" + std::to_string(m),
                  [map, m](const Element& x) { return apply_power(map, m, x); }, inv);
}

/// The pair (sigma, delta) defining an Ore-type multiplication.
struct PiFamily {
  TwistMap sigma;
  TwistMap delta;
};

/// [pi_0^m(s), ..., pi_m^m(s)] where pi_i^m is the sum of all words with i
/// letters sigma and m - i letters delta. Computed by splitting off the
/// outermost letter:
///   pi_i^m = sigma o pi_{i-1}^{m-1} + delta o pi_i^{m-1},   pi_0^0 = id.
inline std::vector<Element> pi_row(const PiFamily& fam, std::int64_t m, const Element& s) {
  std::vector<Element> row{s};
  for (std::int64_t level = 1; level <= m; ++level) {
    std::vector<Element> next;
    next.reserve(static_cast<std::size_t>(level + 1));
    for (std::int64_t i = 0; i <= level; ++i) {
      Element acc = s.owner().zero();
      if (i >= 1) acc += fam.sigma(row[static_cast<std::size_t>(i - 1)]);
      if (i < level) acc += fam.delta(row[static_cast<std::size_t>(i)]);
      next.push_back(std::move(acc));
    }
    row = std::move(next);
  }
  return row;
}

/// pi_i^m(s); zero when i > m.
inline Element pi_apply(const PiFamily& fam, std::int64_t i, std::int64_t m, const Element& s) {
  if (i < 0 || m < 0 || i > m) return s.owner().zero();
  return pi_row(fam, m, s)[static_cast<std::size_t>(i)];
}

/// Words spelling pi_i^m: 's' for sigma, 'd' for delta, outermost letter first.
inline std::vector<std::string> pi_words(std::int64_t i, std::int64_t m) {
  std::vector<std::string> out;
  if (i < 0 || m < 0 || i > m) return out;
  std::string word(static_cast<std::size_t>(m), 'd');
  std::fill(word.begin(), word.begin() + i, 's');
  std::sort(word.begin(), word.end(), std::greater<>());
  do {
    out.push_back(word);
  } while (std::prev_permutation(word.begin(), word.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Linear maps on finite-dimensional rings

/// Matrix of a map on a finite-dimensional ring: column j = coordinates of
/// the image of basis element j.
inline QMatrix matrix_of(const TwistMap& map) {
  const Ring& ring = *map.ring();
  if (!ring.dimension()) throw Error(Errc::cannot_decide, "map has no finite matrix");
  auto basis = ring.basis();
  QMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto col = ring.coordinates(map(basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

/// The map x -> M x on coordinates. Inverse computed exactly when M is
/// invertible.
inline TwistMap linear_map(RingPtr ring, const QMatrix& m, std::string descriptor = "") {
  auto d = ring->dimension();
  if (!d || m.rows() != *d || m.cols() != *d)
    throw Error(Errc::invalid_argument, "matrix does not match ring dimension");
  if (descriptor.empty()) {
    descriptor = "matrix(";
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) descriptor += (i + j ? "," : "") + format_rational(m(i, j));
    descriptor += ")";
  }
  const Ring* raw = ring.get();
  auto apply = [raw](const QMatrix& a) {
    return [raw, a](const Element& x) { return raw->from_coordinates(a.apply(raw->coordinates(x))); };
  };
  TwistMap::Fn inv;
  if (auto mi = inverse(m)) inv = apply(*mi);
  return TwistMap(std::move(ring), std::move(descriptor), apply(m), inv);
}

inline TwistMap identity_map(RingPtr ring) {
  auto id = [](const Element& x) { return x; };
  return TwistMap(std::move(ring), "id", id, id).with_power([](std::int64_t, const Element& x) { return x; });
}

inline TwistMap zero_map(RingPtr ring) {
  const Ring* raw = ring.get();
  return TwistMap(std::move(ring), "zero", [raw](const Element&) { return raw->zero(); });
}

/// a + b u + ... -> a + q (b u + ...): scales every coordinate except the one
/// along the unit (basis element 0). On Q(i) this is a + bi -> a + qbi.
inline TwistMap q_twist(const AlgebraPtr& ring, const Rational& q) {
  if (q.is_zero()) throw Error(Errc::not_bijective, "not bijective");
  const auto& unit = ring->spec().unit;
  for (std::size_t p = 1; p < unit.size(); ++p)
    if (!unit[p].is_zero() || unit[0] != 1)
      throw Error(Errc::invalid_argument, "q_twist needs the unit as basis element 0");
  const std::size_t d = *ring->dimension();
  QMatrix m = QMatrix::identity(d);
  for (std::size_t p = 1; p < d; ++p) m(p, p) = q;
  return linear_map(ring, m, "q_twist(" + format_rational(q) + ")");
}

namespace detail {

inline TwistMap permute_entries(const std::shared_ptr<const MatrixRing>& ring,
                                std::vector<std::size_t> perm, std::string descriptor) {
  // perm[target] = source position
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) inv[perm[t]] = t;
  auto make = [raw = ring.get()](std::vector<std::size_t> p) {
    return [raw, p](const Element& x) {
      std::vector<Element> e;
      e.reserve(p.size());
      for (std::size_t t = 0; t < p.size(); ++t) e.push_back(x.entries()[p[t]]);
      return Element::from_entries(raw->self(), std::move(e));
    };
  };
  return TwistMap(ring, std::move(descriptor), make(std::move(perm)), make(std::move(inv)));
}

}  // namespace detail

inline TwistMap transpose(const std::shared_ptr<const MatrixRing>& ring) {
  const std::size_t n = ring->size();
  std::vector<std::size_t> perm(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) perm[i * n + j] = j * n + i;
  return detail::permute_entries(ring, std::move(perm), "transpose");
}

/// On M_2(R): swaps the two diagonal entries, fixes the off-diagonal ones.
inline TwistMap diag_swap(const std::shared_ptr<const MatrixRing>& ring) {
  if (ring->size() != 2) throw Error(Errc::invalid_argument, "diag_swap is defined on 2x2 matrices");
  return detail::permute_entries(ring, {3, 1, 2, 0}, "diag_swap");
}

/// The ring's own involution: conjugation on a Cayley-Dickson algebra,
/// conjugate transpose on matrices over a *-ring.
inline TwistMap conjugation(RingPtr ring) {
  if (!ring->has_involution()) throw Error(Errc::not_star_algebra, "not a *-algebra");
  const Ring* raw = ring.get();
  auto star = [raw](const Element& x) { return raw->involution(x); };
  std::string name = ring->kind() == RingKind::matrix ? "conj_transpose" : "conj";
  return TwistMap(std::move(ring), std::move(name), star, star);
}

inline TwistMap conj_transpose(const std::shared_ptr<const MatrixRing>& ring) {
  return conjugation(ring);
}

/// x -> (u x) u^{-1}, inverse x -> (u^{-1} x) u.
inline TwistMap inner(RingPtr ring, const Element& u) {
  require_ring(*ring, u);
  auto inv = try_invert(u);
  if (!inv) throw Error(Errc::requires_unit, "inner automorphism requires unit");
  auto fwd = [u, ui = *inv](const Element& x) { return (u * x) * ui; };
  auto back = [u, ui = *inv](const Element& x) { return (ui * x) * u; };
  return TwistMap(std::move(ring), "inner(" + u.str() + ")", fwd, back);
}

/// c -> [[a, b], c] - 3 (a, b, c). A derivation on alternative algebras such
/// as the octonions.
inline TwistMap standard_derivation(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element ab = commutator(a, b);
  auto fwd = [a, b, ab](const Element& c) {
    return commutator(ab, c) - Rational(3) * associator(a, b, c);
  };
  return TwistMap(a.ring(), "derivation(" + a.str() + "," + b.str() + ")", fwd);
}

// ---------------------------------------------------------------------------
// Order and axiom validation

struct FiniteOrder {
  std::optional<std::int64_t> order;
  /// True when no power of the map can be the identity (rational determinant
  /// or diagonal scaling factor different from +-1).
  bool infinite_certified = false;
};

inline FiniteOrder detect_finite_order(const TwistMap& map, std::int64_t bound) {
  const Ring& ring = *map.ring();
  if (!ring.dimension()) throw Error(Errc::order_unsupported, "order detection unsupported");
  auto basis = ring.basis();
  std::vector<Element> current = basis;
  for (std::int64_t k = 1; k <= bound; ++k) {
    bool identity = true;
    for (std::size_t p = 0; p < basis.size(); ++p) {
      current[p] = map(current[p]);
      if (identity && !(current[p] == basis[p])) identity = false;
    }
    if (identity) return {k, false};
  }
  FiniteOrder out;
  QMatrix m = matrix_of(map);
  Rational det = determinant(m);
  if (det != 1 && det != -1) out.infinite_certified = true;
  bool diagonal = true;
  for (std::size_t i = 0; i < m.rows() && diagonal; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) diagonal = false;
  if (diagonal)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, i) != 1 && m(i, i) != -1) out.infinite_certified = true;
  return out;
}

enum class MapRole { sigma, delta };

struct AxiomCheck {
  std::string axiom;
  bool pass;
};

struct TwistReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
  }
};

/// sigma: additive, sigma(1) = 1, bijective.  delta: additive, delta(1) = 0.
inline TwistReport validate_twist_axioms(const TwistMap& map, MapRole role) {
  TwistReport r;
  r.checks.push_back({"additive", map.has(MapTag::additive)});
  if (role == MapRole::sigma) {
    r.checks.push_back({"respects_one", map.has(MapTag::respects_one)});
    r.checks.push_back({"bijective", map.has(MapTag::bijective)});
  } else {
    r.checks.push_back({"kills_one", map.has(MapTag::kills_one)});
  }
  return r;
}

/// sigma o tau == tau o sigma on spanning elements.
inline bool maps_commute(const TwistMap& a, const TwistMap& b, int bound = kPolynomialCheckBound) {
  for (const auto& x : a.ring()->spanning_set(bound))
    if (!(a(b(x)) == b(a(x)))) return false;
  return true;
}

}  // namespace skewring

#endif
