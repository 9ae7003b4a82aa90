#ifndef SKEWRING_RING_HPP
#define SKEWRING_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/rational.hpp"

namespace skewring {

enum class RingKind { algebra, matrix, polynomial };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// One nonzero coordinate of a structure-constant algebra element.
struct Coord {
  std::uint32_t index;
  Rational value;

  friend bool operator==(const Coord&, const Coord&) = default;
};

struct Term;

/// Immutable exact element of some coefficient ring. Exactly one of the three
/// payloads is meaningful, selected by the owning ring's kind:
///   algebra    -> sparse coordinates over the declared basis
///   matrix     -> n*n entries, row-major
///   polynomial -> terms sorted by exponent, no zero coefficients
class Element {
 public:
  Element() = default;

  static Element from_coords(RingPtr ring, std::vector<Coord> coords);
  static Element from_dense(RingPtr ring, const std::vector<Rational>& dense);
  static Element from_entries(RingPtr ring, std::vector<Element> entries);
  static Element from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const Ring& owner() const { return *ring_; }
  RingKind kind() const;

  const std::vector<Coord>& coords() const noexcept { return coords_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const;
  std::string str() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);

 private:
  RingPtr ring_;
  std::vector<Coord> coords_;
  std::vector<Element> entries_;
  std::vector<Term> terms_;
};

struct Term {
  std::int64_t exponent;
  Element coeff;
};

/// A unital, not necessarily associative ring whose elements are exact
/// rational data. Ring objects are immutable and always owned by shared_ptr.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  virtual RingKind kind() const noexcept = 0;

  /// Stable textual identity; two rings with equal descriptors are the same ring.
  const std::string& descriptor() const noexcept { return descriptor_; }

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;

  /// Dimension over Q, or nullopt for the polynomial constructions.
  virtual std::optional<std::size_t> dimension() const { return std::nullopt; }

  virtual std::vector<Element> basis() const {
    throw Error(Errc::cannot_decide, "ring '" + descriptor_ + "' has no finite basis");
  }

  /// A finite set spanning everything of "size" at most `degree_bound`; for
  /// finite-dimensional rings this is just the basis.
  virtual std::vector<Element> spanning_set(int /*degree_bound*/) const { return basis(); }

  virtual std::vector<Rational> coordinates(const Element& /*a*/) const {
    throw Error(Errc::cannot_decide, "ring '" + descriptor_ + "' has no finite coordinates");
  }
  virtual Element from_coordinates(const std::vector<Rational>& /*coords*/) const {
    throw Error(Errc::cannot_decide, "ring '" + descriptor_ + "' has no finite coordinates");
  }

  /// Labels of the basis, used for literal aliases in the text format.
  virtual std::vector<std::string> basis_labels() const { return {}; }

  virtual bool is_division_ring() const { return false; }

  /// For polynomial constructions, the ring the coefficients live in.
  virtual RingPtr coefficient_ring() const { return nullptr; }

  virtual bool has_involution() const { return false; }
  virtual Element involution(const Element& /*a*/) const {
    throw Error(Errc::not_star_algebra, "not a *-algebra");
  }

  /// A ring-specific inverse route (conjugate over norm, monomial inverse).
  /// Returns nullopt when the route does not apply; callers fall back to
  /// linear algebra.
  virtual std::optional<Element> fast_inverse(const Element& /*a*/) const { return std::nullopt; }

  virtual std::string format(const Element& a) const = 0;

  RingPtr self() const { return shared_from_this(); }

 protected:
  explicit Ring(std::string descriptor) : descriptor_(std::move(descriptor)) {}

 private:
  std::string descriptor_;
};

inline bool same_ring(const Ring& a, const Ring& b) noexcept {
  return &a == &b || a.descriptor() == b.descriptor();
}

inline void require_same_ring(const Element& a, const Element& b) {
  if (!a.ring() || !b.ring() || !same_ring(*a.ring(), *b.ring()))
    throw Error(Errc::incompatible_rings, "incompatible rings");
}

inline void require_ring(const Ring& expected, const Element& a) {
  if (!a.ring() || !same_ring(expected, *a.ring()))
    throw Error(Errc::incompatible_rings, "incompatible rings");
}

// ---------------------------------------------------------------------------
// Element implementation

inline RingKind Element::kind() const { return ring_->kind(); }

inline Element Element::from_coords(RingPtr ring, std::vector<Coord> coords) {
  std::sort(coords.begin(), coords.end(),
            [](const Coord& a, const Coord& b) { return a.index < b.index; });
  std::vector<Coord> merged;
  merged.reserve(coords.size());
  for (auto& c : coords) {
    if (!merged.empty() && merged.back().index == c.index)
      merged.back().value += c.value;
    else
      merged.push_back(std::move(c));
  }
  std::erase_if(merged, [](const Coord& c) { return c.value.is_zero(); });
  Element e;
  e.ring_ = std::move(ring);
  e.coords_ = std::move(merged);
  return e;
}

inline Element Element::from_dense(RingPtr ring, const std::vector<Rational>& dense) {
  std::vector<Coord> coords;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) coords.push_back({static_cast<std::uint32_t>(i), dense[i]});
  Element e;
  e.ring_ = std::move(ring);
  e.coords_ = std::move(coords);
  return e;
}

inline Element Element::from_entries(RingPtr ring, std::vector<Element> entries) {
  Element e;
  e.ring_ = std::move(ring);
  e.entries_ = std::move(entries);
  return e;
}

inline Element Element::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  Element e;
  e.ring_ = std::move(ring);
  e.terms_ = std::move(merged);
  return e;
}

inline bool Element::is_zero() const {
  switch (kind()) {
    case RingKind::algebra:
      return coords_.empty();
    case RingKind::matrix:
      return std::all_of(entries_.begin(), entries_.end(),
                         [](const Element& x) { return x.is_zero(); });
    case RingKind::polynomial:
      return terms_.empty();
  }
  return true;
}

inline std::string Element::str() const { return ring_ ? ring_->format(*this) : "<null>"; }

namespace detail {

template <class Item, class Key, class Combine>
std::vector<Item> merge_sorted(const std::vector<Item>& a, const std::vector<Item>& b, Key key,
                               Combine combine) {
  std::vector<Item> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key(a[i]) < key(b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key(b[j]) < key(a[i])) {
      out.push_back(b[j++]);
    } else {
      if (auto merged = combine(a[i], b[j])) out.push_back(std::move(*merged));
      ++i;
      ++j;
    }
  }
  return out;
}

inline Element negate(const Element& a);

inline Element add(const Element& a, const Element& b, bool subtract) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case RingKind::algebra: {
      std::vector<Coord> rhs = b.coords();
      if (subtract)
        for (auto& c : rhs) c.value = -c.value;
      auto merged = merge_sorted(
          a.coords(), rhs, [](const Coord& c) { return c.index; },
          [](const Coord& x, const Coord& y) -> std::optional<Coord> {
            Rational v = x.value + y.value;
            if (v.is_zero()) return std::nullopt;
            return Coord{x.index, std::move(v)};
          });
      return Element::from_coords(a.ring(), std::move(merged));
    }
    case RingKind::matrix: {
      std::vector<Element> out;
      out.reserve(a.entries().size());
      for (std::size_t i = 0; i < a.entries().size(); ++i)
        out.push_back(add(a.entries()[i], b.entries()[i], subtract));
      return Element::from_entries(a.ring(), std::move(out));
    }
    case RingKind::polynomial: {
      std::vector<Term> rhs = b.terms();
      if (subtract)
        for (auto& t : rhs) t.coeff = negate(t.coeff);
      auto merged = merge_sorted(
          a.terms(), rhs, [](const Term& t) { return t.exponent; },
          [](const Term& x, const Term& y) -> std::optional<Term> {
            Element c = add(x.coeff, y.coeff, false);
            if (c.is_zero()) return std::nullopt;
            return Term{x.exponent, std::move(c)};
          });
      return Element::from_terms(a.ring(), std::move(merged));
    }
  }
  return a;
}

inline Element scale(const Rational& q, const Element& a) {
  if (q.is_zero()) return a.owner().zero();
  if (q == 1) return a;
  switch (a.kind()) {
    case RingKind::algebra: {
      std::vector<Coord> out = a.coords();
      for (auto& c : out) c.value = mul(c.value, q);
      return Element::from_coords(a.ring(), std::move(out));
    }
    case RingKind::matrix: {
      std::vector<Element> out;
      out.reserve(a.entries().size());
      for (const auto& x : a.entries()) out.push_back(scale(q, x));
      return Element::from_entries(a.ring(), std::move(out));
    }
    case RingKind::polynomial: {
      std::vector<Term> out;
      out.reserve(a.terms().size());
      for (const auto& t : a.terms()) out.push_back({t.exponent, scale(q, t.coeff)});
      return Element::from_terms(a.ring(), std::move(out));
    }
  }
  return a;
}

inline Element negate(const Element& a) { return scale(Rational(-1), a); }

inline bool equal(const Element& a, const Element& b) {
  switch (a.kind()) {
    case RingKind::algebra:
      return a.coords() == b.coords();
    case RingKind::matrix:
      for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (!equal(a.entries()[i], b.entries()[i])) return false;
      return true;
    case RingKind::polynomial:
      if (a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (a.terms()[i].exponent != b.terms()[i].exponent) return false;
        if (!equal(a.terms()[i].coeff, b.terms()[i].coeff)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace detail

inline Element& Element::operator+=(const Element& other) {
  *this = detail::add(*this, other, false);
  return *this;
}

inline Element& Element::operator-=(const Element& other) {
  *this = detail::add(*this, other, true);
  return *this;
}

inline Element operator+(const Element& a, const Element& b) { return detail::add(a, b, false); }
inline Element operator-(const Element& a, const Element& b) { return detail::add(a, b, true); }
inline Element operator-(const Element& a) { return detail::negate(a); }
inline Element operator*(const Rational& q, const Element& a) { return detail::scale(q, a); }

inline Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.owner().multiply(a, b);
}

/// Exact equality; elements of different rings are an error, not "unequal".
inline bool operator==(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return detail::equal(a, b);
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.str(); }

/// (a b) c - a (b c)
inline Element associator(const Element& a, const Element& b, const Element& c) {
  return (a * b) * c - a * (b * c);
}

/// a b - b a
inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

/// q * 1
inline Element scalar(const Ring& ring, const Rational& q) { return q * ring.one(); }

}  // namespace skewring

#endif
