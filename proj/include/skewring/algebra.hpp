#ifndef SKEWRING_ALGEBRA_HPP
#define SKEWRING_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewring/ring.hpp"

namespace skewring {

/// A finite-dimensional Q-algebra given by structure constants.
///
/// table[p][q] is the coordinate vector of basis_p * basis_q; unit holds the
/// coordinates of 1. When present, involution[p] holds the coordinates of
/// (basis_p)^*. The `division` flag records that every nonzero element is
/// known to have a two-sided inverse; it is never inferred.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Rational>>> table;
  std::vector<Rational> unit;
  std::optional<std::vector<std::vector<Rational>>> involution;
  bool division = false;

  std::size_t dimension() const { return basis.size(); }
};

class AlgebraRing;
using AlgebraPtr = std::shared_ptr<const AlgebraRing>;

class AlgebraRing : public Ring {
  struct Token {};

 public:
  AlgebraRing(Token, AlgebraSpec spec, std::string descriptor)
      : Ring(std::move(descriptor)), spec_(std::move(spec)) {
    const std::size_t d = spec_.dimension();
    products_.resize(d * d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t r = 0; r < d; ++r)
          if (!spec_.table[p][q][r].is_zero())
            products_[p * d + q].push_back({static_cast<std::uint32_t>(r), spec_.table[p][q][r]});
    if (spec_.involution) {
      involution_images_.resize(d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t r = 0; r < d; ++r)
          if (!(*spec_.involution)[p][r].is_zero())
            involution_images_[p].push_back(
                {static_cast<std::uint32_t>(r), (*spec_.involution)[p][r]});
    }
  }

  /// Validates the description (shape, two-sided unit, involution axioms) and builds the ring.
  static AlgebraPtr create(AlgebraSpec spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const std::string& name() const noexcept { return spec_.name; }

  RingKind kind() const noexcept override { return RingKind::algebra; }

  Element zero() const override { return Element::from_coords(self(), {}); }
  Element one() const override { return Element::from_dense(self(), spec_.unit); }

  Element basis_element(std::size_t p) const {
    return Element::from_coords(self(), {{static_cast<std::uint32_t>(p), Rational(1)}});
  }

  Element element(const std::vector<Rational>& dense) const {
    if (dense.size() != spec_.dimension())
      throw Error(Errc::invalid_argument, "coordinate vector has wrong length for " + spec_.name);
    return Element::from_dense(self(), dense);
  }

  Element multiply(const Element& a, const Element& b) const override {
    const std::size_t d = spec_.dimension();
    std::vector<Coord> out;
    for (const auto& x : a.coords())
      for (const auto& y : b.coords()) {
        Rational f = mul(x.value, y.value);
        for (const auto& z : products_[x.index * d + y.index]) out.push_back({z.index, mul(f, z.value)});
      }
    return Element::from_coords(self(), std::move(out));
  }

  std::optional<std::size_t> dimension() const override { return spec_.dimension(); }

  std::vector<Element> basis() const override {
    std::vector<Element> out;
    for (std::size_t p = 0; p < spec_.dimension(); ++p) out.push_back(basis_element(p));
    return out;
  }

  std::vector<Rational> coordinates(const Element& a) const override {
    std::vector<Rational> out(spec_.dimension());
    for (const auto& c : a.coords()) out[c.index] = c.value;
    return out;
  }

  Element from_coordinates(const std::vector<Rational>& coords) const override {
    return element(coords);
  }

  std::vector<std::string> basis_labels() const override { return spec_.basis; }

  bool is_division_ring() const override { return spec_.division; }

  bool has_involution() const override { return spec_.involution.has_value(); }

  Element involution(const Element& a) const override {
    if (!spec_.involution) throw Error(Errc::not_star_algebra, "not a *-algebra");
    std::vector<Coord> out;
    for (const auto& x : a.coords())
      for (const auto& z : involution_images_[x.index]) out.push_back({z.index, x.value * z.value});
    return Element::from_coords(self(), std::move(out));
  }

  /// Conjugate over norm: when a a^* = a^* a = n 1 with n != 0, a^{-1} = a^* / n.
  std::optional<Element> fast_inverse(const Element& a) const override {
    if (!spec_.involution || a.is_zero()) return std::nullopt;
    Element conj = involution(a);
    Element n = multiply(a, conj);
    auto lambda = scalar_part(n);
    if (!lambda || lambda->is_zero()) return std::nullopt;
    if (!(multiply(conj, a) == n)) return std::nullopt;
    return Rational(1 / *lambda) * conj;
  }

  /// If a = q 1, returns q.
  std::optional<Rational> scalar_part(const Element& a) const {
    if (a.is_zero()) return Rational(0);
    // the unit has at least one nonzero coordinate; use it to find q
    std::size_t k = 0;
    while (spec_.unit[k].is_zero()) ++k;
    Rational q = coordinates(a)[k] / spec_.unit[k];
    if (q * one() == a) return q;
    return std::nullopt;
  }

  std::string format(const Element& a) const override {
    if (spec_.dimension() == 1) {
      auto c = coordinates(a);
      return format_rational(c[0] / spec_.unit[0]);
    }
    auto c = coordinates(a);
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += format_rational(c[i]);
    }
    return out + "]";
  }

 private:
  AlgebraSpec spec_;
  std::vector<std::vector<Coord>> products_;
  std::vector<std::vector<Coord>> involution_images_;
};

namespace detail {

inline std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string spec_fingerprint(const AlgebraSpec& s) {
  std::string text;
  for (const auto& l : s.basis) text += l + ",";
  for (const auto& row : s.table)
    for (const auto& cell : row)
      for (const auto& v : cell) text += format_rational(v) + ",";
  for (const auto& v : s.unit) text += format_rational(v) + ",";
  if (s.involution)
    for (const auto& row : *s.involution)
      for (const auto& v : row) text += format_rational(v) + ",";
  return digest(text).substr(0, 8);
}

}  // namespace detail

inline AlgebraPtr AlgebraRing::create(AlgebraSpec spec) {
  const std::size_t d = spec.dimension();
  const std::string name = spec.name;
  auto bad = [&name](const std::string& why) {
    return Error(Errc::invalid_algebra, "invalid algebra '" + name + "': " + why);
  };
  if (d == 0) throw bad("empty basis");
  if (spec.unit.size() != d) throw bad("unit has wrong length");
  if (spec.table.size() != d) throw bad("table has wrong shape");
  for (const auto& row : spec.table) {
    if (row.size() != d) throw bad("table has wrong shape");
    for (const auto& cell : row)
      if (cell.size() != d) throw bad("table has wrong shape");
  }
  if (spec.involution) {
    if (spec.involution->size() != d) throw bad("involution has wrong shape");
    for (const auto& row : *spec.involution)
      if (row.size() != d) throw bad("involution has wrong shape");
  }
  std::string descriptor = spec.name + "#" + detail::spec_fingerprint(spec);
  auto ring = std::make_shared<AlgebraRing>(Token{}, std::move(spec), std::move(descriptor));

  const Element one = ring->one();
  if (one.is_zero()) throw bad("unit is zero");
  for (const auto& b : ring->basis())
    if (!(one * b == b) || !(b * one == b)) throw bad("unit is not a two-sided identity");
  if (ring->has_involution()) {
    for (const auto& r : ring->basis()) {
      if (!(ring->involution(ring->involution(r)) == r)) throw bad("involution is not of order two");
      for (const auto& s : ring->basis())
        if (!(ring->involution(r * s) == ring->involution(s) * ring->involution(r)))
          throw bad("involution does not reverse products");
    }
  }
  return ring;
}

/// Q as a one-dimensional *-algebra with the identity involution.
inline AlgebraPtr rationals() {
  static const AlgebraPtr ring = AlgebraRing::create(
      AlgebraSpec{"Q", {"1"}, {{{Rational(1)}}}, {Rational(1)}, {{{Rational(1)}}}, true});
  return ring;
}

namespace detail {

inline std::vector<std::string> doubled_labels(std::size_t dim) {
  if (dim == 2) return {"1", "i"};
  if (dim == 4) return {"1", "i", "j", "k"};
  std::vector<std::string> out;
  for (std::size_t p = 0; p < dim; ++p) out.push_back("e" + std::to_string(p));
  return out;
}

inline std::string doubled_name(const std::string& name) {
  if (name == "Q") return "Q(i)";
  if (name == "Q(i)") return "H";
  if (name == "H") return "O";
  if (name == "O") return "S";
  return "CD(" + name + ")";
}

}  // namespace detail

/// Cayley-Dickson doubling of a *-algebra A: pairs (a, b) with
///   (a, b)(c, d) = (ac - d*b, da + bc*),   (a, b)* = (a*, -b).
/// Basis vector p of the result is (e_p, 0) for p < dim A and (0, e_{p-dim A})
/// otherwise.
inline AlgebraSpec cayley_dickson_double(const AlgebraRing& a) {
  if (!a.has_involution()) throw Error(Errc::not_star_algebra, "not a *-algebra");
  const std::size_t d = *a.dimension();
  const std::size_t n = 2 * d;
  auto pair_of = [&](std::size_t p) -> std::pair<Element, Element> {
    if (p < d) return {a.basis_element(p), a.zero()};
    return {a.zero(), a.basis_element(p - d)};
  };
  auto flatten = [&](const Element& x, const Element& y) {
    auto cx = a.coordinates(x);
    auto cy = a.coordinates(y);
    cx.insert(cx.end(), cy.begin(), cy.end());
    return cx;
  };

  AlgebraSpec out;
  out.name = detail::doubled_name(a.name());
  out.basis = detail::doubled_labels(n);
  out.table.assign(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [x, y] = pair_of(p);
      auto [u, v] = pair_of(q);
      Element first = x * u - a.involution(v) * y;
      Element second = v * x + y * a.involution(u);
      out.table[p][q] = flatten(first, second);
    }
  out.unit = flatten(a.one(), a.zero());
  std::vector<std::vector<Rational>> inv(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto [x, y] = pair_of(p);
    inv[p] = flatten(a.involution(x), -y);
  }
  out.involution = std::move(inv);
  out.division = a.is_division_ring() && n <= 8;
  return out;
}

inline AlgebraPtr gaussian_rationals() {
  static const AlgebraPtr ring = AlgebraRing::create(cayley_dickson_double(*rationals()));
  return ring;
}

inline AlgebraPtr quaternions() {
  static const AlgebraPtr ring = AlgebraRing::create(cayley_dickson_double(*gaussian_rationals()));
  return ring;
}

inline AlgebraPtr octonions() {
  static const AlgebraPtr ring = AlgebraRing::create(cayley_dickson_double(*quaternions()));
  return ring;
}

/// One doubling past the octonions. No division guarantees.
inline AlgebraPtr sedenions() {
  static const AlgebraPtr ring = AlgebraRing::create(cayley_dickson_double(*octonions()));
  return ring;
}

// ---------------------------------------------------------------------------
// Exhaustive basis checks. These are complete for finite-dimensional algebras
// because the product is Q-bilinear.

/// First basis triple with nonzero associator, if any.
inline std::optional<std::array<std::size_t, 3>> find_nonassociative_triple(const Ring& ring) {
  auto basis = ring.basis();
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q)
      for (std::size_t r = 0; r < basis.size(); ++r)
        if (!associator(basis[p], basis[q], basis[r]).is_zero()) return std::array{p, q, r};
  return std::nullopt;
}

inline bool is_associative(const Ring& ring) { return !find_nonassociative_triple(ring); }

inline bool is_commutative(const Ring& ring) {
  auto basis = ring.basis();
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      if (!commutator(basis[p], basis[q]).is_zero()) return false;
  return true;
}

/// The Jordan plus-algebra A^+ with product {a, b} = (ab + ba) / 2.
/// Requires A associative; the involution of A carries over unchanged.
inline AlgebraSpec jordan_algebra(const AlgebraRing& a) {
  if (!is_associative(a))
    throw Error(Errc::requires_associative, "Jordan construction requires associative input");
  const std::size_t d = *a.dimension();
  AlgebraSpec out;
  out.name = a.name() + "+";
  out.basis = a.spec().basis;
  out.table.assign(d, std::vector<std::vector<Rational>>(d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Element x = a.basis_element(p);
      Element y = a.basis_element(q);
      out.table[p][q] = a.coordinates(Rational(1, 2) * (x * y + y * x));
    }
  out.unit = a.spec().unit;
  out.involution = a.spec().involution;
  out.division = a.is_division_ring();
  return out;
}

inline AlgebraPtr jordan_quaternions() {
  static const AlgebraPtr ring = AlgebraRing::create(jordan_algebra(*quaternions()));
  return ring;
}

}  // namespace skewring

#endif
