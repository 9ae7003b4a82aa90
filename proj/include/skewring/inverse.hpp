#ifndef SKEWRING_INVERSE_HPP
#define SKEWRING_INVERSE_HPP

#include <optional>
#include <vector>

#include "skewring/linalg.hpp"
#include "skewring/ring.hpp"

namespace skewring {

namespace detail {

/// Matrix whose column j holds the coordinates of a * b_j (left = true) or
/// b_j * a (left = false).
inline QMatrix multiplication_matrix(const Element& a, bool left) {
  const Ring& ring = a.owner();
  auto basis = ring.basis();
  const std::size_t d = basis.size();
  QMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = ring.coordinates(left ? a * basis[j] : basis[j] * a);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace detail

/// Two-sided inverse by solving a x = 1 and x a = 1 simultaneously. Works in
/// any finite-dimensional ring; throws "not invertible" when no common
/// solution exists.
inline Element invert_via_linear_system(const Element& a) {
  const Ring& ring = a.owner();
  if (!ring.dimension()) throw Error(Errc::not_invertible, "not invertible");
  if (a.is_zero()) throw Error(Errc::not_invertible, "not invertible");
  QMatrix left = detail::multiplication_matrix(a, true);
  QMatrix right = detail::multiplication_matrix(a, false);
  const std::size_t d = left.rows();
  QMatrix stacked(2 * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      stacked(i, j) = left(i, j);
      stacked(d + i, j) = right(i, j);
    }
  auto one = ring.coordinates(ring.one());
  std::vector<Rational> rhs = one;
  rhs.insert(rhs.end(), one.begin(), one.end());
  auto x = solve(stacked, rhs);
  if (!x) throw Error(Errc::not_invertible, "not invertible");
  return ring.from_coordinates(*x);
}

/// Exact two-sided inverse. Uses the ring's own route when it has one
/// (conjugate over norm, monomial inversion) and linear algebra otherwise.
inline Element invert(const Element& a) {
  if (a.is_zero()) throw Error(Errc::not_invertible, "not invertible");
  const Ring& ring = a.owner();
  if (auto fast = ring.fast_inverse(a)) return *fast;
  if (ring.dimension()) return invert_via_linear_system(a);
  throw Error(Errc::not_invertible, "not invertible");
}

inline std::optional<Element> try_invert(const Element& a) {
  try {
    return invert(a);
  } catch (const Error& e) {
    if (e.code() != Errc::not_invertible) throw;
    return std::nullopt;
  }
}

/// Some y with a y = t, or nullopt when none exists. Finite-dimensional
/// rings are solved exactly; elsewhere only y = a^{-1} t is tried.
inline std::optional<Element> solve_left(const Element& a, const Element& t) {
  require_same_ring(a, t);
  const Ring& ring = a.owner();
  if (ring.dimension()) {
    auto y = solve(detail::multiplication_matrix(a, true), ring.coordinates(t));
    if (!y) return std::nullopt;
    return ring.from_coordinates(*y);
  }
  if (auto inv = try_invert(a)) {
    Element y = *inv * t;
    if (a * y == t) return y;
  }
  return std::nullopt;
}

/// Some y with y a = t, or nullopt.
inline std::optional<Element> solve_right(const Element& t, const Element& a) {
  require_same_ring(a, t);
  const Ring& ring = a.owner();
  if (ring.dimension()) {
    auto y = solve(detail::multiplication_matrix(a, false), ring.coordinates(t));
    if (!y) return std::nullopt;
    return ring.from_coordinates(*y);
  }
  if (auto inv = try_invert(a)) {
    Element y = t * *inv;
    if (y * a == t) return y;
  }
  return std::nullopt;
}

}  // namespace skewring

#endif
