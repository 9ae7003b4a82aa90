#ifndef SKEWRING_SERIES_HPP
#define SKEWRING_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewring/inverse.hpp"
#include "skewring/poly.hpp"

namespace skewring {

enum class SeriesKind { power, laurent };

/// sum_{k = start}^{N} c_k X^k + O(X^{N+1}) in R[[X; sigma]] or R((X; sigma)),
/// with (r X^m)(s X^n) = (r sigma^m(s)) X^{m+n}. The twist is read from a
/// skew polynomial ring without delta, which also fixes the variable name.
///
/// Canonical form: `start` is the order (no leading zero coefficients); the
/// zero series has no coefficients and start = N + 1.
class TruncatedSeries {
 public:
  TruncatedSeries(PolyRingPtr ring, SeriesKind kind, std::int64_t start, std::int64_t precision,
                  std::vector<Element> coeffs)
      : ring_(std::move(ring)), kind_(kind), start_(start), precision_(precision), coeffs_(std::move(coeffs)) {
    if (ring_->delta()) throw Error(Errc::invalid_config, "series rings take no delta");
    if (kind_ == SeriesKind::laurent && ring_->shape() != Shape::laurent)
      throw Error(Errc::invalid_config, "Laurent series need an invertible twist (laurent shape)");
    if (start_ + static_cast<std::int64_t>(coeffs_.size()) - 1 > precision_)
      throw Error(Errc::invalid_argument, "coefficients beyond the precision");
    for (const auto& c : coeffs_) require_ring(*ring_->coefficients(), c);
    canonicalize();
  }

  /// The series of a polynomial, truncated at `precision`.
  static TruncatedSeries embed(const Element& p, SeriesKind kind, std::int64_t precision) {
    auto ring = as_poly_ring(p.ring());
    std::int64_t start = p.is_zero() ? 0 : skewring::order(p);
    if (kind == SeriesKind::power) start = std::max<std::int64_t>(start, 0);
    std::vector<Element> coeffs;
    for (std::int64_t e = start; e <= precision; ++e) coeffs.push_back(skewring::coefficient(p, e));
    return TruncatedSeries(ring, kind, std::min(start, precision + 1), precision, std::move(coeffs));
  }

  static TruncatedSeries zero(PolyRingPtr ring, SeriesKind kind, std::int64_t precision) {
    return TruncatedSeries(std::move(ring), kind, precision + 1, precision, {});
  }

  static TruncatedSeries one(PolyRingPtr ring, SeriesKind kind, std::int64_t precision) {
    Element u = ring->coefficients()->one();
    return TruncatedSeries(std::move(ring), kind, 0, precision, {u});
  }

  const PolyRingPtr& ring() const noexcept { return ring_; }
  SeriesKind kind() const noexcept { return kind_; }
  std::int64_t start() const noexcept { return start_; }
  std::int64_t precision() const noexcept { return precision_; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of X^e; zero outside the stored window. Exponents above the
  /// precision are unknown.
  Element coefficient(std::int64_t e) const {
    if (e > precision_) throw Error(Errc::invalid_argument, "coefficient beyond the precision");
    if (e < start_ || e >= start_ + static_cast<std::int64_t>(coeffs_.size()))
      return ring_->coefficients()->zero();
    return coeffs_[static_cast<std::size_t>(e - start_)];
  }

  /// Least exponent with a nonzero coefficient, or precision + 1 for zero.
  std::int64_t valuation() const noexcept { return start_; }

  /// The known part as a polynomial.
  Element truncation() const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      terms.push_back({start_ + static_cast<std::int64_t>(k), coeffs_[k]});
    return ring_->from_terms(std::move(terms));
  }

  /// Same series at a lower precision.
  TruncatedSeries truncated(std::int64_t precision) const {
    if (precision > precision_) throw Error(Errc::invalid_argument, "cannot raise the precision");
    std::vector<Element> c;
    for (std::int64_t e = start_; e <= precision && e < start_ + static_cast<std::int64_t>(coeffs_.size()); ++e)
      c.push_back(coeffs_[static_cast<std::size_t>(e - start_)]);
    return TruncatedSeries(ring_, kind_, std::min(start_, precision + 1), precision, std::move(c));
  }

  std::string str() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    if (a.precision_ != b.precision_ || a.start_ != b.start_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

  void require_compatible(const TruncatedSeries& other) const {
    if (kind_ != other.kind_ || !same_ring(*ring_, *other.ring_))
      throw Error(Errc::incompatible_rings, "incompatible rings");
  }

 private:
  void canonicalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      start_ = precision_ + 1;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<std::int64_t>(lead);
    while (coeffs_.back().is_zero()) coeffs_.pop_back();
    if (kind_ == SeriesKind::power && start_ < 0) throw Error(Errc::invalid_argument, "negative exponent");
  }

  PolyRingPtr ring_;
  SeriesKind kind_;
  std::int64_t start_;
  std::int64_t precision_;
  std::vector<Element> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

/// Ascending exponents followed by the truncation marker O(X^{N+1}).
inline std::string TruncatedSeries::str() const {
  std::string out;
  const std::string& x = ring_->variable();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const std::int64_t e = start_ + static_cast<std::int64_t>(k);
    auto [coeff, negative] = detail::coefficient_text(coeffs_[k], e != 0);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff;
    if (e != 0) out += x + (e == 1 ? "" : "^" + std::to_string(e));
  }
  if (out.empty()) out = "0";
  return out + " + O(" + x + "^" + std::to_string(precision_ + 1) + ")";
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  const std::int64_t n = std::min(a.precision(), b.precision());
  const std::int64_t lo = std::min(a.start(), b.start());
  std::vector<Element> c;
  for (std::int64_t e = std::min(lo, n + 1); e <= n; ++e) c.push_back(a.coefficient(e) + b.coefficient(e));
  return TruncatedSeries(a.ring(), a.kind(), std::min(lo, n + 1), n, std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Element> c;
  for (const auto& x : a.coeffs()) c.push_back(-x);
  return TruncatedSeries(a.ring(), a.kind(), a.start(), a.precision(), std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

/// Twisted Cauchy product. Known up to min(N_a + ord b, N_b + ord a), where
/// the order of a zero series counts as its precision + 1.
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  const std::int64_t n = std::min(a.precision() + b.valuation(), b.precision() + a.valuation());
  const TwistMap& sigma = a.ring()->sigma();
  const Ring& coeffs = *a.ring()->coefficients();
  const std::int64_t lo = a.valuation() + b.valuation();
  std::vector<Element> c;
  for (std::int64_t e = lo; e <= n; ++e) c.push_back(coeffs.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::int64_t ei = a.start() + static_cast<std::int64_t>(i);
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      const std::int64_t e = ei + b.start() + static_cast<std::int64_t>(j);
      if (e > n) break;
      if (b.coeffs()[j].is_zero()) continue;
      c[static_cast<std::size_t>(e - lo)] += a.coeffs()[i] * apply_power(sigma, ei, b.coeffs()[j]);
    }
  }
  if (lo > n) return TruncatedSeries::zero(a.ring(), a.kind(), n);
  return TruncatedSeries(a.ring(), a.kind(), lo, n, std::move(c));
}

struct SeriesOrder {
  std::int64_t order;
  Element leading;
};

inline SeriesOrder series_order_leading(const TruncatedSeries& a) {
  if (a.is_zero()) throw Error(Errc::order_undefined, "order undefined at this precision");
  return {a.start(), a.coeffs().front()};
}

/// b with a b = 1 up to the precision N - 2 ord(a). Solves, one exponent at a
/// time, a_v sigma^v(b_{n-v}) = [n = 0] - sum_{i > v} a_i sigma^i(b_{n-i}).
inline TruncatedSeries series_right_inverse(const TruncatedSeries& a) {
  if (a.is_zero()) throw Error(Errc::not_a_unit, "series is not a unit");
  const std::int64_t v = a.valuation();
  if (a.kind() == SeriesKind::power && v != 0) throw Error(Errc::not_a_unit, "series is not a unit");
  const std::int64_t n_out = a.precision() - 2 * v;
  if (n_out < -v) throw Error(Errc::order_undefined, "order undefined at this precision");
  const TwistMap& sigma = a.ring()->sigma();
  const Ring& coeffs = *a.ring()->coefficients();
  const Element lead = a.coeffs().front();
  if (!try_invert(lead)) throw Error(Errc::not_a_unit, "series is not a unit");
  std::vector<Element> b;  // b[k] = coefficient of X^{k - v}
  for (std::int64_t n = 0; n - v <= n_out; ++n) {
    Element rhs = n == 0 ? coeffs.one() : coeffs.zero();
    for (std::int64_t i = v + 1; i <= v + n; ++i) {
      const Element ai = a.coefficient(i);
      if (ai.is_zero()) continue;
      rhs -= ai * apply_power(sigma, i, b[static_cast<std::size_t>(n - i + v)]);
    }
    auto y = solve_left(lead, rhs);
    if (!y) throw Error(Errc::not_a_unit, "series is not a unit");
    b.push_back(apply_power(sigma, -v, *y));
  }
  return TruncatedSeries(a.ring(), a.kind(), -v, n_out, std::move(b));
}

/// c with c a = 1: c_n sigma^n(a_v) = [n + v = 0] - sum_{j < n} c_j sigma^j(a_{n+v-j}).
inline TruncatedSeries series_left_inverse(const TruncatedSeries& a) {
  if (a.is_zero()) throw Error(Errc::not_a_unit, "series is not a unit");
  const std::int64_t v = a.valuation();
  if (a.kind() == SeriesKind::power && v != 0) throw Error(Errc::not_a_unit, "series is not a unit");
  const std::int64_t n_out = a.precision() - 2 * v;
  if (n_out < -v) throw Error(Errc::order_undefined, "order undefined at this precision");
  const TwistMap& sigma = a.ring()->sigma();
  const Ring& coeffs = *a.ring()->coefficients();
  const Element lead = a.coeffs().front();
  if (!try_invert(lead)) throw Error(Errc::not_a_unit, "series is not a unit");
  std::vector<Element> c;  // c[k] = coefficient of X^{k - v}
  for (std::int64_t n = -v; n <= n_out; ++n) {
    Element rhs = n + v == 0 ? coeffs.one() : coeffs.zero();
    for (std::int64_t j = -v; j < n; ++j) {
      const Element aj = a.coefficient(n + v - j);
      if (aj.is_zero()) continue;
      rhs -= c[static_cast<std::size_t>(j + v)] * apply_power(sigma, j, aj);
    }
    auto y = solve_right(rhs, apply_power(sigma, n, lead));
    if (!y) throw Error(Errc::not_a_unit, "series is not a unit");
    c.push_back(*y);
  }
  return TruncatedSeries(a.ring(), a.kind(), -v, n_out, std::move(c));
}

/// The right inverse: series_invert(a) = b with a b = 1 up to precision.
/// In a non-associative series ring the left inverse may differ; see
/// series_two_sided_inverse.
inline TruncatedSeries series_invert(const TruncatedSeries& a) { return series_right_inverse(a); }

/// Solves both recurrences and returns the common inverse. Throws "series is
/// not a unit" when they disagree within the precision.
inline TruncatedSeries series_two_sided_inverse(const TruncatedSeries& a) {
  TruncatedSeries right = series_right_inverse(a);
  TruncatedSeries left = series_left_inverse(a);
  if (!(right == left)) throw Error(Errc::not_a_unit, "series is not a unit");
  return right;
}

}  // namespace skewring

#endif
