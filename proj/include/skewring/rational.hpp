#ifndef SKEWRING_RATIONAL_HPP
#define SKEWRING_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "skewring/error.hpp"

namespace skewring {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" (q > 0). Throws Error{parse_error} otherwise.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!detail::all_digits(num) || (slash != std::string_view::npos && !detail::all_digits(den)))
    throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer{std::string(den)};
  if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

/// "p/q" or "p" when the denominator is one.
inline std::string format_rational(const Rational& r) {
  const auto& d = boost::multiprecision::denominator(r);
  if (d == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + d.str();
}

/// a * b, skipping the general product when either factor is +-1 (the
/// common case for structure constants and twist coefficients).
inline Rational mul(const Rational& a, const Rational& b) {
  if (mpq_cmp_si(a.backend().data(), 1, 1) == 0) return b;
  if (mpq_cmp_si(b.backend().data(), 1, 1) == 0) return a;
  return a * b;
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace skewring

#endif
