#ifndef SKEWRING_ERROR_HPP
#define SKEWRING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewring {

/// Failure categories raised by the library. Messages are stable; tests and
/// the CLI match on the code, humans read the message.
enum class Errc {
  incompatible_rings,
  not_invertible,
  not_star_algebra,
  requires_associative,
  invalid_algebra,
  not_bijective,
  requires_unit,
  does_not_respect_one,
  inverse_unavailable,
  cannot_decide,
  order_unsupported,
  zero_polynomial,
  not_a_unit,
  order_undefined,
  inverse_not_representable,
  finite_order_fails,
  requires_commutative_division,
  requires_division,
  non_commuting,
  invalid_config,
  parse_error,
  unknown_suite,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in the polynomial/series text format, 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(Errc::parse_error, message + " at line " + std::to_string(line) + ", column " +
                                     std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace skewring

#endif
