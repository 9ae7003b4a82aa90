#ifndef SKEWRING_TEXT_HPP
#define SKEWRING_TEXT_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewring/poly.hpp"
#include "skewring/series.hpp"

namespace skewring {

// Grammar (whitespace insignificant):
//   sum    := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor* [var ["^" ["-"] INT]]
//   factor := rational | "[" rational ("," rational)* "]" | "(" sum ")" | name ["^" INT]
// A coordinate vector is read in the first ring of the coefficient tower with
// that dimension; names are basis labels or variables of inner polynomial
// rings, and glued names such as "iX" or "e1Y" are split into known names.
// Series append "+ O(X^N)", meaning coefficients up to X^{N-1} are known.

namespace detail {

struct Token {
  enum Kind { number, ident, symbol, end } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, co = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::number, std::string(src.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(src.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (std::string_view("+-^/[](),").find(c) != std::string_view::npos) {
      out.push_back({Token::symbol, std::string(1, c), l, co});
      advance(1);
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", l, co);
    }
  }
  out.push_back({Token::end, "", line, col});
  return out;
}

/// What a bare name can stand for inside a given ring.
struct NameMeaning {
  enum Kind { variable, label, inner_variable } kind;
  Element value;  // basis element or inner variable, lifted into the target coefficient ring
};

class Parser {
 public:
  Parser(std::string_view text, bool allow_truncation) : tokens_(tokenize(text)), allow_truncation_(allow_truncation) {}

  /// Parses a whole sum in `ring`. When a truncation marker is allowed and
  /// present, its N is stored in truncation().
  Element parse_all(const RingPtr& ring) {
    Element e = parse_sum(ring, true);
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

  const std::optional<std::int64_t>& truncation() const noexcept { return truncation_; }
  const Token& truncation_token() const noexcept { return truncation_token_; }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool is_symbol(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Token::symbol && peek(k).text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.column); }

  void expect(const char* s) {
    if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
    take();
  }

  std::int64_t parse_int() {
    if (peek().kind != Token::number) fail("expected an integer");
    const Token& t = take();
    if (t.text.size() > 15) fail_at("integer too large", t);
    return std::stoll(t.text);
  }

  std::int64_t parse_exponent() {
    bool negative = false;
    if (is_symbol("-")) {
      take();
      negative = true;
    }
    std::int64_t e = parse_int();
    return negative ? -e : e;
  }

  Rational parse_rational_token() {
    const Token& t = take();
    std::string text = t.text;
    if (is_symbol("/") && peek(1).kind == Token::number) {
      take();
      text += "/" + take().text;
    }
    try {
      return parse_rational(text);
    } catch (const Error& e) {
      fail_at(e.what(), t);
    }
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Token::number || t.kind == Token::ident) return !is_truncation_marker();
    return is_symbol("[") || is_symbol("(");
  }

  bool is_truncation_marker() const {
    return allow_truncation_ && depth_ == 0 && peek().kind == Token::ident && peek().text == "O" && is_symbol("(", 1);
  }

  Element parse_sum(const RingPtr& ring, bool top) {
    Element acc = ring->zero();
    bool first = true;
    while (true) {
      bool negative = false;
      if (is_symbol("+") || is_symbol("-")) {
        negative = take().text == "-";
      } else if (!first) {
        break;
      }
      if (top && is_truncation_marker()) {
        if (negative) fail("truncation marker must be added");
        parse_truncation(ring);
        break;
      }
      Element t = parse_term(ring);
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  void parse_truncation(const RingPtr& ring) {
    truncation_token_ = take();  // O
    expect("(");
    const auto* poly = dynamic_cast<const SkewPolyRing*>(ring.get());
    if (peek().kind != Token::ident || !poly || peek().text != poly->variable())
      fail("truncation marker must use the series variable");
    take();
    expect("^");
    truncation_ = parse_exponent();
    expect(")");
  }

  static RingPtr coefficient_ring_of(const RingPtr& ring) {
    if (ring->kind() == RingKind::polynomial) return ring->coefficient_ring();
    return ring;
  }

  /// Lifts x from a ring of the coefficient tower into `target` as a constant.
  static Element lift(const Element& x, const RingPtr& target) {
    if (same_ring(x.owner(), *target)) return x;
    if (target->kind() != RingKind::polynomial) throw Error(Errc::incompatible_rings, "incompatible rings");
    const auto* poly = static_cast<const SkewPolyRing*>(target.get());
    return poly->constant(lift(x, poly->coefficients()));
  }

  Element parse_vector(const RingPtr& coeff_ring) {
    const Token& open = peek();
    expect("[");
    std::vector<Rational> values;
    while (true) {
      bool negative = false;
      if (is_symbol("-")) {
        take();
        negative = true;
      }
      if (peek().kind != Token::number) fail("expected a rational");
      Rational v = parse_rational_token();
      values.push_back(negative ? Rational(-v) : v);
      if (is_symbol(",")) {
        take();
        continue;
      }
      break;
    }
    expect("]");
    for (RingPtr r = coeff_ring; r; r = r->kind() == RingKind::polynomial ? r->coefficient_ring() : nullptr) {
      auto d = r->dimension();
      if (d && *d == values.size()) return lift(r->from_coordinates(values), coeff_ring);
    }
    fail_at("coordinate vector of length " + std::to_string(values.size()) + " fits no coefficient ring", open);
  }

  /// Names known in the coefficient tower of `ring`, plus its own variable.
  static std::optional<NameMeaning> meaning(const std::string& name, const RingPtr& ring) {
    if (ring->kind() == RingKind::polynomial &&
        static_cast<const SkewPolyRing*>(ring.get())->variable() == name)
      return NameMeaning{NameMeaning::variable, Element{}};
    RingPtr coeff = coefficient_ring_of(ring);
    for (RingPtr r = coeff; r;) {
      if (r->kind() == RingKind::polynomial) {
        const auto* poly = static_cast<const SkewPolyRing*>(r.get());
        if (poly->variable() == name) return NameMeaning{NameMeaning::inner_variable, lift(poly->power(1), coeff)};
        r = poly->coefficients();
        continue;
      }
      auto labels = r->basis_labels();
      if (r->dimension())
        for (std::size_t p = 0; p < labels.size(); ++p)
          if (labels[p] == name) return NameMeaning{NameMeaning::label, lift(r->basis()[p], coeff)};
      break;
    }
    return std::nullopt;
  }

  /// Splits an identifier into known names, preferring longer prefixes.
  static std::optional<std::vector<std::string>> split(const std::string& ident, const RingPtr& ring) {
    if (meaning(ident, ring)) return std::vector<std::string>{ident};
    for (std::size_t k = ident.size() - 1; k >= 1; --k) {
      std::string head = ident.substr(0, k);
      if (!meaning(head, ring)) continue;
      if (auto rest = split(ident.substr(k), ring)) {
        rest->insert(rest->begin(), head);
        return rest;
      }
    }
    return std::nullopt;
  }

  Element parse_term(const RingPtr& ring) {
    RingPtr coeff_ring = coefficient_ring_of(ring);
    const bool polynomial = ring->kind() == RingKind::polynomial;
    std::optional<Element> coeff;
    std::optional<std::int64_t> exponent;
    const Token& start = peek();
    auto times = [&](const Element& x) { coeff = coeff ? *coeff * x : x; };
    while (starts_factor()) {
      if (exponent) fail("the variable must come last in a term");
      const Token& t = peek();
      if (t.kind == Token::number) {
        times(scalar(*coeff_ring, parse_rational_token()));
      } else if (is_symbol("[")) {
        times(parse_vector(coeff_ring));
      } else if (is_symbol("(")) {
        take();
        ++depth_;
        Element inner = parse_sum(coeff_ring, false);
        --depth_;
        expect(")");
        times(inner);
      } else {
        const Token& id = take();
        auto names = split(id.text, ring);
        if (!names) fail_at("unknown name '" + id.text + "'", id);
        for (std::size_t k = 0; k < names->size(); ++k) {
          auto m = *meaning((*names)[k], ring);
          const bool last = k + 1 == names->size();
          std::int64_t power = 1;
          if (last && is_symbol("^")) {
            const Token& caret = take();
            power = parse_exponent();
            if (power < 0 && m.kind != NameMeaning::variable && m.kind != NameMeaning::inner_variable)
              fail_at("negative power of a coefficient", caret);
          }
          if (m.kind == NameMeaning::variable) {
            if (!last) fail_at("the variable must come last in a term", id);
            exponent = power;
            continue;
          }
          if (m.kind == NameMeaning::inner_variable) {
            times(inner_power(m.value, power, id));
            continue;
          }
          if (power < 0) fail_at("negative power of a coefficient", id);
          Element x = coeff_ring->one();
          for (std::int64_t p = 0; p < power; ++p) x = x * m.value;
          times(x);
        }
      }
    }
    if (!coeff && !exponent) fail_at("expected a term", start);
    Element c = coeff ? *coeff : coeff_ring->one();
    if (!polynomial) return c;
    const auto* poly = static_cast<const SkewPolyRing*>(ring.get());
    std::int64_t e = exponent.value_or(0);
    if (e < 0 && poly->shape() == Shape::ore) fail_at("negative exponent", start);
    return poly->monomial(c, e);
  }

  /// Y^p for an inner variable Y, lifted into the coefficient ring.
  static Element inner_power(const Element& y, std::int64_t p, const Token& at) {
    // y is the lifted inner variable; rebuild its power inside the owning ring
    std::vector<const SkewPolyRing*> chain;
    Element walk = y;
    while (true) {
      const auto* poly = static_cast<const SkewPolyRing*>(walk.ring().get());
      chain.push_back(poly);
      const Term& t = walk.terms().front();
      if (t.exponent == 1) break;
      walk = t.coeff;
    }
    const SkewPolyRing* owner = chain.back();
    if (p < 0 && owner->shape() == Shape::ore) fail_at("negative exponent", at);
    Element x = owner->power(p);
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) x = (*it)->constant(x);
    return x;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool allow_truncation_;
  int depth_ = 0;
  std::optional<std::int64_t> truncation_;
  Token truncation_token_{Token::end, "", 0, 0};
};

}  // namespace detail

/// Parses an element of `ring` (a polynomial ring or a coefficient ring).
inline Element parse_element(std::string_view text, const RingPtr& ring) {
  detail::Parser p(text, false);
  return p.parse_all(ring);
}

/// Parses "... + O(X^N)"; the result has precision N - 1.
inline TruncatedSeries parse_series(std::string_view text, const PolyRingPtr& ring, SeriesKind kind) {
  detail::Parser p(text, true);
  Element poly = p.parse_all(ring);
  if (!p.truncation()) {
    auto tokens = detail::tokenize(text);
    const auto& last = tokens.back();
    throw ParseError("missing O(" + ring->variable() + "^N) truncation marker", last.line, last.column);
  }
  const std::int64_t precision = *p.truncation() - 1;
  const auto& at = p.truncation_token();
  if (!poly.is_zero() && degree(poly) > precision)
    throw ParseError("term beyond the truncation order", at.line, at.column);
  if (kind == SeriesKind::power && !poly.is_zero() && order(poly) < 0)
    throw ParseError("negative exponent", at.line, at.column);
  return TruncatedSeries::embed(poly, kind, precision);
}

/// The canonical text of an element; parse_element inverts it.
inline std::string format_element(const Element& x) { return x.str(); }

}  // namespace skewring

#endif
