#include <gtest/gtest.h>

#include "skewring/rational.hpp"

using namespace skewring;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_EQ(format_rational(parse_rational("-6/8")), "-3/4");
  EXPECT_EQ(format_rational(parse_rational("10/5")), "2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
}

TEST(Rational, BigValuesStayExact) {
  Rational x = parse_rational("123456789012345678901234567890/7");
  EXPECT_EQ(format_rational(x * 7), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "a", "1.5", "2/-3"}) {
    SCOPED_TRACE(bad);
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::parse_error);
    }
  }
}

TEST(Rational, ShortcutProductMatchesGeneralProduct) {
  const Rational values[] = {Rational(1), Rational(-1), Rational(0), Rational(2, 3), Rational(-7, 5)};
  for (const auto& a : values)
    for (const auto& b : values) EXPECT_EQ(mul(a, b), a * b);
}

TEST(Rational, FormatParseRoundTrip) {
  for (int p = -12; p <= 12; ++p)
    for (int q = 1; q <= 7; ++q) {
      Rational r(p, q);
      EXPECT_EQ(parse_rational(format_rational(r)), r);
    }
}
