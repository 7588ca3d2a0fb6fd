#include "rdec/scaled_decimal.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rdec;

namespace {

ScaledDecimal sd(const char* text) { return ScaledDecimal::parse(text); }

ScaledDecimal random_scaled(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> mantissa(-10'000'000, 10'000'000);
  std::uniform_int_distribution<std::size_t> scale(0, 9);
  return ScaledDecimal(mantissa(rng), scale(rng));
}

}  // namespace

TEST_CASE("terminating addition") {
  CHECK(sd("(-4).88") + sd("5.6") == sd("2.48"));
  CHECK(sd("-3.12") + sd("5.6") == sd("2.48"));

  const ScaledDecimal x = sd("7.125");
  CHECK(x + ScaledDecimal(0) == x);

  const ScaledDecimal s = sd("1.414") + ScaledDecimal::ulp(3);
  CHECK(s == sd("1.415"));
  CHECK(s.scale() == 3);
  CHECK(s.mantissa() == 1415);
}

TEST_CASE("terminating multiplication") {
  CHECK(sd("1.2") * sd("2.6") == sd("3.12"));
  const ScaledDecimal sq = sd("1.4") * sd("1.4");
  CHECK(sq == sd("1.96"));
  CHECK(sq.scale() == 2);
  const ScaledDecimal a = sd("-0.0375");
  CHECK(a * ScaledDecimal(1) == a);
}

TEST_CASE("terminating negation and complement form") {
  const ScaledDecimal n = -sd("3.12");
  CHECK(n == sd("-3.12"));
  CHECK(to_complement_string(n) == "(-4).88");
  CHECK(-ScaledDecimal(0) == ScaledDecimal(0));
  CHECK(-sd("-2.6") == sd("2.6"));
  CHECK(sd("(-3).4") == sd("-2.6"));
}

TEST_CASE("comparison crosses scales") {
  CHECK((sd("1.96") <=> ScaledDecimal(2)) < 0);
  CHECK((sd("2.48") <=> sd("2.480")) == 0);
  const ScaledDecimal lo = sd("1.414");
  const ScaledDecimal hi = sd("1.415");
  CHECK(lo * lo < ScaledDecimal(2));
  CHECK(hi * hi == sd("2.002225"));
  CHECK(hi * hi > ScaledDecimal(2));
}

TEST_CASE("truncation floors toward minus infinity") {
  CHECK(sd("1.96").truncate(0) == ScaledDecimal(1));
  const ScaledDecimal t = sd("1.0100").truncate(3);
  CHECK(t == sd("1.010"));
  CHECK(t.scale() == 3);
  const ScaledDecimal neg = sd("-3.12").truncate(1);
  CHECK(neg == sd("-3.2"));
  CHECK(to_complement_string(neg) == "(-4).8");
  CHECK(sd("-3.12").integer_part() == -4);
  // Truncating beyond the scale only pads.
  CHECK(sd("0.5").truncate(4) == sd("0.5"));
}

TEST_CASE("digit extraction") {
  CHECK(sd("1.96").digit(1).value() == 9);
  CHECK(sd("1.0100").digit(2).value() == 1);
  for (std::size_t k = 1; k < 10; ++k) CHECK(ScaledDecimal(0).digit(k).value() == 0);
  CHECK(sd("-3.12").digit(1).value() == 8);
  CHECK(sd("-3.12").digit(2).value() == 8);
  CHECK(sd("-3.12").digit(3).value() == 0);
  CHECK_THROWS_AS(sd("1.5").digit(0), std::invalid_argument);
  CHECK_THROWS_AS(Digit(10), std::out_of_range);
}

TEST_CASE("format in both display modes") {
  const ScaledDecimal v = sd("-3.12");
  const std::string digits = v.fraction_digits(2);
  CHECK(format(v.integer_part(), digits, 2, Display::complement) == "(-4).88");
  CHECK(format(v.integer_part(), digits, 2, Display::signed_magnitude) == "-3.12");
  CHECK(format(0, "000", 3, Display::complement) == "0.000");
  CHECK(format(0, "000", 3, Display::signed_magnitude) == "0.000");
  CHECK(format(-1, "222", 3, Display::signed_magnitude) == "-0.778");
  CHECK(format(7, "", 0, Display::complement) == "7");
  CHECK(to_signed_string(sd("-0.05")) == "-0.05");
  CHECK_THROWS_AS(format(0, "1", 2, Display::complement), std::invalid_argument);
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "-", ".5", "1.", "(-4)", "(-4).", "1.2.3", "abc", "(1", "1e5"}) {
    CAPTURE(bad);
    if (std::string(bad) == "(-4)") {
      CHECK(ScaledDecimal::parse(bad) == ScaledDecimal(-4));
      continue;
    }
    CHECK_THROWS_AS(ScaledDecimal::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("property: floor and digit coherence, truncation bracket") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const ScaledDecimal a = random_scaled(rng);
    for (std::size_t k = 1; k <= 12; ++k) {
      const Digit d = a.digit(k);
      REQUIRE(a.truncate(k) == a.truncate(k - 1) + ScaledDecimal(d.value(), 0) * ScaledDecimal::ulp(k));
      REQUIRE(a.truncate(k) <= a);
      REQUIRE(a < a.truncate(k) + ScaledDecimal::ulp(k));
    }
  }
}

TEST_CASE("property: arithmetic agrees with exact rationals") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10'000; ++i) {
    const ScaledDecimal a = random_scaled(rng);
    const ScaledDecimal b = random_scaled(rng);
    const Rational ra = test::exact(a);
    const Rational rb = test::exact(b);
    REQUIRE(test::exact(a + b) == ra + rb);
    REQUIRE(test::exact(a * b) == ra * rb);
    REQUIRE(test::exact(-a) == -ra);
    REQUIRE(((a <=> b) == (ra <=> rb)));
  }
}

TEST_CASE("property: complement rendering parses back to the same value") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const ScaledDecimal a = random_scaled(rng);
    REQUIRE(ScaledDecimal::parse(to_complement_string(a)) == a);
    REQUIRE(ScaledDecimal::parse(to_signed_string(a)) == a);
  }
}
