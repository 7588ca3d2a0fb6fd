#include "rdec/product.hpp"
#include "rdec/real_decimal.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rdec;

namespace {

const std::string root2_digits = "41421356237309504880168872420969807856967187537694";

Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }
RealDecimal lit(long p, long d = 1) { return RealDecimal::from_rational(q(p, d)); }

test::Expansion expansion(const RealDecimal& x, std::size_t n) {
  const DigitPrefix p = x.prefix(n);
  return {p.integer_part, p.digits};
}

RealDecimal opaque(const RealDecimal& x) {
  return RealDecimal::from_digit_source(x.integer_part(),
                                        [x](std::size_t k) { return x.digit(k).value(); });
}

Rational ulp(std::size_t k) { return Rational(mpz_class(1), pow10(k)); }

}  // namespace

TEST_CASE("scale selection") {
  const RealDecimal r2 = sqrt(Rational(2));
  CHECK(choose_scale(r2, r2).s == 1);
  CHECK(choose_scale(lit(0), lit(0)).s == 1);
  // 50 + 60 + 2 = 112 needs 10^3.
  CHECK(choose_scale(BigInt(50), BigInt(60)).s == 3);
  CHECK(choose_scale(BigInt(4), BigInt(4)).s == 1);
  CHECK(choose_scale(BigInt(4), BigInt(5)).s == 2);
  CHECK_THROWS_AS(choose_scale(lit(-1, 2), lit(1)), std::invalid_argument);
  CHECK_THROWS_AS(multiply_nonnegative(lit(50), lit(60), ScaleParam{2}), std::invalid_argument);
  CHECK_THROWS_AS(multiply_nonnegative(lit(-1), lit(1), ScaleParam{5}), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
  const RealDecimal r2 = sqrt(Rational(2));
  const RealDecimal two = mul(r2, r2);
  CHECK(expansion(two, 30) == test::Expansion{2, std::string(30, '0')});
  REQUIRE(two.case_one_index());
  CHECK(*two.case_one_index() == 0);
  CHECK(*two.witness().as_rational() == Rational(2));

  const RealDecimal p = mul(lit(6, 5), RealDecimal::from_scaled(ScaledDecimal::parse("(-3).4")));
  CHECK(expansion(p, 4) == test::Expansion{-4, "8800"});
  CHECK(expansion(add(p, lit(28, 5)), 10) == test::Expansion{2, "4800000000"});

  CHECK(expansion(mul(lit(1, 3), lit(1, 3)), 40) == test::oracle_expansion(q(1, 9), 40));
  CHECK(expansion(mul(lit(0), r2), 20) == test::Expansion{0, std::string(20, '0')});
  CHECK(expansion(mul(lit(-7, 9), lit(-9, 7)), 20) == test::Expansion{1, std::string(20, '0')});
  CHECK(expansion(mul(lit(1), r2), 50) == test::Expansion{1, root2_digits});
}

TEST_CASE("reciprocal examples") {
  CHECK(expansion(recip(lit(2)), 10) == test::Expansion{0, "5000000000"});
  CHECK(expansion(recip(lit(3)), 40) == test::Expansion{0, std::string(40, '3')});
  CHECK(expansion(recip(lit(-4)), 10) == test::oracle_expansion(q(-1, 4), 10));
  CHECK(expansion(recip(lit(1, 1'000'000)), 5) == test::Expansion{1'000'000, "00000"});

  const RealDecimal inv = recip(sqrt(Rational(2)));
  CHECK(inv.digits(8) == "70710678");
  REQUIRE(inv.witness().as_sqrt());
  CHECK(inv.witness().as_sqrt()->radicand == q(1, 2));
  for (std::size_t k = 1; k <= 60; ++k) {
    const Rational yk = test::exact(inv.truncate(k));
    const Rational yk1 = yk + ulp(k);
    REQUIRE(yk * yk <= q(1, 2));
    REQUIRE(q(1, 2) < yk1 * yk1);
  }

  CHECK_THROWS_AS(recip(lit(0)), DivisionByZero);
  CHECK_THROWS_AS(div(lit(1), lit(0)), DivisionByZero);
}

TEST_CASE("reciprocal without a witness certifies from intervals") {
  CHECK(expansion(recip(opaque(lit(3))), 40) == test::Expansion{0, std::string(40, '3')});
  CHECK(expansion(recip(opaque(lit(7, 3))), 60) == test::oracle_expansion(q(3, 7), 60));
  CHECK(expansion(recip(opaque(lit(-7, 3))), 60) == test::oracle_expansion(q(-3, 7), 60));
  CHECK(recip(opaque(sqrt(Rational(2)))).digits(30) == recip(sqrt(Rational(2))).digits(30));

  // x y_k = 1 exactly: x_n + 10^{-n} never certifies the left inequality.
  CHECK_THROWS_AS(recip(opaque(lit(2)), Fuel(200)).digits(3), FuelExhausted);
  // Zero cannot be excluded.
  const RealDecimal zero = RealDecimal::from_digit_source(0, [](std::size_t) { return 0; });
  CHECK_THROWS_AS(recip(zero, Fuel(200)).integer_part(), FuelExhausted);
}

TEST_CASE("division examples") {
  const RealDecimal r = div(lit(100, 99), lit(7, 9));
  CHECK(expansion(r, 60) == test::oracle_expansion(q(100, 77), 60));
  CHECK(r.digits(6) == "298701");

  const RealDecimal r3 = sqrt(Rational(3));
  CHECK(expansion(div(r3, lit(1)), 60) == expansion(r3, 60));

  const RealDecimal r2 = div(lit(2), sqrt(Rational(2)));
  CHECK(expansion(r2, 50) == test::Expansion{1, root2_digits});
  REQUIRE(r2.witness().as_sqrt());
  CHECK(r2.witness().as_sqrt()->radicand == Rational(2));
}

TEST_CASE("square root examples") {
  const RealDecimal r2 = sqrt(Rational(2));
  CHECK(expansion(r2, 50) == test::Expansion{1, root2_digits});

  const RealDecimal four = sqrt(Rational(4));
  CHECK(expansion(four, 20) == test::Expansion{2, std::string(20, '0')});
  CHECK(*four.witness().as_rational() == Rational(2));
  CHECK(four.known_terminating());

  CHECK(expansion(sqrt(q(1, 4)), 10) == test::Expansion{0, "5000000000"});
  CHECK(expansion(sqrt(q(1, 9)), 40) == test::Expansion{0, std::string(40, '3')});
  CHECK(expansion(sqrt(Rational(0)), 10) == test::Expansion{0, std::string(10, '0')});
  CHECK_THROWS_AS(sqrt(Rational(-2)), NegativeRadicand);
}

TEST_CASE("property: product truncations fixed at non-nine positions stay fixed") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const RealDecimal x = RealDecimal::from_rational(test::random_nonnegative_rational(rng, 10'000, 999));
    const RealDecimal y = i % 2 ? sqrt(test::random_nonsquare(rng))
                                : RealDecimal::from_rational(test::random_nonnegative_rational(rng, 10'000, 999));
    const std::size_t s = choose_scale(x, y).s;
    for (std::size_t k = 1; k <= 30; ++k) {
      const ScaledDecimal pk = x.truncate(k + s) * y.truncate(k + s);
      if (pk.digit(k).value() == 9) continue;
      const ScaledDecimal fixed = pk.truncate(k - 1);
      for (std::size_t n = k + s + 1; n <= k + s + 12; ++n) {
        REQUIRE((x.truncate(n) * y.truncate(n)).truncate(k - 1) == fixed);
      }
    }
  }
}

TEST_CASE("property: terminating products do not depend on the run start or the scale") {
  std::mt19937_64 rng(42);
  int fired = 0;
  for (int i = 0; i < 200; ++i) {
    const Rational a = test::random_nonnegative_rational(rng, 10'000, 999);
    if (a.is_zero() || a.is_terminating()) continue;
    const Rational t = test::exact(test::oracle_truncation(test::random_nonnegative_rational(rng, 100, 7), 2));
    if (t.is_zero()) continue;
    const Rational b = t / a;  // a b terminates
    const RealDecimal x = RealDecimal::from_rational(a);
    const RealDecimal y = RealDecimal::from_rational(b);
    const std::size_t s = choose_scale(x, y).s;

    const RealDecimal p = multiply_nonnegative(x, y, ScaleParam{s});
    const test::Expansion expected = test::oracle_expansion(t, 60);
    REQUIRE(expansion(p, 60) == expected);
    REQUIRE(expansion(multiply_nonnegative(x, y, ScaleParam{s + 1}), 60) == expected);
    REQUIRE(expansion(multiply_nonnegative(x, y, ScaleParam{s + 2}), 60) == expected);

    if (!p.case_one_index()) continue;
    ++fired;
    const std::size_t m = *p.case_one_index();
    const ScaledDecimal base = (x.truncate(m + s) * y.truncate(m + s)).truncate(m);
    REQUIRE(test::exact(base + ScaledDecimal::ulp(m)) == t);
    for (std::size_t n = m + 1; n <= m + 30; ++n) {
      REQUIRE((x.truncate(n + s) * y.truncate(n + s)).truncate(m) == base);
    }
    for (std::size_t extra : {1, 2}) {
      const RealDecimal wider = multiply_nonnegative(x, y, ScaleParam{s + extra});
      wider.digits(m + 5);
      REQUIRE(wider.case_one_index());
      const std::size_t mw = *wider.case_one_index();
      const ScaledDecimal candidate =
          (x.truncate(mw + s + extra) * y.truncate(mw + s + extra)).truncate(mw) + ScaledDecimal::ulp(mw);
      REQUIRE(test::exact(candidate) == t);
    }
  }
  CHECK(fired > 50);
}

TEST_CASE("brute force: |xy - x_k y_k| stays below (10^s + 1) 10^{-k}") {
  // Validates the constant before it is used as a bound on emitted digits.
  std::mt19937_64 rng(43);
  Rational worst(0);
  for (int i = 0; i < 10'000; ++i) {
    const Rational a = test::random_nonnegative_rational(rng, 1'000'000, 1'000);
    const Rational b = test::random_nonnegative_rational(rng, 1'000'000, 1'000);
    const std::size_t k = static_cast<std::size_t>(i % 20);
    const std::size_t s = choose_scale(rational_integer_part(a), rational_integer_part(b)).s;
    const Rational gap = (a * b - test::exact(test::oracle_truncation(a, k) * test::oracle_truncation(b, k))) /
                         ulp(k) / Rational(pow10(s));
    REQUIRE(gap >= Rational(0));
    worst = std::max(worst, gap);
  }
  MESSAGE("largest (xy - x_k y_k) / (10^{s-k}) observed: " << worst);
  CHECK(worst < Rational(1));
}

TEST_CASE("property: product truncations stay within (10^s + 1) ulps") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 300; ++i) {
    const RealDecimal x = i % 3 == 0 ? sqrt(test::random_nonsquare(rng))
                                     : RealDecimal::from_rational(test::random_nonnegative_rational(rng));
    const RealDecimal y = RealDecimal::from_rational(test::random_nonnegative_rational(rng));
    const RealDecimal p = mul(x, y);
    const ScaledDecimal m = ScaledDecimal(pow10(choose_scale(x, y).s) + 1, 0);
    for (std::size_t k = 0; k <= 50; ++k) {
      const ScaledDecimal diff = p.truncate(k) - x.truncate(k) * y.truncate(k);
      const ScaledDecimal bound = m * ScaledDecimal::ulp(k);
      REQUIRE(diff <= bound);
      REQUIRE(-diff <= bound);
    }
  }
}

TEST_CASE("property: reciprocal bracket and convergence") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 300; ++i) {
    Rational a = test::random_nonnegative_rational(rng);
    if (a.is_zero()) a = Rational(1);
    const RealDecimal x = RealDecimal::from_rational(a);
    const RealDecimal y = recip(x);
    const Rational a0(rational_integer_part(a));
    const Rational b0(y.integer_part());
    for (std::size_t k = 0; k <= 50; ++k) {
      const Rational yk = test::exact(y.truncate(k));
      REQUIRE(a * yk <= Rational(1));
      REQUIRE(Rational(1) < a * (yk + ulp(k)));
      const Rational xk = test::exact(x.truncate(k));
      REQUIRE(Rational(1) - xk * yk <= (a0 + b0 + Rational(2)) * ulp(k));
    }
  }
}

TEST_CASE("property: square root bracket, oracle digits and no long nine runs") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 100; ++i) {
    const Rational c = i % 2 ? test::random_nonsquare(rng) : test::random_nonnegative_rational(rng, 1'000'000, 1'000);
    const RealDecimal r = sqrt(c);
    const bool square = r.witness().as_rational() != nullptr;
    for (std::size_t k = 0; k <= 60; ++k) {
      const Rational xk = test::exact(r.truncate(k));
      const Rational hi = xk + ulp(k);
      REQUIRE(xk * xk <= c);
      REQUIRE(c < hi * hi);
      if (!square) REQUIRE(xk * xk < c);
    }
    REQUIRE(r.truncate(200) == test::oracle_sqrt_truncation(c, 200));
    const std::string digits = r.digits(640);
    for (std::size_t start = 0; start + 64 <= digits.size(); ++start) {
      REQUIRE(digits.substr(start, 64).find_first_not_of('9') != std::string::npos);
    }
  }
}

TEST_CASE("property: x times 1/x is one") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    Rational a = test::random_rational(rng);
    if (a.is_zero()) a = Rational(-3);
    const RealDecimal x = RealDecimal::from_rational(a);
    REQUIRE(expansion(mul(x, recip(x)), 30) == test::Expansion{1, std::string(30, '0')});
  }
  for (long c : {2, 3, 5, 7, 11}) {
    const RealDecimal x = sqrt(Rational(c));
    REQUIRE(expansion(mul(x, recip(x)), 30) == test::Expansion{1, std::string(30, '0')});
  }
}

TEST_CASE("property: mul, recip and div agree with the rational oracle") {
  std::mt19937_64 rng(48);
  for (int i = 0; i < 300; ++i) {
    const Rational a = test::random_rational(rng);
    Rational b = test::random_rational(rng);
    if (b.is_zero()) b = Rational(7);
    const RealDecimal x = RealDecimal::from_rational(a);
    const RealDecimal y = RealDecimal::from_rational(b);
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(expansion(mul(x, y), 200) == test::oracle_expansion(a * b, 200));
    REQUIRE(expansion(recip(y), 200) == test::oracle_expansion(Rational(1) / b, 200));
    REQUIRE(expansion(div(x, y), 200) == test::oracle_expansion(a / b, 200));
  }
}
