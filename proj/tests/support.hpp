#pragma once

// Test-only oracles and generators.  Everything here works from exact
// rationals and integer square roots, never from the stream operations.

#include "rdec/rational.hpp"
#include "rdec/scaled_decimal.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace rdec::test {

/// Reduced p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 1'000'000,
                                long max_den = 1'000'000) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline Rational random_nonnegative_rational(std::mt19937_64& rng, long max_num = 1'000'000,
                                            long max_den = 1'000'000) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Canonical a0 and digits 1..n of r, by the oracle.
struct Expansion {
  mpz_class integer_part;
  std::string digits;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

inline Expansion oracle_expansion(const Rational& r, std::size_t n) {
  return {rational_integer_part(r), rational_digits(r, n)};
}

/// r_k as a terminating decimal.
inline ScaledDecimal oracle_truncation(const Rational& r, std::size_t k) {
  return ScaledDecimal(rational_scaled_floor(r, k), k);
}

/// floor(sqrt(c) * 10^k) / 10^k via the integer square root of
/// floor(c * 10^{2k}).
inline ScaledDecimal oracle_sqrt_truncation(const Rational& c, std::size_t k) {
  mpz_class radicand = rational_scaled_floor(c, 2 * k);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return ScaledDecimal(root, k);
}

inline Rational exact(const ScaledDecimal& v) { return Rational(v.mantissa(), pow10(v.scale())); }

/// A small non-square radicand, so that sqrt stays irrational.
inline Rational random_nonsquare(std::mt19937_64& rng) {
  static const long candidates[] = {2, 3, 5, 6, 7, 10, 11, 13, 17, 19, 23, 29, 31, 37};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(candidates) - 1);
  std::uniform_int_distribution<long> den(1, 9);
  const long d = den(rng);
  // c / d^2 keeps the radicand non-square.
  return Rational(mpz_class(candidates[pick(rng)]), mpz_class(d * d));
}

}  // namespace rdec::test
