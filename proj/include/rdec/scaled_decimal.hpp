#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rdec {

using BigInt = mpz_class;

/// 10^exponent as a big integer.
BigInt pow10(std::size_t exponent);

/// A decimal digit 0..9.
class Digit {
 public:
  constexpr Digit() = default;
  /// Throws std::out_of_range outside 0..9.
  explicit Digit(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr char as_char() const noexcept { return static_cast<char>('0' + value_); }

  friend constexpr bool operator==(Digit, Digit) = default;
  friend constexpr auto operator<=>(Digit, Digit) = default;

 private:
  std::int8_t value_ = 0;
};

/// Terminating decimal mantissa / 10^scale.
///
/// Negative values are stored sign-magnitude in the mantissa, but every
/// digit-level accessor (truncate, digit, integer_part) works on the
/// complement expansion, i.e. with floor semantics: -3.12 has integer part -4
/// and fractional digits 88.  Representations are not normalized; equality
/// and ordering compare values.
class ScaledDecimal {
 public:
  ScaledDecimal() = default;
  ScaledDecimal(BigInt mantissa, std::size_t scale);
  ScaledDecimal(long value);  // NOLINT: integers are terminating decimals

  /// 10^{-k} as the terminating decimal 0.00..01 with k digits.
  static ScaledDecimal ulp(std::size_t k);

  /// Parses "2.48", "-3.12", "7" and the complement form "(-4).88".
  /// Throws std::invalid_argument on anything else.
  static ScaledDecimal parse(std::string_view text);

  /// The value a0 + 0.d1 d2 .. dk where `digits` holds the characters d1..dk.
  static ScaledDecimal from_digits(const BigInt& integer_part, std::string_view digits);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::size_t scale() const noexcept { return scale_; }
  int sign() const noexcept { return sgn(mantissa_); }
  bool is_zero() const noexcept { return mantissa_ == 0; }

  /// Largest n / 10^k not exceeding the value.
  ScaledDecimal truncate(std::size_t k) const;
  /// floor of the value, i.e. a0 of the complement expansion.
  BigInt integer_part() const;
  /// k-th fractional digit (k >= 1) of the complement expansion.
  Digit digit(std::size_t k) const;
  /// The same value carried at a scale of at least `scale`.
  ScaledDecimal rescaled(std::size_t scale) const;

  /// Fractional digits 1..k of the complement expansion as characters.
  std::string fraction_digits(std::size_t k) const;

  friend ScaledDecimal operator+(const ScaledDecimal& a, const ScaledDecimal& b);
  friend ScaledDecimal operator-(const ScaledDecimal& a, const ScaledDecimal& b);
  friend ScaledDecimal operator*(const ScaledDecimal& a, const ScaledDecimal& b);
  ScaledDecimal operator-() const;

  friend std::strong_ordering operator<=>(const ScaledDecimal& a, const ScaledDecimal& b);
  friend bool operator==(const ScaledDecimal& a, const ScaledDecimal& b);

 private:
  BigInt mantissa_ = 0;
  std::size_t scale_ = 0;
};

// Free-function spellings of the terminating-decimal arithmetic.
inline ScaledDecimal scaled_add(const ScaledDecimal& a, const ScaledDecimal& b) { return a + b; }
inline ScaledDecimal scaled_mul(const ScaledDecimal& a, const ScaledDecimal& b) { return a * b; }
inline ScaledDecimal scaled_neg(const ScaledDecimal& a) { return -a; }
inline std::strong_ordering scaled_compare(const ScaledDecimal& a, const ScaledDecimal& b) {
  return a <=> b;
}
inline ScaledDecimal scaled_truncate(const ScaledDecimal& a, std::size_t k) { return a.truncate(k); }
inline Digit scaled_digit(const ScaledDecimal& a, std::size_t k) { return a.digit(k); }

/// [lower, lower + 10^{-width_scale}): where a real with truncation `lower`
/// at depth width_scale is known to lie.
struct IntervalBound {
  ScaledDecimal lower;
  std::size_t width_scale = 0;

  ScaledDecimal upper() const { return lower + ScaledDecimal::ulp(width_scale); }
};

enum class Display { complement, signed_magnitude };

/// Renders a0.d1..dn.  Complement mode prints the digits verbatim with a
/// negative integer part parenthesised, "(-4).88".  Signed mode prints the
/// same value in sign-magnitude form, "-3.12".  `digits` must hold at least
/// n characters; n == 0 prints the integer part alone.
std::string format(const BigInt& integer_part, std::string_view digits, std::size_t n,
                   Display mode);

/// Complement rendering of a terminating decimal at its own scale.
std::string to_complement_string(const ScaledDecimal& value);
/// Sign-magnitude rendering at its own scale.
std::string to_signed_string(const ScaledDecimal& value);

std::ostream& operator<<(std::ostream& os, const ScaledDecimal& value);

}  // namespace rdec
