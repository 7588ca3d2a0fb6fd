#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rdec {

/// Reduced fraction p/q with q > 0.  This is the exact ground truth the rest
/// of the library is checked against, so it depends on nothing but GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT: integers are rationals
  /// Throws DivisionByZero when denominator == 0.
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer);

  /// "p", "-p" or "p/q".  Throws std::invalid_argument / DivisionByZero.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True when the decimal expansion terminates (denominator = 2^a 5^b).
  bool is_terminating() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DivisionByZero on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);

  std::string to_string() const { return value_.get_str(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational rat_neg(const Rational& a) { return -a; }
/// Throws DivisionByZero for zero.
Rational rat_inv(const Rational& a);
inline std::strong_ordering rat_compare(const Rational& a, const Rational& b) { return a <=> b; }

/// floor(r * 10^k): the truncation r_k scaled to an integer.
mpz_class rational_scaled_floor(const Rational& r, std::size_t k);
/// a0 = floor(r).
mpz_class rational_integer_part(const Rational& r);
/// k-th fractional digit (k >= 1) of the canonical complement expansion.
/// Terminating values continue with zeros, never with nines.
int rational_digit(const Rational& r, std::size_t k);
/// Fractional digits 1..n as characters, by long division.
std::string rational_digits(const Rational& r, std::size_t n);

/// a0 . preperiod (period) (period) ...
struct PeriodicExpansion {
  mpz_class integer_part;
  std::string preperiod;
  std::string period;  // empty for terminating values

  /// Re-sums the expansion; period "9" is accepted here and yields the
  /// terminating value, though expansion_period never produces it.
  Rational value() const;
  /// Digit k >= 1 read off the expansion.
  int digit(std::size_t k) const;
  /// "0.1(6)", "(-1).(2)", "0.25".
  std::string to_string() const;
};

/// Minimal preperiod and period by remainder-cycle detection.  Returns
/// nullopt when the denominator exceeds max_denominator (the remainder table
/// is O(denominator)).
std::optional<PeriodicExpansion> expansion_period(const Rational& r,
                                                  const mpz_class& max_denominator = 10'000'000);

}  // namespace rdec
