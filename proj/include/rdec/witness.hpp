#pragma once

#include "rdec/rational.hpp"
#include "rdec/scaled_decimal.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace rdec {

/// sign * sqrt(radicand), radicand > 0 and not the square of a rational.
struct SqrtRational {
  Rational radicand;
  int sign = 1;

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;
};

/// Exact symbolic value attached to a lazily computed real.  It is what
/// makes the terminating case of addition and multiplication decidable.
class Witness {
 public:
  Witness() = default;  // none
  static Witness none() { return Witness(); }
  static Witness rational(Rational r) { return Witness(std::move(r)); }
  /// sign * sqrt(c), normalized to a rational witness when c is a perfect
  /// square.  Throws NegativeRadicand for c < 0.
  static Witness sqrt(const Rational& c, int sign = 1);

  bool is_none() const { return std::holds_alternative<std::monostate>(value_); }
  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const SqrtRational* as_sqrt() const { return std::get_if<SqrtRational>(&value_); }

  std::string to_string() const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  explicit Witness(Rational r) : value_(std::move(r)) {}
  explicit Witness(SqrtRational s) : value_(std::move(s)) {}
  std::variant<std::monostate, Rational, SqrtRational> value_;
};

Witness witness_add(const Witness& a, const Witness& b);
Witness witness_mul(const Witness& a, const Witness& b);
Witness witness_neg(const Witness& a);
/// Throws DivisionByZero for a rational zero.
Witness witness_inv(const Witness& a);

/// Exact comparison of the witnessed value against r; nullopt for none.
std::optional<std::strong_ordering> witness_compare(const Witness& w, const Rational& r);
/// True only when the witness proves the value equals v exactly.
bool witness_equals(const Witness& w, const ScaledDecimal& v);

/// If r is the square of a rational, that non-negative root.
std::optional<Rational> rational_sqrt(const Rational& r);

Rational to_rational(const ScaledDecimal& v);

}  // namespace rdec
