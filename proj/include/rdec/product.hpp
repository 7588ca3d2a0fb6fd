#pragma once

#include "rdec/real_decimal.hpp"

#include <cstddef>

namespace rdec {

/// A scale s with x + y <= 10^s for the non-negative operands it came from.
struct ScaleParam {
  std::size_t s = 0;

  friend bool operator==(ScaleParam, ScaleParam) = default;
};

/// Smallest s with a0 + b0 + 2 <= 10^s.  Since x < a0 + 1 and y < b0 + 1
/// this bounds x + y.  Throws std::invalid_argument for negative operands.
ScaleParam choose_scale(const BigInt& a0, const BigInt& b0);
ScaleParam choose_scale(const RealDecimal& x, const RealDecimal& y);

/// Product of two non-negative reals with an explicit scale.  Digit k - 1 is
/// fixed at every k where the k-th digit of x_{k+s} y_{k+s} is not 9, as
/// (xy)_{k-1} = (x_{k+s} y_{k+s})_{k-1}; a run of 9s is resolved as the
/// terminating value (x_{m+s} y_{m+s})_m + 10^{-m} only when the witnesses
/// prove it.  Any valid scale gives the same digits.  Throws
/// std::invalid_argument if an operand is negative or 10^s < a0 + b0 + 2.
RealDecimal multiply_nonnegative(const RealDecimal& x, const RealDecimal& y, ScaleParam scale,
                                 Fuel fuel = {});

/// x * y for any signs: negatives are reduced to the non-negative product
/// through neg, (-x)(-y) or -(x(-y)).  The route is picked on first use.
RealDecimal mul(const RealDecimal& x, const RealDecimal& y, Fuel fuel = {});

/// 1 / x.  For positive x, digits are chosen so that every truncation y_k
/// satisfies x y_k <= 1 < x (y_k + 10^{-k}); negative x gives -((-x)^{-1}).
/// Each comparison is exact against the witness when there is one, and
/// otherwise certified from interval bounds on x under `fuel`.
///
/// Throws DivisionByZero immediately when the witness proves x = 0.  A zero
/// that cannot be proved surfaces as FuelExhausted on first use.
RealDecimal recip(const RealDecimal& x, Fuel fuel = {});

RealDecimal div(const RealDecimal& x, const RealDecimal& y, Fuel fuel = {});

/// Non-negative square root of c, digit by digit: each digit is the largest
/// that keeps x_k^2 <= c.  Witness sqrt(c) (rational when c is a square).
/// Throws NegativeRadicand for c < 0.
RealDecimal sqrt(const Rational& c);

}  // namespace rdec
