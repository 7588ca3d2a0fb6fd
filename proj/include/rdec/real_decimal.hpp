#pragma once

#include "rdec/error.hpp"
#include "rdec/rational.hpp"
#include "rdec/scaled_decimal.hpp"
#include "rdec/witness.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace rdec {

/// Budget on digit positions scanned without progress.  Searches that are
/// only semi-decidable (a run of digit sums equal to 9, a zero test, an
/// interval comparison at an exact boundary) give up with FuelExhausted
/// once they spend it.
struct Fuel {
  static constexpr std::size_t default_budget = 10'000;

  std::size_t budget = default_budget;

  constexpr Fuel() = default;
  /// Throws std::invalid_argument for a zero budget.
  explicit Fuel(std::size_t budget);
};

enum class SignClass { negative, zero, positive };

/// The integer part and the first digits of an expansion.
struct DigitPrefix {
  BigInt integer_part;
  std::string digits;  // '0'..'9', digit 1 first
};

namespace detail {
class Node;
}

/// An infinite decimal a0.a1a2a3... with a0 any integer and every a_k in
/// 0..9, evaluated lazily and memoized.
///
/// Values are immutable handles; copies share the memo.  Digits are never
/// retracted once produced, and concurrent queries on the same value are
/// safe.  Streams built from a digit source must be canonical (a_k < 9
/// infinitely often); streams built by this library always are.
class RealDecimal {
 public:
  using DigitSource = std::function<int(std::size_t)>;

  /// Canonical expansion of r; witness Rational(r).
  static RealDecimal from_rational(const Rational& r);
  static RealDecimal from_scaled(const ScaledDecimal& v);
  /// Digits a_k = source(k) for k >= 1, no witness.  A source value outside
  /// 0..9 raises NonCanonicalInput when that digit is first needed.
  static RealDecimal from_digit_source(BigInt integer_part, DigitSource source);

  /// a0.  May have to scan (and so may throw) for computed values.
  BigInt integer_part() const;
  /// a_k, k >= 1.
  Digit digit(std::size_t k) const;
  /// x_k = a0.a1...ak, exact.
  ScaledDecimal truncate(std::size_t k) const;
  /// x lies in [x_k, x_k + 10^{-k}).
  IntervalBound bound(std::size_t k) const;
  /// a1..an as characters.
  std::string digits(std::size_t n) const;
  DigitPrefix prefix(std::size_t n) const;

  const Witness& witness() const;
  /// The index m at which the terminating case of addition or
  /// multiplication was confirmed, once it has been.
  std::optional<std::size_t> case_one_index() const;
  /// True once every digit past the memoized prefix is known to be 0.
  bool known_terminating() const;

  explicit RealDecimal(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  const std::shared_ptr<const detail::Node>& node() const noexcept { return node_; }

 private:
  std::shared_ptr<const detail::Node> node_;
};

/// Truncation x_k as a free function.
inline ScaledDecimal truncate(const RealDecimal& x, std::size_t k) { return x.truncate(k); }

/// x + y.  Digits are fixed at every position k with a_k + b_k != 9, where
/// (x+y)_{k-1} = (x_k + y_k)_{k-1}.  A run of positions with digit sum 9 is
/// resolved as the terminating value x_m + y_m + 10^{-m} only when the
/// operands' witnesses prove it; otherwise the run is scanned under `fuel`.
RealDecimal add(const RealDecimal& x, const RealDecimal& y, Fuel fuel = {});

/// -x: the terminating negation when the witness proves x terminates,
/// otherwise (-1-a0).(9-a1)(9-a2)...
RealDecimal neg(const RealDecimal& x);

RealDecimal sub(const RealDecimal& x, const RealDecimal& y, Fuel fuel = {});

/// An index l with |x_k - y_k| >= 10^{-l} for every k > l.  Throws
/// FuelExhausted when no separation shows up within the budget, which is
/// always the case for equal inputs.
std::size_t separate(const RealDecimal& x, const RealDecimal& y, Fuel fuel = {});

/// Negative iff a0 < 0.  Zero is reported only when the witness proves it.
SignClass sign(const RealDecimal& x, Fuel fuel = {});

/// Forwards x, attaching `span` to any library error raised while producing
/// its digits that does not already carry one.
RealDecimal with_span(const RealDecimal& x, SourceSpan span);

}  // namespace rdec
