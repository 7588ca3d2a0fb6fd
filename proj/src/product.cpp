#include "rdec/product.hpp"

#include "node.hpp"

#include <stdexcept>
#include <string>

namespace rdec {

ScaleParam choose_scale(const BigInt& a0, const BigInt& b0) {
  if (a0 < 0 || b0 < 0) throw std::invalid_argument("choose_scale needs non-negative operands");
  const BigInt need = a0 + b0 + 2;
  ScaleParam scale{0};
  for (BigInt bound = 1; bound < need; bound *= 10) ++scale.s;
  return scale;
}

ScaleParam choose_scale(const RealDecimal& x, const RealDecimal& y) {
  return choose_scale(x.integer_part(), y.integer_part());
}

namespace detail {
namespace {

class NonNegativeProductProducer : public Producer {
 public:
  NonNegativeProductProducer(RealDecimal x, RealDecimal y, ScaleParam scale, Fuel fuel,
                             Witness witness)
      : x_(std::move(x)), y_(std::move(y)), s_(scale.s), fuel_(fuel), witness_(std::move(witness)) {}

  void extend(Prefix& memo, std::size_t target) override {
    while (!memo.covers(target)) {
      const std::size_t k = next_;
      ScaledDecimal product = truncated_product(k);
      if (product.digit(k).value() != 9) {
        last_hit_ = k;
        last_product_ = std::move(product);
        stall_ = 0;
        stall_checked_ = false;
        ++next_;
        if (k - 1 >= target) commit_hit(memo);
        continue;
      }
      if (!stall_checked_) {
        stall_checked_ = true;
        const std::size_t m = k - 1;
        const ScaledDecimal candidate = truncated_product(m).truncate(m) + ScaledDecimal::ulp(m);
        if (witness_equals(witness_, candidate)) {
          commit_hit(memo);
          commit_terminal(memo, candidate, m);
          return;
        }
      }
      if (++stall_ > fuel_.budget) {
        commit_hit(memo);
        throw FuelExhausted("multiplication: digit " + std::to_string(k) +
                            " of the truncated products stays at 9 for " +
                            std::to_string(fuel_.budget) + " positions after position " +
                            std::to_string(last_hit_) + " and no exact witness decides the product");
      }
      ++next_;
    }
  }

 private:
  /// x_{k+s} y_{k+s}
  ScaledDecimal truncated_product(std::size_t k) const {
    return x_.truncate(k + s_) * y_.truncate(k + s_);
  }

  void commit_hit(Prefix& memo) {
    if (last_hit_ == 0) return;
    commit(memo, last_product_.truncate(last_hit_ - 1));
  }

  RealDecimal x_;
  RealDecimal y_;
  std::size_t s_;
  Fuel fuel_;
  Witness witness_;
  std::size_t next_ = 1;
  std::size_t last_hit_ = 0;
  ScaledDecimal last_product_;
  std::size_t stall_ = 0;
  bool stall_checked_ = false;
};

/// Reciprocal of a positive x by the bracket x y_k <= 1 < x (y_k + 10^{-k}).
class ReciprocalProducer : public Producer {
 public:
  ReciprocalProducer(RealDecimal x, Fuel fuel) : x_(std::move(x)), fuel_(fuel) {}

  void extend(Prefix& memo, std::size_t target) override {
    if (!memo.has_integer) {
      current_ = ScaledDecimal(integer_part(), 0);
      commit(memo, current_);
    }
    while (memo.digits.size() < target) {
      const std::size_t k = memo.digits.size() + 1;
      const ScaledDecimal base = current_.rescaled(k);
      const ScaledDecimal step = ScaledDecimal::ulp(k);
      // at_most_one(base) holds and base + 10 * step = y_{k-1} + 10^{-(k-1)}
      // does not, so bisect the digit in [0, 10).
      int lo = 0;
      int hi = 10;
      while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        if (at_most_one(base + ScaledDecimal(mid, 0) * step)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      current_ = base + ScaledDecimal(lo, 0) * step;
      memo.digits.push_back(static_cast<char>('0' + lo));
    }
  }

 private:
  BigInt integer_part() {
    if (!at_most_one(ScaledDecimal(1))) return 0;
    BigInt lo = 1;
    BigInt hi = 2;
    while (at_most_one(ScaledDecimal(hi, 0))) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (at_most_one(ScaledDecimal(mid, 0))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  /// Certified x * t <= 1 for t >= 0.
  bool at_most_one(const ScaledDecimal& t) {
    const Witness product = witness_mul(x_.witness(), Witness::rational(to_rational(t)));
    if (const auto c = witness_compare(product, Rational(1))) return *c <= 0;
    if (t.is_zero()) return true;

    // x lies in [x_n, x_n + 10^{-n}).  Refine n until one side decides.
    const ScaledDecimal one(1);
    const std::size_t start = t.scale() + t.integer_part().get_str().size() + 2;
    std::size_t n = start;
    for (;;) {
      const ScaledDecimal lower = x_.truncate(n);
      if ((lower + ScaledDecimal::ulp(n)) * t <= one) return true;
      if (lower * t > one) return false;
      if (n - start >= fuel_.budget) {
        throw FuelExhausted("reciprocal: cannot decide x * " + to_signed_string(t) +
                            " against 1 from " + std::to_string(n) + " digits of x");
      }
      n += std::max<std::size_t>(8, n - start);
      n = std::min(n, start + fuel_.budget);
    }
  }

  RealDecimal x_;
  Fuel fuel_;
  ScaledDecimal current_;
};

/// Largest digit keeping x_k^2 <= c = p / q at every step.
class SqrtProducer : public Producer {
 public:
  explicit SqrtProducer(const Rational& c) : p_(c.numerator()), q_(c.denominator()) {}

  void extend(Prefix& memo, std::size_t target) override {
    if (!memo.has_integer) {
      root_ = integer_root();
      commit(memo, ScaledDecimal(root_, 0));
      if (root_ * root_ * q_ == p_) {
        commit_terminal(memo, ScaledDecimal(root_, 0), std::nullopt);
        return;
      }
    }
    while (memo.digits.size() < target) {
      const std::size_t k = memo.digits.size() + 1;
      const BigInt scaled_c = p_ * pow10(2 * k);
      const BigInt base = root_ * 10;
      int lo = 0;
      int hi = 10;
      while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        const BigInt cand = base + mid;
        if (cand * cand * q_ <= scaled_c) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      root_ = base + lo;
      memo.digits.push_back(static_cast<char>('0' + lo));
      if (root_ * root_ * q_ == scaled_c) {
        commit_terminal(memo, ScaledDecimal(root_, k), std::nullopt);
        return;
      }
    }
  }

 private:
  BigInt integer_root() const {
    auto fits = [this](const BigInt& a) { return a * a * q_ <= p_; };
    if (!fits(1)) return 0;
    BigInt lo = 1;
    BigInt hi = 2;
    while (fits(hi)) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (fits(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  BigInt p_;
  BigInt q_;
  BigInt root_;  // x_k * 10^k
};

}  // namespace
}  // namespace detail

using detail::make_real;

RealDecimal multiply_nonnegative(const RealDecimal& x, const RealDecimal& y, ScaleParam scale,
                                 Fuel fuel) {
  const BigInt a0 = x.integer_part();
  const BigInt b0 = y.integer_part();
  if (a0 < 0 || b0 < 0) throw std::invalid_argument("multiply_nonnegative: negative operand");
  if (pow10(scale.s) < a0 + b0 + 2) {
    throw std::invalid_argument("multiply_nonnegative: scale too small for operands");
  }
  Witness w = witness_mul(x.witness(), y.witness());
  return make_real<detail::NonNegativeProductProducer>(w, x, y, scale, fuel, w);
}

RealDecimal mul(const RealDecimal& x, const RealDecimal& y, Fuel fuel) {
  auto route = [x, y, fuel]() -> RealDecimal {
    const bool x_negative = x.integer_part() < 0;
    const bool y_negative = y.integer_part() < 0;
    if (x_negative && y_negative) return mul(neg(x), neg(y), fuel);
    if (x_negative) return neg(mul(neg(x), y, fuel));
    if (y_negative) return neg(mul(x, neg(y), fuel));
    return multiply_nonnegative(x, y, choose_scale(x, y), fuel);
  };
  return make_real<detail::ForwardProducer>(witness_mul(x.witness(), y.witness()),
                                            detail::ForwardProducer::Builder(route));
}

RealDecimal recip(const RealDecimal& x, Fuel fuel) {
  Witness w = witness_inv(x.witness());
  auto route = [x, fuel]() -> RealDecimal {
    if (x.integer_part() < 0) return neg(recip(neg(x), fuel));
    if (sign(x, fuel) == SignClass::zero) throw DivisionByZero("reciprocal of zero");
    return make_real<detail::ReciprocalProducer>(witness_inv(x.witness()), x, fuel);
  };
  return make_real<detail::ForwardProducer>(std::move(w), detail::ForwardProducer::Builder(route));
}

RealDecimal div(const RealDecimal& x, const RealDecimal& y, Fuel fuel) {
  return mul(x, recip(y, fuel), fuel);
}

RealDecimal sqrt(const Rational& c) {
  Witness w = Witness::sqrt(c);  // throws NegativeRadicand
  return make_real<detail::SqrtProducer>(std::move(w), c);
}

}  // namespace rdec
