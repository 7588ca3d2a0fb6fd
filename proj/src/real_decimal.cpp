#include "node.hpp"

#include <stdexcept>
#include <string>

namespace rdec {

Fuel::Fuel(std::size_t b) : budget(b) {
  if (b == 0) throw std::invalid_argument("fuel budget must be at least 1");
}

namespace detail {

namespace {

void adopt(Prefix& memo, BigInt integer_part, std::string digits) {
  if (memo.has_integer) {
    const std::size_t overlap = std::min(memo.digits.size(), digits.size());
    if (memo.integer_part != integer_part ||
        memo.digits.compare(0, overlap, digits, 0, overlap) != 0) {
      throw std::logic_error("digit prefix changed after it was produced");
    }
    if (digits.size() < memo.digits.size()) return;
  }
  memo.integer_part = std::move(integer_part);
  memo.has_integer = true;
  memo.digits = std::move(digits);
}

}  // namespace

void commit(Prefix& memo, const ScaledDecimal& value) {
  adopt(memo, value.integer_part(), value.fraction_digits(value.scale()));
}

void commit_terminal(Prefix& memo, const ScaledDecimal& value, std::optional<std::size_t> case_one) {
  // Pad with zeros to the known length so the overlap check covers it.
  const std::size_t scale = std::max(value.scale(), memo.digits.size());
  commit(memo, value.rescaled(scale));
  memo.terminal = true;
  memo.case_one = case_one;
}

void Node::ensure(std::size_t target) const {
  if (memo_.covers(target)) return;
  producer_->extend(memo_, target);
  if (!memo_.covers(target)) throw std::logic_error("producer fell short of requested digits");
}

Prefix Node::snapshot(std::size_t target) const {
  std::lock_guard lock(mutex_);
  ensure(target);
  return memo_;
}

Prefix Node::peek() const {
  std::lock_guard lock(mutex_);
  return memo_;
}

BigInt Node::integer_part() const {
  std::lock_guard lock(mutex_);
  ensure(0);
  return memo_.integer_part;
}

int Node::digit(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("fractional digits are numbered from 1");
  std::lock_guard lock(mutex_);
  ensure(k);
  return k <= memo_.digits.size() ? memo_.digits[k - 1] - '0' : 0;
}

ScaledDecimal Node::truncation(std::size_t k) const {
  std::lock_guard lock(mutex_);
  ensure(k);
  const std::size_t have = std::min(k, memo_.digits.size());
  return ScaledDecimal::from_digits(memo_.integer_part, std::string_view(memo_.digits).substr(0, have))
      .rescaled(k);
}

void ForwardProducer::extend(Prefix& memo, std::size_t target) {
  if (!inner_) {
    inner_ = builder_();
    builder_ = nullptr;
  }
  Prefix inner = inner_->node()->snapshot(target);
  adopt(memo, std::move(inner.integer_part), std::move(inner.digits));
  memo.terminal = inner.terminal;
  memo.case_one = inner.case_one;
}

namespace {

class RationalProducer : public Producer {
 public:
  explicit RationalProducer(Rational r) : value_(std::move(r)) {}

  void extend(Prefix& memo, std::size_t target) override {
    const std::size_t n = std::max({target, 2 * memo.digits.size(), std::size_t{32}});
    const ScaledDecimal t(rational_scaled_floor(value_, n), n);
    if (value_.is_terminating() && to_rational(t) == value_) {
      commit_terminal(memo, t, std::nullopt);
    } else {
      commit(memo, t);
    }
  }

 private:
  Rational value_;
};

class DigitSourceProducer : public Producer {
 public:
  DigitSourceProducer(BigInt integer_part, RealDecimal::DigitSource source)
      : integer_part_(std::move(integer_part)), source_(std::move(source)) {}

  void extend(Prefix& memo, std::size_t target) override {
    if (!memo.has_integer) {
      memo.integer_part = integer_part_;
      memo.has_integer = true;
    }
    for (std::size_t k = memo.digits.size() + 1; k <= target; ++k) {
      const int d = source_(k);
      if (d < 0 || d > 9) {
        throw NonCanonicalInput("digit source returned " + std::to_string(d) + " at position " +
                                std::to_string(k));
      }
      memo.digits.push_back(static_cast<char>('0' + d));
    }
  }

 private:
  BigInt integer_part_;
  RealDecimal::DigitSource source_;
};

/// (-1-a0).(9-a1)(9-a2)...
class ComplementProducer : public Producer {
 public:
  explicit ComplementProducer(RealDecimal x) : x_(std::move(x)) {}

  void extend(Prefix& memo, std::size_t target) override {
    Prefix src = x_.node()->snapshot(target);
    std::string digits = std::move(src.digits);
    if (src.terminal && digits.size() < target) digits.resize(target, '0');
    for (char& c : digits) c = static_cast<char>('0' + ('9' - c));
    adopt(memo, -1 - src.integer_part, std::move(digits));
  }

 private:
  RealDecimal x_;
};

class AddProducer : public Producer {
 public:
  AddProducer(RealDecimal x, RealDecimal y, Fuel fuel, Witness witness)
      : x_(std::move(x)), y_(std::move(y)), fuel_(fuel), witness_(std::move(witness)) {}

  void extend(Prefix& memo, std::size_t target) override {
    while (!memo.covers(target)) {
      const std::size_t k = next_;
      if (x_.digit(k).value() + y_.digit(k).value() != 9) {
        last_hit_ = k;
        stall_ = 0;
        stall_checked_ = false;
        ++next_;
        // (x+y)_{k-1} = (x_k + y_k)_{k-1}; only materialize it once the
        // target is reached.
        if (k - 1 >= target) commit_hit(memo);
        continue;
      }
      if (!stall_checked_) {
        stall_checked_ = true;
        const std::size_t m = k - 1;
        const ScaledDecimal candidate = x_.truncate(m) + y_.truncate(m) + ScaledDecimal::ulp(m);
        if (witness_equals(witness_, candidate)) {
          commit_hit(memo);
          commit_terminal(memo, candidate, m);
          return;
        }
      }
      if (++stall_ > fuel_.budget) {
        commit_hit(memo);
        throw FuelExhausted("addition: digit sums stay at 9 for " + std::to_string(fuel_.budget) +
                            " positions after position " + std::to_string(last_hit_) +
                            " and no exact witness decides the sum");
      }
      ++next_;
    }
  }

 private:
  void commit_hit(Prefix& memo) {
    if (last_hit_ == 0) return;
    const std::size_t k = last_hit_;
    commit(memo, (x_.truncate(k) + y_.truncate(k)).truncate(k - 1));
  }

  RealDecimal x_;
  RealDecimal y_;
  Fuel fuel_;
  Witness witness_;
  std::size_t next_ = 1;
  std::size_t last_hit_ = 0;
  std::size_t stall_ = 0;
  bool stall_checked_ = false;
};

class SpanProducer : public Producer {
 public:
  SpanProducer(RealDecimal inner, SourceSpan span) : inner_(std::move(inner)), span_(span) {}

  void extend(Prefix& memo, std::size_t target) override {
    try {
      forward_.extend(memo, target);
    } catch (Error& e) {
      if (!e.span()) e.set_span(span_);
      throw;
    }
  }

 private:
  RealDecimal inner_;
  SourceSpan span_;
  ForwardProducer forward_{inner_};
};

}  // namespace
}  // namespace detail

using detail::make_real;

RealDecimal RealDecimal::from_rational(const Rational& r) {
  return make_real<detail::RationalProducer>(Witness::rational(r), r);
}

RealDecimal RealDecimal::from_scaled(const ScaledDecimal& v) { return from_rational(to_rational(v)); }

RealDecimal RealDecimal::from_digit_source(BigInt integer_part, DigitSource source) {
  return make_real<detail::DigitSourceProducer>(Witness::none(), std::move(integer_part),
                                                std::move(source));
}

BigInt RealDecimal::integer_part() const { return node_->integer_part(); }

Digit RealDecimal::digit(std::size_t k) const { return Digit(node_->digit(k)); }

ScaledDecimal RealDecimal::truncate(std::size_t k) const { return node_->truncation(k); }

IntervalBound RealDecimal::bound(std::size_t k) const { return IntervalBound{truncate(k), k}; }

std::string RealDecimal::digits(std::size_t n) const { return prefix(n).digits; }

DigitPrefix RealDecimal::prefix(std::size_t n) const {
  detail::Prefix p = node_->snapshot(n);
  p.digits.resize(n, '0');  // past a terminal prefix every digit is 0
  return DigitPrefix{std::move(p.integer_part), std::move(p.digits)};
}

const Witness& RealDecimal::witness() const { return node_->witness(); }

std::optional<std::size_t> RealDecimal::case_one_index() const { return node_->peek().case_one; }

bool RealDecimal::known_terminating() const { return node_->peek().terminal; }

RealDecimal add(const RealDecimal& x, const RealDecimal& y, Fuel fuel) {
  return make_real<detail::AddProducer>(witness_add(x.witness(), y.witness()), x, y, fuel,
                                        witness_add(x.witness(), y.witness()));
}

RealDecimal neg(const RealDecimal& x) {
  const Witness w = witness_neg(x.witness());
  if (const Rational* r = w.as_rational(); r && r->is_terminating()) {
    return RealDecimal::from_rational(*r);
  }
  return make_real<detail::ComplementProducer>(w, x);
}

RealDecimal sub(const RealDecimal& x, const RealDecimal& y, Fuel fuel) { return add(x, neg(y), fuel); }

std::size_t separate(const RealDecimal& x, const RealDecimal& y, Fuel fuel) {
  std::size_t m = 0;
  while (x.truncate(m) == y.truncate(m)) {
    if (++m > fuel.budget) {
      throw FuelExhausted("separate: truncations agree through position " + std::to_string(m - 1));
    }
  }
  const RealDecimal& smaller = x.truncate(m) < y.truncate(m) ? x : y;
  std::size_t l = m + 1;
  for (std::size_t scanned = 0; smaller.digit(l).value() == 9; ++l) {
    if (++scanned > fuel.budget) {
      throw FuelExhausted("separate: no digit below 9 after position " + std::to_string(m));
    }
  }
  return l;
}

SignClass sign(const RealDecimal& x, Fuel fuel) {
  const BigInt a0 = x.integer_part();
  if (a0 < 0) return SignClass::negative;
  if (a0 > 0) return SignClass::positive;
  if (const auto c = witness_compare(x.witness(), Rational(0))) {
    if (*c == 0) return SignClass::zero;
    return *c > 0 ? SignClass::positive : SignClass::negative;
  }
  for (std::size_t k = 1; k <= fuel.budget; ++k) {
    if (x.digit(k).value() != 0) return SignClass::positive;
  }
  throw FuelExhausted("sign: first " + std::to_string(fuel.budget) +
                      " digits are zero and no witness decides zero");
}

RealDecimal with_span(const RealDecimal& x, SourceSpan span) {
  return make_real<detail::SpanProducer>(x.witness(), x, span);
}

}  // namespace rdec
