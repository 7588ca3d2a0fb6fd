#pragma once

#include "rdec/real_decimal.hpp"

#include <functional>
#include <memory>
#include <mutex>

namespace rdec::detail {

/// Memoized part of an expansion.  Digits only ever get appended.
struct Prefix {
  BigInt integer_part;
  bool has_integer = false;
  std::string digits;
  bool terminal = false;  // every digit past `digits` is 0
  std::optional<std::size_t> case_one;

  bool covers(std::size_t target) const {
    return has_integer && (terminal || digits.size() >= target);
  }
};

/// Fixes the prefix to `value` (all of its digits).  Throws std::logic_error
/// if that contradicts digits already produced.
void commit(Prefix& memo, const ScaledDecimal& value);
/// As commit, then marks every later digit as 0.
void commit_terminal(Prefix& memo, const ScaledDecimal& value, std::optional<std::size_t> case_one);

/// Computes digits on demand.  extend() runs under the owning node's lock
/// and must leave memo.covers(target) true or throw.
class Producer {
 public:
  virtual ~Producer() = default;
  virtual void extend(Prefix& memo, std::size_t target) = 0;
};

class Node {
 public:
  Node(Witness witness, std::unique_ptr<Producer> producer)
      : witness_(std::move(witness)), producer_(std::move(producer)) {}

  const Witness& witness() const { return witness_; }

  /// Copy of the memo, extended to cover `target` digits.
  Prefix snapshot(std::size_t target) const;
  /// Copy of the memo as it stands, without computing anything.
  Prefix peek() const;

  BigInt integer_part() const;
  int digit(std::size_t k) const;
  ScaledDecimal truncation(std::size_t k) const;

 private:
  void ensure(std::size_t target) const;  // caller holds mutex_

  Witness witness_;
  mutable std::mutex mutex_;
  mutable Prefix memo_;
  std::unique_ptr<Producer> producer_;
};

template <typename P, typename... Args>
RealDecimal make_real(Witness witness, Args&&... args) {
  return RealDecimal(
      std::make_shared<const Node>(std::move(witness), std::make_unique<P>(std::forward<Args>(args)...)));
}

/// Copies another value's digits.  The inner value is built on first use,
/// so operations can pick a route (sign decomposition) without forcing any
/// digit at construction time.
class ForwardProducer : public Producer {
 public:
  using Builder = std::function<RealDecimal()>;

  explicit ForwardProducer(RealDecimal inner) : inner_(std::move(inner)) {}
  explicit ForwardProducer(Builder builder) : builder_(std::move(builder)) {}
  void extend(Prefix& memo, std::size_t target) override;

 private:
  Builder builder_;
  std::optional<RealDecimal> inner_;
};

}  // namespace rdec::detail
