#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rdec {

enum class ErrorKind {
  fuel_exhausted,
  division_by_zero,
  non_canonical_input,
  negative_radicand,
  unsupported_sqrt_operand,
  lex_error,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Half-open character range [begin, end) into an expression source.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Every failure the library reports carries a machine-readable kind.
/// Library code leaves the span empty; the expression evaluator fills it
/// with the innermost subexpression that raised.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  void set_span(SourceSpan span) noexcept { span_ = span; }

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(const std::string& message)
      : Error(ErrorKind::fuel_exhausted, message) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& message)
      : Error(ErrorKind::division_by_zero, message) {}
};

class NonCanonicalInput : public Error {
 public:
  explicit NonCanonicalInput(const std::string& message)
      : Error(ErrorKind::non_canonical_input, message) {}
};

class NegativeRadicand : public Error {
 public:
  explicit NegativeRadicand(const std::string& message)
      : Error(ErrorKind::negative_radicand, message) {}
};

}  // namespace rdec
