#pragma once

#include "rdec/cli/lexer.hpp"
#include "rdec/error.hpp"
#include "rdec/rational.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace rdec::cli {

enum class ExprKind { literal, neg, add, sub, mul, div, sqrt };

/// Expression tree.  Literals are exact rationals; operands of neg and sqrt
/// live in `lhs`.
struct Expr {
  ExprKind kind = ExprKind::literal;
  Rational value;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
  SourceSpan span;
};

/// Nesting beyond this depth is rejected as a parse error.
inline constexpr std::size_t max_nesting_depth = 256;

/// expr    := term (('+' | '-') term)*
/// term    := factor (('*' | '/') factor)*
/// factor  := '-' factor | primary
/// primary := literal | 'sqrt' '(' expr ')' | '(' expr ')'
///
/// Throws rdec::Error (parse_error) naming the expected token and offset.
std::unique_ptr<Expr> parse(std::span<const Token> tokens);
std::unique_ptr<Expr> parse(std::string_view input);

/// Exact value of a literal lexeme: "2.48", "7/9", "1.2(34)".
Rational literal_value(const Token& token);

/// "Add(Mul(6/5, Neg(13/5)), 28/5)"
std::string to_string(const Expr& e);

}  // namespace rdec::cli
