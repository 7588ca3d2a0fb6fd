#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rdec::cli {

enum class TokenKind {
  number,     // 3, 2.48
  rational,   // 7/9 (integers, no whitespace, nonzero denominator)
  repeating,  // 0.(7), 1.2(34)
  plus,
  minus,
  star,
  slash,
  lparen,
  rparen,
  sqrt_kw,
  end,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // character offset into the input

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits an expression into tokens, ending with TokenKind::end.
/// Throws rdec::Error (lex_error) with the offending offset.
std::vector<Token> tokenize(std::string_view input);

}  // namespace rdec::cli
