#include "rdec/cli/lexer.hpp"

#include "rdec/error.hpp"

#include <cctype>

namespace rdec::cli {

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::number: return "number";
    case TokenKind::rational: return "rational";
    case TokenKind::repeating: return "repeating decimal";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::sqrt_kw: return "'sqrt'";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view input) : in_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
      if (pos_ == in_.size()) {
        out.push_back({TokenKind::end, "", pos_});
        return out;
      }
      const char c = in_[pos_];
      switch (c) {
        case '+': out.push_back(single(TokenKind::plus)); continue;
        case '-': out.push_back(single(TokenKind::minus)); continue;
        case '*': out.push_back(single(TokenKind::star)); continue;
        case '/': out.push_back(single(TokenKind::slash)); continue;
        case '(': out.push_back(single(TokenKind::lparen)); continue;
        case ')': out.push_back(single(TokenKind::rparen)); continue;
        default: break;
      }
      if (is_digit(c)) {
        out.push_back(number());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(word());
      } else {
        fail(pos_, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw Error(ErrorKind::lex_error, what + " at offset " + std::to_string(at),
                SourceSpan{at, at + 1});
  }

  Token single(TokenKind kind) {
    Token t{kind, std::string(1, in_[pos_]), pos_};
    ++pos_;
    return t;
  }

  std::size_t digits_from(std::size_t i) const {
    while (i < in_.size() && is_digit(in_[i])) ++i;
    return i;
  }

  Token number() {
    const std::size_t start = pos_;
    std::size_t i = digits_from(pos_);
    TokenKind kind = TokenKind::number;

    if (i < in_.size() && in_[i] == '.') {
      const std::size_t dot = i;
      i = digits_from(i + 1);
      if (i < in_.size() && in_[i] == '(') {
        const std::size_t open = i;
        i = digits_from(i + 1);
        if (i == open + 1) fail(open + 1, "expected repeating digits");
        if (i >= in_.size() || in_[i] != ')') fail(i, "expected ')' closing the repeating digits");
        ++i;
        kind = TokenKind::repeating;
      } else if (i == dot + 1) {
        fail(dot, "expected digits after '.'");
      }
    } else if (i + 1 < in_.size() && in_[i] == '/' && is_digit(in_[i + 1])) {
      // p/q forms a single literal only when the denominator is a plain
      // nonzero integer; otherwise the slash is ordinary division.
      const std::size_t den_end = digits_from(i + 1);
      const std::string_view den = in_.substr(i + 1, den_end - i - 1);
      const bool continues = den_end < in_.size() && (in_[den_end] == '.' || in_[den_end] == '(');
      const bool zero = den.find_first_not_of('0') == std::string_view::npos;
      if (!continues && !zero) {
        i = den_end;
        kind = TokenKind::rational;
      }
    }
    pos_ = i;
    return Token{kind, std::string(in_.substr(start, i - start)), start};
  }

  Token word() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    while (i < in_.size() && std::isalnum(static_cast<unsigned char>(in_[i]))) ++i;
    const std::string_view w = in_.substr(start, i - start);
    if (w != "sqrt") fail(start, "unknown word '" + std::string(w) + "'");
    pos_ = i;
    return Token{TokenKind::sqrt_kw, std::string(w), start};
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace rdec::cli
