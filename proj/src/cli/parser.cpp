#include "rdec/cli/parser.hpp"

#include "rdec/scaled_decimal.hpp"

#include <vector>

namespace rdec::cli {

Rational literal_value(const Token& token) {
  const std::string_view text = token.lexeme;
  switch (token.kind) {
    case TokenKind::rational:
      return Rational::parse(text);
    case TokenKind::number: {
      const ScaledDecimal v = ScaledDecimal::parse(text);
      return Rational(v.mantissa(), pow10(v.scale()));
    }
    case TokenKind::repeating: {
      const auto dot = text.find('.');
      const auto open = text.find('(');
      PeriodicExpansion e;
      e.integer_part = mpz_class(std::string(text.substr(0, dot)), 10);
      e.preperiod = std::string(text.substr(dot + 1, open - dot - 1));
      e.period = std::string(text.substr(open + 1, text.size() - open - 2));
      return e.value();
    }
    default:
      throw std::invalid_argument("not a literal token");
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    expect(TokenKind::end);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == TokenKind::end ? "end of input" : "'" + t.lexeme + "'";
    throw Error(ErrorKind::parse_error,
                "expected " + expected + " at offset " + std::to_string(t.position) + ", found " + found,
                SourceSpan{t.position, t.position + std::max<std::size_t>(t.lexeme.size(), 1)});
  }

  const Token& expect(TokenKind kind) {
    if (peek().kind != kind) fail(std::string(to_string(kind)));
    return advance();
  }

  static std::unique_ptr<Expr> node(ExprKind kind, std::unique_ptr<Expr> lhs,
                                    std::unique_ptr<Expr> rhs, SourceSpan span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->span = span;
    return e;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > max_nesting_depth) parser.fail("shallower nesting");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  std::unique_ptr<Expr> expr() {
    DepthGuard guard(*this);
    auto lhs = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const ExprKind kind = advance().kind == TokenKind::plus ? ExprKind::add : ExprKind::sub;
      auto rhs = term();
      const SourceSpan span{lhs->span.begin, rhs->span.end};
      lhs = node(kind, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
      const ExprKind kind = advance().kind == TokenKind::star ? ExprKind::mul : ExprKind::div;
      auto rhs = factor();
      const SourceSpan span{lhs->span.begin, rhs->span.end};
      lhs = node(kind, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  std::unique_ptr<Expr> factor() {
    if (peek().kind == TokenKind::minus) {
      DepthGuard guard(*this);
      const std::size_t begin = advance().position;
      auto operand = factor();
      const SourceSpan span{begin, operand->span.end};
      return node(ExprKind::neg, std::move(operand), nullptr, span);
    }
    return primary();
  }

  std::unique_ptr<Expr> primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number:
      case TokenKind::rational:
      case TokenKind::repeating: {
        advance();
        auto e = std::make_unique<Expr>();
        e->kind = ExprKind::literal;
        e->value = literal_value(t);
        e->span = SourceSpan{t.position, t.position + t.lexeme.size()};
        return e;
      }
      case TokenKind::sqrt_kw: {
        const std::size_t begin = advance().position;
        expect(TokenKind::lparen);
        auto operand = expr();
        const std::size_t end = expect(TokenKind::rparen).position + 1;
        return node(ExprKind::sqrt, std::move(operand), nullptr, SourceSpan{begin, end});
      }
      case TokenKind::lparen: {
        const std::size_t begin = advance().position;
        auto inner = expr();
        const std::size_t end = expect(TokenKind::rparen).position + 1;
        inner->span = SourceSpan{begin, end};
        return inner;
      }
      default:
        fail("a number, 'sqrt', '(' or '-'");
    }
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::end) {
    throw std::invalid_argument("token stream must end with TokenKind::end");
  }
  return Parser(tokens).run();
}

std::unique_ptr<Expr> parse(std::string_view input) {
  const std::vector<Token> tokens = tokenize(input);
  return parse(tokens);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::literal: return e.value.to_string();
    case ExprKind::neg: return "Neg(" + to_string(*e.lhs) + ")";
    case ExprKind::sqrt: return "Sqrt(" + to_string(*e.lhs) + ")";
    case ExprKind::add: return "Add(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprKind::sub: return "Sub(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprKind::mul: return "Mul(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprKind::div: return "Div(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
  }
  return "?";
}

}  // namespace rdec::cli
