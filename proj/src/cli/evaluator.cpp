#include "rdec/cli/evaluator.hpp"

#include "rdec/product.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rdec::cli {

Fuel default_fuel_from_env() {
  const char* raw = std::getenv(fuel_env_var);
  if (raw == nullptr || *raw == '\0') return Fuel{};
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0 || text.front() == '-') {
    throw std::invalid_argument(std::string(fuel_env_var) + " must be a positive integer, got '" +
                                text + "'");
  }
  return Fuel(static_cast<std::size_t>(value));
}

namespace {

RealDecimal build(const Expr& e, const EvalConfig& cfg) {
  switch (e.kind) {
    case ExprKind::literal:
      return RealDecimal::from_rational(e.value);
    case ExprKind::neg:
      return neg(evaluate(*e.lhs, cfg));
    case ExprKind::add:
      return add(evaluate(*e.lhs, cfg), evaluate(*e.rhs, cfg), cfg.fuel);
    case ExprKind::sub:
      return sub(evaluate(*e.lhs, cfg), evaluate(*e.rhs, cfg), cfg.fuel);
    case ExprKind::mul:
      return mul(evaluate(*e.lhs, cfg), evaluate(*e.rhs, cfg), cfg.fuel);
    case ExprKind::div:
      return div(evaluate(*e.lhs, cfg), evaluate(*e.rhs, cfg), cfg.fuel);
    case ExprKind::sqrt: {
      const RealDecimal operand = evaluate(*e.lhs, cfg);
      const Rational* radicand = operand.witness().as_rational();
      if (radicand == nullptr) {
        throw Error(ErrorKind::unsupported_sqrt_operand,
                    "sqrt needs an operand with an exact rational value, got " +
                        operand.witness().to_string());
      }
      return sqrt(*radicand);
    }
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace

RealDecimal evaluate(const Expr& e, const EvalConfig& cfg) {
  try {
    return with_span(build(e, cfg), e.span);
  } catch (Error& err) {
    if (!err.span()) err.set_span(e.span);
    throw;
  }
}

bool is_exact(const RealDecimal& x, std::size_t n) {
  const Rational* r = x.witness().as_rational();
  return r != nullptr && *r == to_rational(x.truncate(n));
}

std::string render_text(const RealDecimal& x, const EvalConfig& cfg) {
  const std::size_t n = cfg.digits;
  if (cfg.display == Display::signed_magnitude && x.integer_part() < 0) {
    // Sign-magnitude digits are the complement digits of -x.
    const DigitPrefix p = neg(x).prefix(n);
    return "-" + format(p.integer_part, p.digits, n, Display::complement);
  }
  const DigitPrefix p = x.prefix(n);
  return format(p.integer_part, p.digits, n, Display::complement);
}

nlohmann::json render_json(std::string_view expr, const RealDecimal& x, const EvalConfig& cfg) {
  const DigitPrefix p = x.prefix(cfg.digits);
  nlohmann::json j;
  j["expr"] = std::string(expr);
  j["digits_requested"] = cfg.digits;
  j["integer_part"] = p.integer_part.get_str();
  j["digits"] = p.digits;
  j["display"] = cfg.display == Display::complement ? "complement" : "signed";
  j["text"] = render_text(x, cfg);
  const Witness& w = x.witness();
  if (const Rational* r = w.as_rational()) {
    j["witness"] = {{"kind", "rational"}, {"value", r->to_string()}};
  } else if (const SqrtRational* s = w.as_sqrt()) {
    j["witness"] = {{"kind", "sqrt"}, {"radicand", s->radicand.to_string()}, {"sign", s->sign}};
  }
  j["exact"] = is_exact(x, cfg.digits);
  return j;
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::lex_error:
    case ErrorKind::parse_error:
      return exit_code::syntax;
    case ErrorKind::fuel_exhausted:
      return exit_code::fuel_exhausted;
    case ErrorKind::division_by_zero:
    case ErrorKind::negative_radicand:
    case ErrorKind::unsupported_sqrt_operand:
    case ErrorKind::non_canonical_input:
      return exit_code::math;
  }
  return exit_code::math;
}

namespace {

void report(std::string_view expr, const Error& e, const EvalConfig& cfg, std::ostream& out,
            std::ostream& err) {
  if (cfg.output == OutputFormat::json) {
    nlohmann::json j;
    j["expr"] = std::string(expr);
    j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (e.span()) j["error"]["span"] = {e.span()->begin, e.span()->end};
    out << j.dump() << '\n';
    return;
  }
  err << "rdec: " << to_string(e.kind());
  if (e.span()) err << " at " << e.span()->begin << ".." << e.span()->end;
  err << ": " << e.what() << '\n';
}

}  // namespace

int run_expression(std::string_view expr, const EvalConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  try {
    const auto tree = parse(expr);
    const RealDecimal value = evaluate(*tree, cfg);
    if (cfg.output == OutputFormat::json) {
      out << render_json(expr, value, cfg).dump() << '\n';
    } else {
      out << render_text(value, cfg) << '\n';
    }
    return exit_code::success;
  } catch (const Error& e) {
    report(expr, e, cfg, out, err);
    return exit_code_for(e.kind());
  }
}

int run_batch(std::istream& in, const EvalConfig& cfg, std::ostream& out, std::ostream& err) {
  int status = exit_code::success;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const int code = run_expression(line, cfg, out, err);
    if (status == exit_code::success) status = code;
  }
  if (in.bad()) {
    err << "rdec: error reading batch input\n";
    return exit_code::io;
  }
  return status;
}

}  // namespace rdec::cli
