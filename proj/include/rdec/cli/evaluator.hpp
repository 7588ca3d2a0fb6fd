#pragma once

#include "rdec/cli/parser.hpp"
#include "rdec/real_decimal.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace rdec::cli {

enum class OutputFormat { text, json };

struct EvalConfig {
  static constexpr std::size_t max_digits = 100'000;
  static constexpr std::size_t default_digits = 30;

  std::size_t digits = default_digits;
  Fuel fuel;
  Display display = Display::complement;
  OutputFormat output = OutputFormat::text;
};

/// Environment variable that overrides the default fuel budget.
inline constexpr const char* fuel_env_var = "RDEC_FUEL";

/// Default fuel, honouring RDEC_FUEL when it holds a positive integer.
/// Throws std::invalid_argument for a malformed value.
Fuel default_fuel_from_env();

/// Maps the tree onto the library operations.  Errors raised while building
/// or, later, while producing digits carry the span of the innermost
/// subexpression responsible.
RealDecimal evaluate(const Expr& e, const EvalConfig& cfg);

/// The rendered digits: complement "(-4).88" or signed "-3.12".
std::string render_text(const RealDecimal& x, const EvalConfig& cfg);

/// {expr, digits_requested, integer_part, digits, display, text, witness?, exact}
nlohmann::json render_json(std::string_view expr, const RealDecimal& x, const EvalConfig& cfg);

/// True when a rational witness equals the truncation x_n, so every digit
/// past the printed prefix is 0.
bool is_exact(const RealDecimal& x, std::size_t n);

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int usage = 1;
inline constexpr int syntax = 2;
inline constexpr int fuel_exhausted = 3;
inline constexpr int math = 4;
inline constexpr int io = 5;
}  // namespace exit_code

int exit_code_for(ErrorKind kind) noexcept;

/// Evaluates one expression, writes the result (or the error) and returns
/// the process exit code.
int run_expression(std::string_view expr, const EvalConfig& cfg, std::ostream& out,
                   std::ostream& err);

/// One expression per line; blank lines and lines starting with '#' are
/// skipped.  Every line is evaluated; the exit code is the first nonzero
/// code encountered.
int run_batch(std::istream& in, const EvalConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rdec::cli
