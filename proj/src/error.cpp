#include "rdec/error.hpp"

namespace rdec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::fuel_exhausted: return "FuelExhausted";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::non_canonical_input: return "NonCanonicalInput";
    case ErrorKind::negative_radicand: return "NegativeRadicand";
    case ErrorKind::unsupported_sqrt_operand: return "UnsupportedSqrtOperand";
    case ErrorKind::lex_error: return "LexError";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace rdec
