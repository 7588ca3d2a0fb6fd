#include "rdec/scaled_decimal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rdec {

BigInt pow10(std::size_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Digit::Digit(int value) : value_(static_cast<std::int8_t>(value)) {
  if (value < 0 || value > 9) throw std::out_of_range("digit out of range: " + std::to_string(value));
}

namespace {

BigInt parse_digit_string(std::string_view digits) {
  if (digits.empty()) return 0;
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a digit string: " + std::string(digits));
  }
  return BigInt(std::string(digits), 10);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ScaledDecimal::ScaledDecimal(BigInt mantissa, std::size_t scale)
    : mantissa_(std::move(mantissa)), scale_(scale) {}

ScaledDecimal::ScaledDecimal(long value) : mantissa_(value), scale_(0) {}

ScaledDecimal ScaledDecimal::ulp(std::size_t k) { return ScaledDecimal(BigInt(1), k); }

ScaledDecimal ScaledDecimal::from_digits(const BigInt& integer_part, std::string_view digits) {
  return ScaledDecimal(integer_part * pow10(digits.size()) + parse_digit_string(digits),
                       digits.size());
}

ScaledDecimal ScaledDecimal::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> ScaledDecimal {
    throw std::invalid_argument("malformed decimal: " + original);
  };
  if (text.empty()) return fail();

  BigInt integer_part;
  std::string_view fraction;
  if (text.front() == '(') {
    const auto close = text.find(')');
    if (close == std::string_view::npos) return fail();
    std::string_view inner = text.substr(1, close - 1);
    bool negative = !inner.empty() && inner.front() == '-';
    if (negative) inner.remove_prefix(1);
    if (inner.empty()) return fail();
    integer_part = parse_digit_string(inner);
    if (negative) integer_part = -integer_part;
    text.remove_prefix(close + 1);
    if (!text.empty()) {
      if (text.front() != '.' || text.size() == 1) return fail();
      fraction = text.substr(1);
    }
    return from_digits(integer_part, fraction);
  }

  bool negative = text.front() == '-';
  if (negative || text.front() == '+') text.remove_prefix(1);
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  if (dot != std::string_view::npos) {
    fraction = text.substr(dot + 1);
    if (fraction.empty()) return fail();
  }
  if (whole.empty()) return fail();
  ScaledDecimal magnitude = from_digits(parse_digit_string(whole), fraction);
  return negative ? -magnitude : magnitude;
}

ScaledDecimal ScaledDecimal::truncate(std::size_t k) const {
  if (k >= scale_) return rescaled(k);
  return ScaledDecimal(floor_div(mantissa_, pow10(scale_ - k)), k);
}

BigInt ScaledDecimal::integer_part() const { return floor_div(mantissa_, pow10(scale_)); }

Digit ScaledDecimal::digit(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("fractional digits are numbered from 1");
  if (k > scale_) return Digit(0);
  const BigInt t = truncate(k).mantissa();
  return Digit(static_cast<int>(mpz_fdiv_ui(t.get_mpz_t(), 10)));
}

ScaledDecimal ScaledDecimal::rescaled(std::size_t scale) const {
  if (scale <= scale_) return *this;
  return ScaledDecimal(mantissa_ * pow10(scale - scale_), scale);
}

std::string ScaledDecimal::fraction_digits(std::size_t k) const {
  if (k == 0) return {};
  const BigInt t = truncate(k).mantissa();
  BigInt frac;
  mpz_fdiv_r(frac.get_mpz_t(), t.get_mpz_t(), pow10(k).get_mpz_t());
  std::string s = frac.get_str();
  return std::string(k - s.size(), '0') + s;
}

ScaledDecimal operator+(const ScaledDecimal& a, const ScaledDecimal& b) {
  const std::size_t scale = std::max(a.scale_, b.scale_);
  return ScaledDecimal(a.rescaled(scale).mantissa_ + b.rescaled(scale).mantissa_, scale);
}

ScaledDecimal operator-(const ScaledDecimal& a, const ScaledDecimal& b) { return a + (-b); }

ScaledDecimal operator*(const ScaledDecimal& a, const ScaledDecimal& b) {
  return ScaledDecimal(a.mantissa_ * b.mantissa_, a.scale_ + b.scale_);
}

ScaledDecimal ScaledDecimal::operator-() const { return ScaledDecimal(-mantissa_, scale_); }

std::strong_ordering operator<=>(const ScaledDecimal& a, const ScaledDecimal& b) {
  const std::size_t scale = std::max(a.scale_, b.scale_);
  const int c = cmp(a.rescaled(scale).mantissa_, b.rescaled(scale).mantissa_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const ScaledDecimal& a, const ScaledDecimal& b) { return (a <=> b) == 0; }

namespace {

std::string signed_rendering(const BigInt& mantissa, std::size_t scale) {
  BigInt magnitude = abs(mantissa);
  std::string s = magnitude.get_str();
  if (s.size() <= scale) s.insert(0, scale + 1 - s.size(), '0');
  if (scale > 0) s.insert(s.size() - scale, ".");
  return (mantissa < 0 ? "-" : "") + s;
}

}  // namespace

std::string format(const BigInt& integer_part, std::string_view digits, std::size_t n,
                   Display mode) {
  if (digits.size() < n) throw std::invalid_argument("format: fewer digits than requested");
  const std::string_view shown = digits.substr(0, n);
  if (mode == Display::signed_magnitude) {
    const ScaledDecimal value = ScaledDecimal::from_digits(integer_part, shown);
    return signed_rendering(value.mantissa(), n);
  }
  std::string out = integer_part < 0 ? "(" + integer_part.get_str() + ")" : integer_part.get_str();
  if (n > 0) {
    out += '.';
    out += shown;
  }
  return out;
}

std::string to_complement_string(const ScaledDecimal& value) {
  return format(value.integer_part(), value.fraction_digits(value.scale()), value.scale(),
                Display::complement);
}

std::string to_signed_string(const ScaledDecimal& value) {
  return signed_rendering(value.mantissa(), value.scale());
}

std::ostream& operator<<(std::ostream& os, const ScaledDecimal& value) {
  return os << to_signed_string(value);
}

}  // namespace rdec
