#include "rdec/rational.hpp"

#include "rdec/error.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rdec {

namespace {

mpz_class ten_to(std::size_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

bool Rational::is_terminating() const {
  mpz_class q = value_.get_den();
  mpz_remove(q.get_mpz_t(), q.get_mpz_t(), mpz_class(2).get_mpz_t());
  mpz_remove(q.get_mpz_t(), q.get_mpz_t(), mpz_class(5).get_mpz_t());
  return q == 1;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_inv(const Rational& a) {
  if (a.is_zero()) throw DivisionByZero("reciprocal of zero");
  return Rational(1) / a;
}

mpz_class rational_scaled_floor(const Rational& r, std::size_t k) {
  mpz_class q;
  const mpz_class scaled = r.numerator() * ten_to(k);
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

mpz_class rational_integer_part(const Rational& r) { return rational_scaled_floor(r, 0); }

int rational_digit(const Rational& r, std::size_t k) {
  if (k == 0) throw std::invalid_argument("fractional digits are numbered from 1");
  const mpz_class t = rational_scaled_floor(r, k);
  return static_cast<int>(mpz_fdiv_ui(t.get_mpz_t(), 10));
}

std::string rational_digits(const Rational& r, std::size_t n) {
  // Long division on the fractional part r - floor(r), which lies in [0, 1).
  const mpz_class q = r.denominator();
  mpz_class rem = r.numerator() - rational_integer_part(r) * q;
  std::string out;
  out.reserve(n);
  mpz_class d;
  for (std::size_t i = 0; i < n; ++i) {
    rem *= 10;
    mpz_fdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t());
    out.push_back(static_cast<char>('0' + d.get_si()));
  }
  return out;
}

Rational PeriodicExpansion::value() const {
  Rational v(integer_part);
  const mpz_class pre_scale = ten_to(preperiod.size());
  if (!preperiod.empty()) v = v + Rational(mpz_class(preperiod, 10), pre_scale);
  if (!period.empty()) {
    // 0.(p) shifted past the preperiod: p / ((10^len - 1) * 10^pre).
    const mpz_class denom = (ten_to(period.size()) - 1) * pre_scale;
    v = v + Rational(mpz_class(period, 10), denom);
  }
  return v;
}

int PeriodicExpansion::digit(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("fractional digits are numbered from 1");
  if (k <= preperiod.size()) return preperiod[k - 1] - '0';
  if (period.empty()) return 0;
  return period[(k - 1 - preperiod.size()) % period.size()] - '0';
}

std::string PeriodicExpansion::to_string() const {
  std::string out = integer_part < 0 ? "(" + integer_part.get_str() + ")" : integer_part.get_str();
  if (preperiod.empty() && period.empty()) return out;
  out += '.';
  out += preperiod;
  if (!period.empty()) out += "(" + period + ")";
  return out;
}

std::optional<PeriodicExpansion> expansion_period(const Rational& r,
                                                  const mpz_class& max_denominator) {
  const mpz_class q = r.denominator();
  if (q > max_denominator) return std::nullopt;

  PeriodicExpansion e;
  e.integer_part = rational_integer_part(r);
  const unsigned long den = q.get_ui();
  unsigned long rem = mpz_class(r.numerator() - e.integer_part * q).get_ui();

  // Remainder -> position of the digit it produces.  The first repeated
  // remainder closes the cycle; a zero remainder terminates.
  std::unordered_map<unsigned long, std::size_t> seen;
  std::string digits;
  while (rem != 0) {
    const auto [it, inserted] = seen.emplace(rem, digits.size());
    if (!inserted) {
      e.preperiod = digits.substr(0, it->second);
      e.period = digits.substr(it->second);
      return e;
    }
    rem *= 10;
    digits.push_back(static_cast<char>('0' + rem / den));
    rem %= den;
  }
  e.preperiod = digits;
  return e;
}

}  // namespace rdec
