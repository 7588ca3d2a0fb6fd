#include "rdec/witness.hpp"

#include "rdec/error.hpp"

namespace rdec {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class p = r.numerator();
  const mpz_class q = r.denominator();
  if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(sqrt(p), sqrt(q));
}

Rational to_rational(const ScaledDecimal& v) { return Rational(v.mantissa(), pow10(v.scale())); }

Witness Witness::sqrt(const Rational& c, int sign) {
  if (c.sign() < 0) throw NegativeRadicand("square root of negative value " + c.to_string());
  sign = sign < 0 ? -1 : 1;
  if (auto root = rational_sqrt(c)) return rational(sign < 0 ? -*root : *root);
  return Witness(SqrtRational{c, sign});
}

std::string Witness::to_string() const {
  if (const auto* r = as_rational()) return r->to_string();
  if (const auto* s = as_sqrt()) {
    return std::string(s->sign < 0 ? "-" : "") + "sqrt(" + s->radicand.to_string() + ")";
  }
  return "none";
}

Witness witness_add(const Witness& a, const Witness& b) {
  const auto* ra = a.as_rational();
  const auto* rb = b.as_rational();
  if (ra && rb) return Witness::rational(*ra + *rb);
  return Witness::none();
}

Witness witness_mul(const Witness& a, const Witness& b) {
  const auto* ra = a.as_rational();
  const auto* rb = b.as_rational();
  if (ra && rb) return Witness::rational(*ra * *rb);
  // 0 * anything is exactly 0, even an unwitnessed stream.
  if ((ra && ra->is_zero()) || (rb && rb->is_zero())) return Witness::rational(0);

  const auto* sa = a.as_sqrt();
  const auto* sb = b.as_sqrt();
  if (sa && sb) return Witness::sqrt(sa->radicand * sb->radicand, sa->sign * sb->sign);
  if (sa && rb) return Witness::sqrt(sa->radicand * *rb * *rb, sa->sign * rb->sign());
  if (sb && ra) return Witness::sqrt(sb->radicand * *ra * *ra, sb->sign * ra->sign());
  return Witness::none();
}

Witness witness_neg(const Witness& a) {
  if (const auto* r = a.as_rational()) return Witness::rational(-*r);
  if (const auto* s = a.as_sqrt()) return Witness::sqrt(s->radicand, -s->sign);
  return Witness::none();
}

Witness witness_inv(const Witness& a) {
  if (const auto* r = a.as_rational()) return Witness::rational(rat_inv(*r));
  if (const auto* s = a.as_sqrt()) return Witness::sqrt(rat_inv(s->radicand), s->sign);
  return Witness::none();
}

std::optional<std::strong_ordering> witness_compare(const Witness& w, const Rational& r) {
  if (const auto* q = w.as_rational()) return *q <=> r;
  const auto* s = w.as_sqrt();
  if (!s) return std::nullopt;
  // sqrt(c) against r >= 0 compares c against r^2; the radicand is never a
  // perfect square so equality cannot occur.
  if (s->sign > 0) {
    if (r.sign() < 0) return std::strong_ordering::greater;
    return s->radicand <=> r * r;
  }
  if (r.sign() > 0) return std::strong_ordering::less;
  return (r * r) <=> s->radicand;
}

bool witness_equals(const Witness& w, const ScaledDecimal& v) {
  const auto c = witness_compare(w, to_rational(v));
  return c && *c == 0;
}

}  // namespace rdec
