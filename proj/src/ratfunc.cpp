#include "qhs/ratfunc.hpp"

namespace qhs {

namespace {

Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational RatFunc::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (qhs::is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
  return num_(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  if (g.degree() <= 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly bd = exact_div(b.den_, g);
  Poly ad = exact_div(a.den_, g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Canonical{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel so the product of the reduced pieces is already coprime.
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0) {
    Poly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (ad.degree() > 0) {
    Poly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  Poly num = an * bn;
  Poly den = ad * bd;
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return a * RatFunc(b.den_, b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Poly exact_poly_quotient(const RatFunc& a) {
  if (a.is_polynomial()) return a.num() * (1 / a.den().leading());
  throw IdentityViolation("expected a polynomial, got " + a.to_string());
}

RatFunc scale_arg(const RatFunc& r, const Rational& gamma) {
  return RatFunc(scale_arg(r.num(), gamma), scale_arg(r.den(), gamma));
}

RatFunc dq(const RatFunc& r, const Rational& q) {
  if (r.is_polynomial()) return RatFunc(dq(r.num(), q) * (1 / r.den().leading()));
  const Poly num_q = scale_arg(r.num(), q);
  const Poly den_q = scale_arg(r.den(), q);
  // The numerator vanishes at x = 0, so the factor x cancels exactly.
  Poly top = num_q * r.den() - r.num() * den_q;
  auto [shifted, rem] = divmod(top, Poly::x());
  if (!rem.is_zero()) throw IdentityViolation("q-difference numerator not divisible by x");
  return RatFunc(std::move(shifted), (q - 1) * (r.den() * den_q));
}

}  // namespace qhs
