#include "qhs/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "qhs/qcore.hpp"

namespace qhs {

// mpq_class(p, q) does not reduce, so coefficients are canonicalized on entry.
Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(const Rational& constant) {
  if (!qhs::is_zero(constant)) {
    coeffs_.push_back(constant);
    coeffs_.back().canonicalize();
  }
}

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (qhs::is_zero(c)) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && qhs::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (qhs::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (qhs::is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      term = lhs.coeffs_[i] * rhs.coeffs_[k];
      out[i + k] += term;
    }
  }
  return Poly(std::move(out));
}

Poly operator-(Poly p) {
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (qhs::is_zero(c)) continue;
    Rational mag = abs_value(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << qhs::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  Rational t;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (qhs::is_zero(rem[k])) continue;
    const Rational factor = rem[k] * inv_lead;
    quot[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      t = factor * bc[i];
      rem[k - db + i] -= t;
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a.monic();
  Poly v = b.monic();
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly scale_arg(const Poly& p, const Rational& gamma) {
  std::vector<Rational> c = p.coefficients();
  Rational power(1);
  for (auto& a : c) {
    a *= power;
    power *= gamma;
  }
  return Poly(std::move(c));
}

Poly dq(const Poly& p, const Rational& q) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * q_number(static_cast<long>(k), q);
  return Poly(std::move(out));
}

Poly dq_inv(const Poly& p, const Rational& q) {
  if (qhs::is_zero(q)) throw std::domain_error("dq_inv requires q != 0");
  return dq(p, Rational(1 / q));
}

Poly dq_iter(const Poly& p, const Rational& q, int k) {
  if (k < 0) throw std::domain_error("dq_iter requires k >= 0");
  Poly r = p;
  for (int i = 0; i < k && !r.is_zero(); ++i) r = dq(r, q);
  return r;
}

}  // namespace qhs
