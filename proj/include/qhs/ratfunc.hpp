#ifndef QHS_RATFUNC_HPP
#define QHS_RATFUNC_HPP

#include <stdexcept>
#include <string>

#include "qhs/poly.hpp"

namespace qhs {

/// Raised when an identity that must hold exactly leaves a nonzero residual.
/// The message carries the canonical form of the witness.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quotient of two polynomials kept in canonical form: coprime numerator and
/// denominator, denominator monic. Zero is 0/1. Equality of canonical forms
/// is equality of rational functions.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `den` is zero.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at a point; throws std::domain_error at a pole.
  Rational operator()(const Rational& at) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error when `b` is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

/// Returns the polynomial a represents; throws IdentityViolation when the
/// denominator does not divide the numerator.
Poly exact_poly_quotient(const RatFunc& a);

/// r(gamma * x).
RatFunc scale_arg(const RatFunc& r, const Rational& gamma);

/// Euler-Jackson q-derivative of a rational function:
/// (N(qx) D(x) - N(x) D(qx)) / ((q - 1) x D(x) D(qx)).
RatFunc dq(const RatFunc& r, const Rational& q);

/// a*d - b*c
inline RatFunc det2(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) { return a * d - b * c; }

}  // namespace qhs

#endif  // QHS_RATFUNC_HPP
