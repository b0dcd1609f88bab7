#ifndef QHS_POLY_HPP
#define QHS_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qhs/rational.hpp"

namespace qhs {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored by ascending degree with trailing zeros trimmed,
/// so the zero polynomial is the empty sequence and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly x();
  static Poly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  /// Horner evaluation in any ring constructible from a Rational via `convert`.
  template <class T, class Convert>
  T evaluate(const T& at, Convert convert) const {
    T acc = convert(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + convert(*it);
    return acc;
  }

  Poly monic() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// p(gamma * x).
Poly scale_arg(const Poly& p, const Rational& gamma);

/// Euler-Jackson q-derivative, applied coefficient-wise: x^k -> [k]_q x^{k-1}.
Poly dq(const Poly& p, const Rational& q);

/// The same operator with base 1/q.
Poly dq_inv(const Poly& p, const Rational& q);

/// k-fold iterate of dq; k = 0 returns p.
Poly dq_iter(const Poly& p, const Rational& q, int k);

}  // namespace qhs

#endif  // QHS_POLY_HPP
