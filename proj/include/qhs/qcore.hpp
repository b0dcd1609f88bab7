#ifndef QHS_QCORE_HPP
#define QHS_QCORE_HPP

#include <span>
#include <stdexcept>
#include <variant>

#include "qhs/poly.hpp"
#include "qhs/rational.hpp"

namespace qhs {

/// Point mass given directly in normalized units (lambda divided by the
/// transcendental norm factor of the base family).
struct ExactMass {
  Rational lambda_hat;
};

/// Point mass given in the units of the weighted inner product; converting it
/// to normalized units needs the numeric layer at `digits` precision.
struct NumericMass {
  Rational lambda;
  int digits = 34;
};

using MassSpec = std::variant<ExactMass, NumericMass>;

/// Parameters shared by every family computation.
struct QContext {
  Rational q;
  Rational alpha;
  int j = 0;  ///< order of the q-derivative in the point-mass term
  MassSpec mass = ExactMass{Rational(0)};

  /// Throws std::domain_error unless 0 < q < 1, |alpha| > 1, j >= 0 and the
  /// mass is nonnegative.
  void validate() const;

  bool has_exact_mass() const { return std::holds_alternative<ExactMass>(mass); }
  /// lambda_hat of an ExactMass context; throws for NumericMass.
  const Rational& mass_hat() const;
};

/// [n]_q = (1 - q^n) / (1 - q), defined for every integer n.
Rational q_number(long n, const Rational& q);

/// [n]_q! ; throws std::domain_error for n < 0.
Rational q_factorial(long n, const Rational& q);

/// (a;q)_n for finite n >= 0.
Rational q_pochhammer(const Rational& a, const Rational& q, long n);

/// Gaussian binomial; throws std::domain_error unless 0 <= k <= n.
Rational q_binomial(long n, long k, const Rational& q);

/// [n]_q^{(k)} = prod_{i<k} [n - i]_q, which equals (q^{-n};q)_k (q-1)^{-k} q^{kn - C(k,2)}.
Rational q_falling_factorial(long n, long k, const Rational& q);

/// (x [-]_q y)^n expanded as a polynomial in x. It equals prod_{i<n}(x - q^i y).
Poly jhc_power(const Rational& y, long n, const Rational& q);

inline long binom2(long k) { return k * (k - 1) / 2; }

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite partial sum (k < terms) of the basic hypergeometric series
/// r_phi_s(a; b; q, z), including the ((-1)^k q^{C(k,2)})^{1+s-r} factor.
///
/// `Field` is Rational for scalar series; the same routine runs over
/// rational functions when parameters depend on x. The series must terminate
/// within `terms` (or the caller accepts truncation). A vanishing
/// denominator Pochhammer factor throws PoleError.
template <class Field>
Field basic_hypergeometric(std::span<const Field> numerator_params,
                           std::span<const Field> denominator_params, const Rational& q,
                           const Field& z, long terms) {
  const long r = static_cast<long>(numerator_params.size());
  const long s = static_cast<long>(denominator_params.size());
  const long twist = 1 + s - r;

  Field sum(Rational(0));
  Field term(Rational(1));  // k-th summand
  for (long k = 0; k < terms; ++k) {
    if (k > 0) {
      // Ratio of consecutive summands.
      const Rational qk1 = pow(q, k - 1);
      Field ratio = z;
      for (const Field& a : numerator_params) ratio = ratio * (Field(Rational(1)) - a * Field(qk1));
      for (const Field& b : denominator_params) {
        Field factor = Field(Rational(1)) - b * Field(qk1);
        if (is_zero(factor)) throw PoleError("denominator Pochhammer vanishes in basic hypergeometric series");
        ratio = ratio / factor;
      }
      ratio = ratio / Field(Rational(1) - pow(q, k));
      if (twist != 0) {
        // ((-1)^k q^{C(k,2)}) / ((-1)^{k-1} q^{C(k-1,2)}) = -q^{k-1}
        Rational step = -qk1;
        ratio = ratio * Field(pow(step, twist));
      }
      term = term * ratio;
    }
    if (is_zero(term)) break;
    sum = sum + term;
  }
  return sum;
}

}  // namespace qhs

#endif  // QHS_QCORE_HPP
