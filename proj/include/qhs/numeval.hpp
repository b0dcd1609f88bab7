#ifndef QHS_NUMEVAL_HPP
#define QHS_NUMEVAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <vector>

#include "qhs/poly.hpp"
#include "qhs/qcore.hpp"
#include "qhs/rational.hpp"

namespace qhs {

/// Variable-precision binary float; working precision is set per thread by
/// WorkingPrecision.
using Real = boost::multiprecision::mpfr_float;

struct NumericConfig {
  int digits = 34;                 ///< decimal working precision, >= 15
  double tail_exponent = -25;      ///< truncation tolerance is 10^tail_exponent, below 1e-6
  int mass_round_digits = 40;      ///< digits kept when lambda is rounded to lambda_hat

  /// Throws std::domain_error when the invariants above fail.
  void validate() const;
  Real tail_tol() const;
};

/// Sets the thread's default MPFR precision for the guard's lifetime.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(int digits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned previous_;
};

Real to_real(const Rational& r);

/// (a;q)_inf, truncated once |a| q^k < tail_tol (1 - q); relative error is
/// then below tail_tol.
Real inf_pochhammer(const Real& a, const Real& q, const NumericConfig& cfg);

/// (qx;q)_inf (-qx;q)_inf = (q^2 x^2; q^2)_inf, in (0, 1] for |x| <= 1.
Real weight(const Real& x, const Real& q, const NumericConfig& cfg);

/// Jackson integral over [-1, 1]:
///   (1-q) sum_{k>=0} q^k (f(q^k) + f(-q^k)).
/// `envelope` bounds |f| on [-1,1]; summation stops once the remaining
/// geometric tail envelope * q^k / (1-q) * 2(1-q) falls below tail_tol.
Real q_integral(const std::function<Real(const Real&)>& f, const Real& q, const Real& envelope,
                const NumericConfig& cfg);

/// (1-q)(q;q)_inf(-1;q)_inf(-q;q)_inf: the factor relating hhat_n to ||H_n||^2.
Real norm_constant(const Rational& q, const NumericConfig& cfg);

/// Converts a NumericMass context into an ExactMass one by rounding
/// lambda / norm_constant to cfg.mass_round_digits significant digits.
/// ExactMass contexts are returned unchanged.
QContext to_exact_context(const QContext& ctx, const NumericConfig& cfg);

/// Rounds a positive real to a rational with `digits` significant digits.
Rational round_to_rational(const Real& v, int digits);

/// Jackson integral of p(x) * weight(x).
Real weighted_integral(const Poly& p, const Rational& q, const NumericConfig& cfg);

/// <f, g>_lambda = int f g w d_qx + lambda (Dq^j f)(alpha) (Dq^j g)(alpha),
/// with lambda taken from the NumericMass (or lambda_hat * norm_constant for an
/// ExactMass). The point-mass factors are computed exactly.
Real sobolev_inner(const Poly& f, const Poly& g, const QContext& ctx, const NumericConfig& cfg);

/// Gram matrix of `basis` under sobolev_inner.
std::vector<std::vector<Real>> gram_matrix(const std::vector<Poly>& basis, const QContext& ctx,
                                           const NumericConfig& cfg);

/// max_{m != n} |G_mn| / sqrt(G_mm G_nn).
Real max_relative_off_diagonal(const std::vector<std::vector<Real>>& gram);

}  // namespace qhs

#endif  // QHS_NUMEVAL_HPP
