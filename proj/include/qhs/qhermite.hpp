#ifndef QHS_QHERMITE_HPP
#define QHS_QHERMITE_HPP

#include <vector>

#include "qhs/poly.hpp"
#include "qhs/rational.hpp"

namespace qhs {

/// Monic discrete q-Hermite I polynomials H_0..H_N, generated by
///   H_{n+1} = x H_n - gamma_n H_{n-1},  gamma_n = q^{n-1} (1 - q^n),
/// together with the normalized squared norms
///   hhat_n = (q;q)_n q^{C(n,2)}.
/// The true squared norm is hhat_n times the n-independent constant
/// (1-q)(q,-1,-q;q)_inf, which the numeric layer supplies.
///
/// Immutable after construction.
class HermiteFamily {
 public:
  /// Throws std::domain_error unless 0 < q < 1 and depth >= 0.
  HermiteFamily(const Rational& q, int depth);

  /// Assembles a family from explicit rows without recomputing them. Rows
  /// must have equal length. Used to feed deliberately inconsistent data to
  /// the verifier.
  static HermiteFamily from_rows(const Rational& q, std::vector<Poly> polys, std::vector<Rational> gammas,
                                 std::vector<Rational> norms);

  const Rational& q() const { return q_; }
  int depth() const { return static_cast<int>(polys_.size()) - 1; }

  /// H_n; throws std::out_of_range beyond the depth. H_{-1} is zero.
  const Poly& poly(int n) const;
  /// gamma_n (gamma_0 = 0).
  const Rational& gamma(int n) const;
  /// hhat_n.
  const Rational& norm_hat(int n) const;

  const std::vector<Poly>& polys() const { return polys_; }

 private:
  HermiteFamily() = default;

  Rational q_;
  std::vector<Poly> polys_;
  std::vector<Rational> gammas_;
  std::vector<Rational> norms_;
};

inline HermiteFamily build_family(const Rational& q, int depth) { return HermiteFamily(q, depth); }

/// q^{C(n,2)} 2phi1(q^{-n}, 1/x; 0; q, -q x), expanded to a polynomial.
Poly hermite_hypergeometric(int n, const Rational& q);

/// [n]_q^{(k)} H_{n-k}, zero for k > n.
Poly forward_shift(int n, int k, const HermiteFamily& family);

/// sigma Dq Dq^{-1} H_n + tau Dq H_n + lambda_{n,q} H_n with sigma = x^2 - 1,
/// tau = x/(1-q), lambda_{n,q} = [n]_q([1-n]_q - 1/(1-q)). Zero for a sound family.
Poly classical_sode_residual(int n, const HermiteFamily& family);

}  // namespace qhs

#endif  // QHS_QHERMITE_HPP
