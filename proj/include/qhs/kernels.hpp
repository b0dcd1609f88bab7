#ifndef QHS_KERNELS_HPP
#define QHS_KERNELS_HPP

#include "qhs/poly.hpp"
#include "qhs/qhermite.hpp"
#include "qhs/ratfunc.hpp"

namespace qhs {

/// K^{(i,j)}_n(x, y0) with normalized norms, as a polynomial in x:
///   sum_{k<=n} Dq^i H_k(x) * (Dq^j H_k)(y0) / hhat_k.
struct KernelSlice {
  int n = 0;
  int i = 0;
  int j = 0;
  Rational y0;
  Poly poly;
};

/// K^{(0,j)}_{n-1}(x, y0) = A H_n + B H_{n-1}.
struct ABPair {
  RatFunc a;
  RatFunc b;
};

/// K^{(1,j)}_{n-1} = C1 H_n + D1 H_{n-1} and K^{(2,j)}_{n-1} = C2 H_n + D2 H_{n-1}.
struct CDPair {
  RatFunc c1;
  RatFunc d1;
  RatFunc c2;
  RatFunc d2;
};

/// Brute-force kernel sum; the oracle for every closed form in this module.
KernelSlice kernel_direct(const HermiteFamily& family, int n, int i, int j, const Rational& y0);

/// Scalar K^{(i,j)}_n(y0, y0).
Rational kernel_diagonal(const HermiteFamily& family, int n, int i, int j, const Rational& y0);

/// Christoffel-Darboux closed form
///   (H_{n+1}(x) H_n(y0) - H_{n+1}(y0) H_n(x)) / ((x - y0) hhat_n).
/// Throws IdentityViolation if the quotient is not a polynomial.
Poly cd_kernel(const HermiteFamily& family, int n, const Rational& y0);

/// Closed-form coefficients of K^{(0,j)}_{n-1}(x, y0) in the basis {H_n, H_{n-1}}.
/// Requires 1 <= n <= depth.
ABPair ab_pair(const HermiteFamily& family, int n, int j, const Rational& y0);

/// Closed-form coefficients of K^{(1,j)}_{n-1} and K^{(2,j)}_{n-1}, obtained
/// by q-differentiating the A/B decomposition. The closed form divides by
/// gamma_{n-1}, so it holds for n >= 2; for n = 1 both kernels vanish and all
/// four coefficients are returned as zero. Throws std::domain_error for n < 1.
CDPair cd_pairs(const HermiteFamily& family, int n, int j, const Rational& y0);

/// x-part of A/B/C/D recombined with H_n and H_{n-1}; returns the residual
/// against kernel_direct (zero when the closed form is right).
RatFunc kernel_residual(const HermiteFamily& family, int n, const RatFunc& coeff_n, const RatFunc& coeff_n1,
                        int i, int j, const Rational& y0);

}  // namespace qhs

#endif  // QHS_KERNELS_HPP
