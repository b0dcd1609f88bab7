#include "qhs/kernels.hpp"

#include <stdexcept>

#include "qhs/qcore.hpp"

namespace qhs {

KernelSlice kernel_direct(const HermiteFamily& family, int n, int i, int j, const Rational& y0) {
  if (n < 0 || i < 0 || j < 0) throw std::domain_error("kernel indices must be nonnegative");
  const Rational& q = family.q();
  Poly sum;
  for (int k = std::max(i, j); k <= n; ++k) {
    const Poly& h = family.poly(k);
    const Rational at_y = dq_iter(h, q, j)(y0);
    if (is_zero(at_y)) continue;
    sum += dq_iter(h, q, i) * Rational(at_y / family.norm_hat(k));
  }
  return KernelSlice{n, i, j, y0, std::move(sum)};
}

Rational kernel_diagonal(const HermiteFamily& family, int n, int i, int j, const Rational& y0) {
  return kernel_direct(family, n, i, j, y0).poly(y0);
}

Poly cd_kernel(const HermiteFamily& family, int n, const Rational& y0) {
  if (n < 0) throw std::domain_error("cd_kernel requires n >= 0");
  const Poly& hn = family.poly(n);
  const Poly& hn1 = family.poly(n + 1);
  Poly top = hn1 * hn(y0) - hn * hn1(y0);
  Poly bottom = Poly({Rational(-y0), Rational(1)}) * family.norm_hat(n);
  return exact_poly_quotient(RatFunc(std::move(top), std::move(bottom)));
}

namespace {

// [j]! / (hhat_{n-1} (x [-] y0)^{j+1}) * sum_k Dq^k h(y0) (x [-] y0)^k / [k]!
RatFunc taylor_block(const HermiteFamily& family, const Poly& h, int n, int j, const Rational& y0) {
  const Rational& q = family.q();
  Poly sum;
  Poly derivative = h;
  for (int k = 0; k <= j; ++k) {
    const Rational value = derivative(y0);
    if (!is_zero(value)) sum += jhc_power(y0, k, q) * Rational(value / q_factorial(k, q));
    derivative = dq(derivative, q);
  }
  sum *= q_factorial(j, q);
  return RatFunc(std::move(sum), jhc_power(y0, j + 1, q) * family.norm_hat(n - 1));
}

}  // namespace

ABPair ab_pair(const HermiteFamily& family, int n, int j, const Rational& y0) {
  if (n < 1) throw std::domain_error("ab_pair requires n >= 1");
  if (j < 0) throw std::domain_error("ab_pair requires j >= 0");
  return ABPair{taylor_block(family, family.poly(n - 1), n, j, y0),
                -taylor_block(family, family.poly(n), n, j, y0)};
}

CDPair cd_pairs(const HermiteFamily& family, int n, int j, const Rational& y0) {
  if (n < 1) throw std::domain_error("cd_pairs requires n >= 1");
  if (n == 1) return {};
  const Rational& q = family.q();
  const ABPair ab = ab_pair(family, n, j, y0);
  const Rational shift = q_number(n - 1, q) / family.gamma(n - 1);
  const Rational qn = q_number(n, q);
  const RatFunc x = RatFunc(Poly::x());

  // One q-derivative of  U H_n + V H_{n-1}  re-expressed in {H_n, H_{n-1}}.
  auto differentiate = [&](const RatFunc& u, const RatFunc& v) {
    const RatFunc v_q = scale_arg(v, q);
    RatFunc c = dq(u, q) - RatFunc(shift) * v_q;
    RatFunc d = RatFunc(qn) * scale_arg(u, q) + RatFunc(shift) * x * v_q + dq(v, q);
    return std::pair{std::move(c), std::move(d)};
  };

  auto [c1, d1] = differentiate(ab.a, ab.b);
  auto [c2, d2] = differentiate(c1, d1);
  return CDPair{std::move(c1), std::move(d1), std::move(c2), std::move(d2)};
}

RatFunc kernel_residual(const HermiteFamily& family, int n, const RatFunc& coeff_n, const RatFunc& coeff_n1,
                        int i, int j, const Rational& y0) {
  const RatFunc combined = coeff_n * RatFunc(family.poly(n)) + coeff_n1 * RatFunc(family.poly(n - 1));
  return combined - RatFunc(kernel_direct(family, n - 1, i, j, y0).poly);
}

}  // namespace qhs
