#include "qhs/qcore.hpp"

#include <string>

namespace qhs {

void QContext::validate() const {
  if (sgn(q) <= 0 || q >= 1) throw std::domain_error("q must lie in (0,1), got " + to_string(q));
  if (abs_value(alpha) <= 1) {
    throw std::domain_error("alpha must satisfy |alpha| > 1, got " + to_string(alpha));
  }
  if (j < 0) throw std::domain_error("derivative order j must be nonnegative");
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ExactMass>) {
          if (sgn(m.lambda_hat) < 0) throw std::domain_error("lambda_hat must be nonnegative");
        } else {
          if (sgn(m.lambda) < 0) throw std::domain_error("lambda must be nonnegative");
          if (m.digits < 1) throw std::domain_error("precision must be positive");
        }
      },
      mass);
}

const Rational& QContext::mass_hat() const {
  if (const auto* m = std::get_if<ExactMass>(&mass)) return m->lambda_hat;
  throw std::domain_error("context carries a numeric mass; convert it to lambda_hat first");
}

Rational q_number(long n, const Rational& q) {
  if (q == 1) throw std::domain_error("q_number requires q != 1");
  if (n == 0) return Rational(0);
  if (n > 0) {
    // 1 + q + ... + q^{n-1}
    Rational sum(0), power(1);
    for (long k = 0; k < n; ++k) {
      sum += power;
      power *= q;
    }
    return sum;
  }
  return (1 - pow(q, n)) / (1 - q);
}

Rational q_factorial(long n, const Rational& q) {
  if (n < 0) throw std::domain_error("q_factorial requires n >= 0");
  Rational r(1);
  for (long k = 2; k <= n; ++k) r *= q_number(k, q);
  return r;
}

Rational q_pochhammer(const Rational& a, const Rational& q, long n) {
  if (n < 0) throw std::domain_error("q_pochhammer requires n >= 0");
  Rational r(1), power(1);
  for (long k = 0; k < n; ++k) {
    r *= 1 - a * power;
    power *= q;
  }
  return r;
}

Rational q_binomial(long n, long k, const Rational& q) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("q_binomial requires 0 <= k <= n");
  const Rational qq = q_pochhammer(q, q, n);
  return qq / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

Rational q_falling_factorial(long n, long k, const Rational& q) {
  if (k < 0) throw std::domain_error("q_falling_factorial requires k >= 0");
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= q_number(n - i, q);
    if (is_zero(r)) break;
  }
  return r;
}

Poly jhc_power(const Rational& y, long n, const Rational& q) {
  if (n < 0) throw std::domain_error("jhc_power requires n >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational minus_y = -y;
  for (long k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(n - k)] = q_binomial(n, k, q) * pow(q, binom2(k)) * pow(minus_y, k);
  }
  return Poly(std::move(c));
}

}  // namespace qhs
