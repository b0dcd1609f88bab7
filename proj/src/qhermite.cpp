#include "qhs/qhermite.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "qhs/qcore.hpp"
#include "qhs/ratfunc.hpp"

namespace qhs {

HermiteFamily::HermiteFamily(const Rational& q, int depth) : q_(q) {
  q_.canonicalize();
  if (sgn(q) <= 0 || q >= 1) throw std::domain_error("q must lie in (0,1), got " + to_string(q));
  if (depth < 0) throw std::domain_error("family depth must be nonnegative");
  const auto size = static_cast<std::size_t>(depth) + 1;
  polys_.reserve(size);
  gammas_.reserve(size);
  norms_.reserve(size);

  const Poly x = Poly::x();
  Poly prev;              // H_{-1}
  Poly cur(Rational(1));  // H_0
  Rational qpoch(1);      // (q;q)_n
  for (int n = 0; n <= depth; ++n) {
    const Rational gamma = pow(q, n - 1) * (1 - pow(q, n));
    polys_.push_back(cur);
    gammas_.push_back(gamma);
    norms_.push_back(qpoch * pow(q, binom2(n)));
    Poly next = x * cur - gamma * prev;
    prev = std::move(cur);
    cur = std::move(next);
    qpoch *= 1 - pow(q, n + 1);
  }
}

HermiteFamily HermiteFamily::from_rows(const Rational& q, std::vector<Poly> polys, std::vector<Rational> gammas,
                                       std::vector<Rational> norms) {
  if (polys.empty() || polys.size() != gammas.size() || polys.size() != norms.size()) {
    throw std::invalid_argument("family rows must be nonempty and of equal length");
  }
  HermiteFamily f;
  f.q_ = q;
  f.q_.canonicalize();
  f.polys_ = std::move(polys);
  f.gammas_ = std::move(gammas);
  f.norms_ = std::move(norms);
  return f;
}

const Poly& HermiteFamily::poly(int n) const {
  static const Poly zero;
  if (n == -1) return zero;
  if (n < -1 || n > depth()) throw std::out_of_range("H_" + std::to_string(n) + " beyond family depth");
  return polys_[static_cast<std::size_t>(n)];
}

const Rational& HermiteFamily::gamma(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("gamma_" + std::to_string(n) + " beyond family depth");
  return gammas_[static_cast<std::size_t>(n)];
}

const Rational& HermiteFamily::norm_hat(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("norm_" + std::to_string(n) + " beyond family depth");
  return norms_[static_cast<std::size_t>(n)];
}

Poly hermite_hypergeometric(int n, const Rational& q) {
  if (n < 0) throw std::domain_error("hermite_hypergeometric requires n >= 0");
  const RatFunc x_inv(Poly(Rational(1)), Poly::x());
  const std::array<RatFunc, 2> upper{RatFunc(pow(q, -n)), x_inv};
  const std::array<RatFunc, 1> lower{RatFunc(Rational(0))};
  const RatFunc z = RatFunc(Poly::x() * Rational(-q));
  const RatFunc series = basic_hypergeometric<RatFunc>(upper, lower, q, z, n + 1);
  return exact_poly_quotient(series) * pow(q, binom2(n));
}

Poly forward_shift(int n, int k, const HermiteFamily& family) {
  if (k < 0) throw std::domain_error("forward_shift requires k >= 0");
  if (k > n) return {};
  return family.poly(n - k) * q_falling_factorial(n, k, family.q());
}

Poly classical_sode_residual(int n, const HermiteFamily& family) {
  const Rational& q = family.q();
  const Poly& h = family.poly(n);
  const Poly sigma({Rational(-1), Rational(0), Rational(1)});
  const Poly tau = Poly::x() * Rational(1 / (1 - q));
  const Rational lambda = q_number(n, q) * (q_number(1 - n, q) - 1 / (1 - q));
  return sigma * dq(dq_inv(h, q), q) + tau * dq(h, q) + lambda * h;
}

}  // namespace qhs
