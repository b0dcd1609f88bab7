#include "qhs/sobolev.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qhs {

namespace {

const RatFunc& x_var() {
  static const RatFunc x(Poly::x());
  return x;
}

void require_ladder_index(const SobolevFamily& fam, int n) {
  if (n < 2 || n > fam.depth()) {
    throw std::domain_error("ladder index " + std::to_string(n) + " outside [2, " + std::to_string(fam.depth()) +
                            "]");
  }
}

}  // namespace

SobolevFamily::SobolevFamily(const QContext& ctx, int depth)
    : ctx_(ctx), mass_hat_(ctx.mass_hat()), base_(ctx.q, std::max(depth, 0)) {
  ctx_.q.canonicalize();
  ctx_.alpha.canonicalize();
  mass_hat_.canonicalize();
  ctx_.mass = ExactMass{mass_hat_};
  ctx_.validate();
  if (depth < 0) throw std::domain_error("family depth must be nonnegative");
  const Rational& q = ctx_.q;
  const int j = ctx_.j;

  polys_.reserve(static_cast<std::size_t>(depth) + 1);
  mass_factors_.reserve(static_cast<std::size_t>(depth) + 1);
  polys_.push_back(base_.poly(0));
  mass_factors_.emplace_back(0);
  for (int n = 1; n <= depth; ++n) {
    Rational c(0);
    if (n >= j && !is_zero(mass_hat_)) {
      const Rational kjj = kernel_diagonal(base_, n - 1, j, j, ctx_.alpha);
      c = mass_hat_ * q_falling_factorial(n, j, q) * base_.poly(n - j)(ctx_.alpha) / (1 + mass_hat_ * kjj);
    }
    Poly p = base_.poly(n);
    if (!is_zero(c)) p -= kernel_direct(base_, n - 1, 0, j, ctx_.alpha).poly * c;
    polys_.push_back(std::move(p));
    mass_factors_.push_back(std::move(c));
  }
}

const Poly& SobolevFamily::poly(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("HH_" + std::to_string(n) + " beyond family depth");
  return polys_[static_cast<std::size_t>(n)];
}

const Rational& SobolevFamily::mass_factor(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("mass factor index beyond family depth");
  return mass_factors_[static_cast<std::size_t>(n)];
}

const ABPair& SobolevFamily::ab(int n) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = ab_cache_[n];
  if (!slot) slot = std::make_unique<ABPair>(ab_pair(base_, n, ctx_.j, ctx_.alpha));
  return *slot;
}

const CDPair& SobolevFamily::cd(int n) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = cd_cache_[n];
  if (!slot) slot = std::make_unique<CDPair>(cd_pairs(base_, n, ctx_.j, ctx_.alpha));
  return *slot;
}

std::pair<RatFunc, RatFunc> SobolevFamily::first_connection(int n) const {
  const Rational& c = mass_factor(n);
  if (is_zero(c)) return {RatFunc(1), RatFunc()};
  const ABPair& p = ab(n);
  const RatFunc cr(c);
  return {RatFunc(1) - cr * p.a, -(cr * p.b)};
}

std::shared_ptr<const Ladder> SobolevFamily::build_core(int n) const {
  std::lock_guard lock(cache_mutex_);
  if (auto it = core_cache_.find(n); it != core_cache_.end()) return it->second;

  const Rational& q = ctx_.q;
  const RatFunc& x = x_var();
  auto l = std::make_shared<Ladder>();
  l->n = n;

  auto [e1, f1] = first_connection(n);
  auto [e1_prev, f1_prev] = first_connection(n - 1);
  const Rational gamma = base_.gamma(n - 1);
  l->e1 = std::move(e1);
  l->f1 = std::move(f1);
  l->e2 = f1_prev * RatFunc(Rational(-1 / gamma));
  l->f2 = e1_prev - x * l->e2;
  l->xi1 = det2(l->e1, l->e2, l->f1, l->f2);

  const RatFunc c(mass_factor(n));
  const CDPair& pairs = cd(n);
  l->e3 = -(c * pairs.c1);
  l->f3 = RatFunc(q_number(n, q)) - c * pairs.d1;
  l->e4 = l->e3 * l->f2 - l->e2 * l->f3;
  l->f4 = l->e1 * l->f3 - l->e3 * l->f1;

  const Rational shift2 = q_falling_factorial(n, 2, q) / gamma;
  l->e5 = RatFunc(Rational(-shift2)) - c * pairs.c2;
  l->f5 = RatFunc(shift2) * x - c * pairs.d2;
  l->e6 = l->e5 * l->f2 - l->e2 * l->f5;
  l->f6 = l->e1 * l->f5 - l->e5 * l->f1;

  l->r = l->f4 * l->xi1;
  l->s = -(l->f6 * l->xi1);
  l->t = l->e4 * l->f6 - l->e6 * l->f4;
  const Rational q_inv = 1 / q;
  l->r_bar = scale_arg(l->r, q_inv);
  l->t_bar = scale_arg(l->t, q_inv);
  l->s_bar = scale_arg(l->s, q_inv) + RatFunc(Rational(q_inv - 1)) * x * l->t_bar;

  if (!l->f1.is_zero()) {
    RatFunc theta = RatFunc(Rational(-pow(q, n - 2) * q_number(n, q))) * (l->e1 / l->f1) -
                    RatFunc(q_number(n - 1, q));
    RatFunc base = RatFunc(Rational(1 - q)) * theta + RatFunc(1);
    if (!base.is_zero()) l->hypergeometric = HypergeometricTerms{std::move(theta), RatFunc(1) / base};
  }

  core_cache_.emplace(n, l);
  return l;
}

const Ladder& SobolevFamily::ladder(int n) const {
  require_ladder_index(*this, n);
  std::lock_guard lock(cache_mutex_);
  if (auto it = ladder_cache_.find(n); it != ladder_cache_.end()) return *it->second;

  auto full = std::make_shared<Ladder>(*build_core(n));
  if (n < depth()) {
    const Ladder& next = *build_core(n + 1);
    const RatFunc& x = x_var();
    RecurrenceTerms rt;
    rt.e7 = x * next.e3 + next.f3;
    rt.f7 = RatFunc(Rational(-base_.gamma(n))) * next.e3;
    rt.e8 = rt.e7 * full->f2 - full->e2 * rt.f7;
    rt.f8 = full->e1 * rt.f7 - rt.e7 * full->f1;
    rt.xi2 = full->xi1 * next.e4;
    rt.alpha = next.xi1 * rt.e8 - full->xi1 * next.f4;
    rt.beta = next.xi1 * rt.f8;
    full->recurrence = std::move(rt);
  }
  ladder_cache_.emplace(n, full);
  return *full;
}

Poly dq_sobolev(const SobolevFamily& fam, int n) {
  Poly p = forward_shift(n, 1, fam.base());
  const Rational& c = fam.mass_factor(n);
  if (!is_zero(c)) p -= kernel_direct(fam.base(), n - 1, 1, fam.j(), fam.alpha()).poly * c;
  return p;
}

Poly dq2_sobolev(const SobolevFamily& fam, int n) {
  Poly p = forward_shift(n, 2, fam.base());
  const Rational& c = fam.mass_factor(n);
  if (!is_zero(c)) p -= kernel_direct(fam.base(), n - 1, 2, fam.j(), fam.alpha()).poly * c;
  return p;
}

Rational derivative_at_alpha_residual(const SobolevFamily& fam, int n) {
  const Rational& q = fam.q();
  const int j = fam.j();
  const Rational lhs = dq_iter(fam.poly(n), q, j)(fam.alpha());
  Rational rhs(0);
  if (n >= j) {
    const Rational kjj = n >= 1 ? kernel_diagonal(fam.base(), n - 1, j, j, fam.alpha()) : Rational(0);
    rhs = q_falling_factorial(n, j, q) * fam.base().poly(n - j)(fam.alpha()) / (1 + fam.mass_hat() * kjj);
  }
  return lhs - rhs;
}

std::pair<RatFunc, RatFunc> connection_residual(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  const RatFunc hn(fam.base().poly(n)), hn1(fam.base().poly(n - 1));
  return {l.e1 * hn + l.f1 * hn1 - RatFunc(fam.poly(n)), l.e2 * hn + l.f2 * hn1 - RatFunc(fam.poly(n - 1))};
}

std::pair<RatFunc, RatFunc> xi_identities_residual(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  const RatFunc sn(fam.poly(n)), sn1(fam.poly(n - 1));
  const RatFunc hn(fam.base().poly(n)), hn1(fam.base().poly(n - 1));
  return {l.xi1 * hn - det2(sn, sn1, l.f1, l.f2), l.xi1 * hn1 + det2(sn, sn1, l.e1, l.e2)};
}

RatFunc structure_relation_residual(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  const Poly& p = fam.poly(n);
  return l.xi1 * RatFunc(dq(p, fam.q())) - l.e4 * RatFunc(p) - l.f4 * RatFunc(fam.poly(n - 1));
}

RatFunc second_structure_residual(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  const Poly& p = fam.poly(n);
  return l.xi1 * RatFunc(dq_iter(p, fam.q(), 2)) - l.e6 * RatFunc(p) - l.f6 * RatFunc(fam.poly(n - 1));
}

RatFunc three_term_residual(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  if (!l.recurrence) {
    throw std::domain_error("three-term recurrence at n = " + std::to_string(n) + " needs HH_" +
                            std::to_string(n + 1));
  }
  const RecurrenceTerms& rt = *l.recurrence;
  return rt.xi2 * RatFunc(fam.poly(n + 1)) - rt.alpha * RatFunc(fam.poly(n)) - rt.beta * RatFunc(fam.poly(n - 1));
}

SdeCoefficients sde1_coeffs(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  return {l.r, l.s, l.t};
}

RatFunc sde1_residual(const SobolevFamily& fam, int n) {
  if (n == 0) return {};
  const SdeCoefficients c = sde1_coeffs(fam, n);
  const Poly& p = fam.poly(n);
  const Rational& q = fam.q();
  return c.r * RatFunc(dq_iter(p, q, 2)) + c.s * RatFunc(dq(p, q)) + c.t * RatFunc(p);
}

SdeCoefficients sde2_coeffs(const SobolevFamily& fam, int n) {
  const Ladder& l = fam.ladder(n);
  return {l.r_bar, l.s_bar, l.t_bar};
}

RatFunc sde2_residual(const SobolevFamily& fam, int n) {
  if (n == 0) return {};
  const SdeCoefficients c = sde2_coeffs(fam, n);
  const Poly& p = fam.poly(n);
  const Rational& q = fam.q();
  return c.r * RatFunc(dq_inv(dq(p, q), q)) + c.s * RatFunc(dq_inv(p, q)) + c.t * RatFunc(p);
}

bool hypergeometric_rep_defined(const SobolevFamily& fam, int n) {
  if (is_zero(fam.mass_hat()) || n < 2 || n > fam.depth()) return false;
  return fam.ladder(n).hypergeometric.has_value();
}

RatFunc hypergeometric_rep_residual(const SobolevFamily& fam, int n) {
  if (is_zero(fam.mass_hat())) {
    throw std::domain_error("3phi2 representation needs lambda_hat > 0; use hermite_hypergeometric instead");
  }
  const Ladder& l = fam.ladder(n);
  if (!l.hypergeometric) {
    throw std::domain_error("3phi2 representation undefined at n = " + std::to_string(n) + " (F1 vanishes)");
  }
  const Rational& q = fam.q();
  const RatFunc& psi = l.hypergeometric->psi;
  const RatFunc psi_over_q = psi * RatFunc(Rational(1 / q));
  const RatFunc x_inv(Poly(Rational(1)), Poly::x());

  const std::array<RatFunc, 3> upper{RatFunc(pow(q, -n)), x_inv, psi};
  const std::array<RatFunc, 2> lower{RatFunc(), psi_over_q};
  const RatFunc z(Poly::x() * Rational(-q));
  const RatFunc series = basic_hypergeometric<RatFunc>(upper, lower, q, z, n + 1);

  const Rational scalar = pow(q, binom2(n) - n + 2) / (q_number(n, q) * (1 - q));
  const RatFunc prefactor = -(l.f1 * (RatFunc(1) - psi_over_q) * RatFunc(scalar)) / psi;
  return prefactor * series - RatFunc(fam.poly(n));
}

}  // namespace qhs
