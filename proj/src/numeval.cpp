#include "qhs/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qhs {

namespace {

constexpr int kGuardDigits = 8;

// Jackson nodes t_k = q^k with weight values w(t_k) = w(-t_k), truncated by
// the same rule as q_integral.
struct JacksonNodes {
  std::vector<Real> t;
  std::vector<Real> w;
};

JacksonNodes jackson_nodes(const Real& q, const Real& envelope, const NumericConfig& cfg) {
  JacksonNodes nodes;
  const Real tol = cfg.tail_tol();
  Real t = 1;
  while (2 * envelope * t >= tol) {
    nodes.t.push_back(t);
    nodes.w.push_back(weight(t, q, cfg));
    t *= q;
  }
  return nodes;
}

std::vector<Real> real_coefficients(const Poly& p) {
  std::vector<Real> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.push_back(to_real(a));
  return c;
}

Real horner(const std::vector<Real>& c, const Real& at) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Real coefficient_envelope(const Poly& p) {
  Real e = 0;
  for (const auto& a : p.coefficients()) e += abs(to_real(a));
  return e;
}

Real integrate_on(const JacksonNodes& nodes, const std::vector<Real>& c, const Real& q) {
  Real sum = 0;
  for (std::size_t k = 0; k < nodes.t.size(); ++k) {
    sum += nodes.t[k] * nodes.w[k] * (horner(c, nodes.t[k]) + horner(c, Real(-nodes.t[k])));
  }
  return (1 - q) * sum;
}

Real lambda_of(const QContext& ctx, const NumericConfig& cfg) {
  if (const auto* m = std::get_if<NumericMass>(&ctx.mass)) return to_real(m->lambda);
  return to_real(ctx.mass_hat()) * norm_constant(ctx.q, cfg);
}

Real point_mass_term(const Poly& f, const Poly& g, const QContext& ctx, const NumericConfig& cfg) {
  const Rational df = dq_iter(f, ctx.q, ctx.j)(ctx.alpha);
  const Rational dg = dq_iter(g, ctx.q, ctx.j)(ctx.alpha);
  if (is_zero(df) || is_zero(dg)) return Real(0);
  return lambda_of(ctx, cfg) * to_real(Rational(df * dg));
}

}  // namespace

void NumericConfig::validate() const {
  if (digits < 15) throw std::domain_error("numeric precision must be at least 15 digits");
  if (!(tail_exponent < -6)) throw std::domain_error("tail tolerance must be below 1e-6");
  if (mass_round_digits < 1) throw std::domain_error("mass rounding digits must be positive");
}

Real NumericConfig::tail_tol() const { return pow(Real(10), Real(tail_exponent)); }

WorkingPrecision::WorkingPrecision(int digits) : previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits));
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_); }

Real to_real(const Rational& r) {
  Real v;
  mpfr_set_q(v.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return v;
}

Real inf_pochhammer(const Real& a, const Real& q, const NumericConfig& cfg) {
  const Real stop = cfg.tail_tol() * (1 - q);
  Real product = 1;
  Real term = a;  // a q^k
  while (abs(term) >= stop) {
    product *= 1 - term;
    term *= q;
  }
  return product;
}

Real weight(const Real& x, const Real& q, const NumericConfig& cfg) {
  return inf_pochhammer(Real(q * x), q, cfg) * inf_pochhammer(Real(-q * x), q, cfg);
}

Real q_integral(const std::function<Real(const Real&)>& f, const Real& q, const Real& envelope,
                const NumericConfig& cfg) {
  const Real tol = cfg.tail_tol();
  Real sum = 0;
  Real t = 1;
  while (2 * envelope * t >= tol) {
    sum += t * (f(t) + f(Real(-t)));
    t *= q;
  }
  return (1 - q) * sum;
}

Real norm_constant(const Rational& q, const NumericConfig& cfg) {
  const WorkingPrecision guard(cfg.digits + kGuardDigits);
  const Real qr = to_real(q);
  return (1 - qr) * inf_pochhammer(qr, qr, cfg) * inf_pochhammer(Real(-1), qr, cfg) *
         inf_pochhammer(Real(-qr), qr, cfg);
}

Rational round_to_rational(const Real& v, int digits) {
  if (v == 0) return Rational(0);
  // v = m * 10^e with |m| an integer of `digits` digits
  const long e = static_cast<long>(floor(log10(abs(v)))) - digits + 1;
  const Real scaled = v / pow(Real(10), Real(e));
  Integer m;
  mpfr_get_z(m.get_mpz_t(), scaled.backend().data(), MPFR_RNDN);
  return Rational(m) * pow(Rational(10), e);
}

QContext to_exact_context(const QContext& ctx, const NumericConfig& cfg) {
  const auto* m = std::get_if<NumericMass>(&ctx.mass);
  if (m == nullptr) return ctx;
  const WorkingPrecision guard(std::max(cfg.digits, cfg.mass_round_digits) + kGuardDigits);
  QContext out = ctx;
  if (is_zero(m->lambda)) {
    out.mass = ExactMass{Rational(0)};
    return out;
  }
  const Real hat = to_real(m->lambda) / norm_constant(ctx.q, cfg);
  out.mass = ExactMass{round_to_rational(hat, cfg.mass_round_digits)};
  return out;
}

Real weighted_integral(const Poly& p, const Rational& q, const NumericConfig& cfg) {
  const WorkingPrecision guard(cfg.digits + kGuardDigits);
  const Real qr = to_real(q);
  const JacksonNodes nodes = jackson_nodes(qr, coefficient_envelope(p), cfg);
  return integrate_on(nodes, real_coefficients(p), qr);
}

Real sobolev_inner(const Poly& f, const Poly& g, const QContext& ctx, const NumericConfig& cfg) {
  const WorkingPrecision guard(cfg.digits + kGuardDigits);
  return weighted_integral(f * g, ctx.q, cfg) + point_mass_term(f, g, ctx, cfg);
}

std::vector<std::vector<Real>> gram_matrix(const std::vector<Poly>& basis, const QContext& ctx,
                                           const NumericConfig& cfg) {
  const WorkingPrecision guard(cfg.digits + kGuardDigits);
  const Real qr = to_real(ctx.q);
  Real envelope = 1;
  for (const auto& f : basis) {
    for (const auto& g : basis) envelope = std::max(envelope, Real(coefficient_envelope(f * g)));
  }
  const JacksonNodes nodes = jackson_nodes(qr, envelope, cfg);
  const std::size_t n = basis.size();
  std::vector<std::vector<Real>> gram(n, std::vector<Real>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Real v = integrate_on(nodes, real_coefficients(basis[a] * basis[b]), qr) +
                     point_mass_term(basis[a], basis[b], ctx, cfg);
      gram[a][b] = v;
      gram[b][a] = v;
    }
  }
  return gram;
}

Real max_relative_off_diagonal(const std::vector<std::vector<Real>>& gram) {
  Real worst = 0;
  for (std::size_t a = 0; a < gram.size(); ++a) {
    for (std::size_t b = 0; b < gram.size(); ++b) {
      if (a == b) continue;
      const Real rel = abs(gram[a][b]) / sqrt(gram[a][a] * gram[b][b]);
      if (rel > worst) worst = rel;
    }
  }
  return worst;
}

}  // namespace qhs
