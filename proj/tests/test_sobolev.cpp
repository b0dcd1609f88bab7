#include <doctest.h>

#include <vector>

#include "qhs/qcore.hpp"
#include "qhs/sobolev.hpp"

using namespace qhs;

namespace {

const Rational q35(3, 5);
const Poly x = Poly::x();

QContext worked(const Rational& lambda_hat = Rational(3, 5)) {
  return QContext{q35, Rational(3), 2, ExactMass{lambda_hat}};
}

// Coefficient of H_0 when p is written in the H basis.
Rational h0_coefficient(Poly p, const HermiteFamily& fam) {
  for (int m = p.degree(); m > 0; --m) p -= p.coefficient(m) * fam.poly(m);
  return p.coefficient(0);
}

// Sobolev inner product divided by the transcendental norm factor.
Rational normalized_inner(const Poly& f, const Poly& g, const QContext& ctx, const HermiteFamily& fam) {
  const Rational point = dq_iter(f, ctx.q, ctx.j)(ctx.alpha) * dq_iter(g, ctx.q, ctx.j)(ctx.alpha);
  return h0_coefficient(f * g, fam) + ctx.mass_hat() * point;
}

}  // namespace

TEST_CASE("worked-context polynomials") {
  const SobolevFamily fam(worked(), 5);
  CHECK(fam.poly(2) == x * x - Rational(2, 5));
  CHECK(fam.poly(3) ==
        x * x * x - Rational(294, 55) * x * x - Rational(98, 125) * x + Rational(588, 275));
  for (int n = 0; n <= 5; ++n) {
    CHECK(fam.poly(n).degree() == n);
    CHECK(fam.poly(n).leading() == 1);
  }
}

TEST_CASE("orthogonality under the normalized Sobolev product") {
  for (const Rational q : {Rational(1, 2), q35}) {
    for (const Rational alpha : {Rational(3), Rational(-2)}) {
      for (int j = 0; j <= 3; ++j) {
        const QContext ctx{q, alpha, j, ExactMass{Rational(1)}};
        const SobolevFamily fam(ctx, 7);
        const HermiteFamily base = build_family(q, 14);
        for (int n = 1; n <= 7; ++n) {
          for (int k = 0; k < n; ++k) {
            CHECK(normalized_inner(fam.poly(n), Poly::monomial(Rational(1), k), ctx, base) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("no mass gives the classical family") {
  const SobolevFamily fam(worked(Rational(0)), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(fam.poly(n) == fam.base().poly(n));
    CHECK(fam.mass_factor(n) == 0);
  }
}

TEST_CASE("low indices coincide with the classical family") {
  for (int j = 0; j <= 3; ++j) {
    const SobolevFamily fam(QContext{q35, Rational(3), j, ExactMass{Rational(1)}}, 6);
    for (int k = 0; k <= j; ++k) CHECK(fam.poly(k) == fam.base().poly(k));
    if (j + 1 <= 6) CHECK(fam.poly(j + 1) != fam.base().poly(j + 1));
  }
}

TEST_CASE("closed-form derivatives") {
  const SobolevFamily fam(worked(), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(dq_sobolev(fam, n) == dq(fam.poly(n), q35));
    CHECK(dq2_sobolev(fam, n) == dq_iter(fam.poly(n), q35, 2));
    CHECK(derivative_at_alpha_residual(fam, n) == 0);
  }
}

TEST_CASE("ladder identities in the worked context") {
  const SobolevFamily fam(worked(), 9);
  for (int n = 2; n <= 8; ++n) {
    const auto conn = connection_residual(fam, n);
    CHECK(conn.first.is_zero());
    CHECK(conn.second.is_zero());
    const auto xi = xi_identities_residual(fam, n);
    CHECK(xi.first.is_zero());
    CHECK(xi.second.is_zero());
    CHECK(structure_relation_residual(fam, n).is_zero());
    CHECK(second_structure_residual(fam, n).is_zero());
    CHECK(three_term_residual(fam, n).is_zero());
    CHECK(sde1_residual(fam, n).is_zero());
    CHECK(sde2_residual(fam, n).is_zero());
    REQUIRE(hypergeometric_rep_defined(fam, n));
    CHECK(hypergeometric_rep_residual(fam, n).is_zero());
  }
}

TEST_CASE("ladder bookkeeping") {
  const SobolevFamily fam(worked(), 5);
  const Ladder& l = ladder_build(fam, 3);
  CHECK(l.n == 3);
  CHECK(l.xi1 == det2(l.e1, l.f1, l.e2, l.f2));
  CHECK(l.recurrence.has_value());
  CHECK_FALSE(fam.ladder(5).recurrence.has_value());
  CHECK_THROWS(fam.ladder(1));
  CHECK_THROWS(fam.ladder(6));
  CHECK_THROWS(three_term_residual(fam, 5));
  const SdeCoefficients s1 = sde1_coeffs(fam, 3);
  CHECK(s1.r == l.r);
  const SdeCoefficients s2 = sde2_coeffs(fam, 3);
  CHECK(s2.t == scale_arg(l.t, 1 / q35));
}

TEST_CASE("degenerate ladders stay consistent") {
  const SobolevFamily fam(worked(Rational(0)), 6);
  for (int n = 2; n <= 5; ++n) {
    CHECK(sde1_residual(fam, n).is_zero());
    CHECK(sde2_residual(fam, n).is_zero());
    CHECK(three_term_residual(fam, n).is_zero());
  }
  CHECK_FALSE(hypergeometric_rep_defined(fam, 3));
  CHECK_THROWS_AS(hypergeometric_rep_residual(fam, 3), std::domain_error);
  CHECK(sde1_residual(fam, 0).is_zero());
}

TEST_CASE("invalid contexts") {
  QContext numeric = worked();
  numeric.mass = NumericMass{Rational(1)};
  CHECK_THROWS(SobolevFamily(numeric, 3));
  QContext bad = worked();
  bad.alpha = Rational(1, 2);
  CHECK_THROWS(SobolevFamily(bad, 3));
}
