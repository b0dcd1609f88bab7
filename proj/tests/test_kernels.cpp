#include <doctest.h>

#include "qhs/kernels.hpp"
#include "qhs/qcore.hpp"

using namespace qhs;

namespace {
const Rational q35(3, 5);
const Poly x = Poly::x();
}  // namespace

TEST_CASE("direct kernel small cases") {
  const HermiteFamily fam = build_family(q35, 6);
  CHECK(kernel_direct(fam, 0, 0, 0, Rational(3)).poly == Poly(Rational(1)));
  CHECK(kernel_direct(fam, 1, 0, 0, Rational(3)).poly == Rational(15, 2) * x + 1);
  // Dq^2 kills H_0 and H_1
  const Poly k22 = kernel_direct(fam, 2, 0, 2, Rational(3)).poly;
  CHECK(k22 == Rational(8, 5) * Rational(625, 96) * (x * x - Rational(2, 5)));
  CHECK(kernel_direct(fam, 1, 0, 2, Rational(3)).poly.is_zero());
  CHECK(kernel_diagonal(fam, 1, 0, 0, Rational(3)) == Rational(47, 2));
}

TEST_CASE("kernel symmetry") {
  const HermiteFamily fam = build_family(q35, 6);
  const Rational a(3), b(-2);
  for (int n = 0; n <= 6; ++n) {
    CHECK(kernel_direct(fam, n, 0, 0, a).poly(b) == kernel_direct(fam, n, 0, 0, b).poly(a));
    CHECK(kernel_direct(fam, n, 1, 2, a).poly(b) == kernel_direct(fam, n, 2, 1, b).poly(a));
  }
}

TEST_CASE("kernel expansion in the H basis") {
  const HermiteFamily fam = build_family(q35, 6);
  const Rational y(3);
  const Poly k = kernel_direct(fam, 4, 0, 0, y).poly;
  // the coefficient of H_m in K_4(x,y) is H_m(y)/hhat_m
  Poly rest = k;
  for (int m = 4; m >= 0; --m) {
    const Rational c = rest.coefficient(m);
    CHECK(c == fam.poly(m)(y) / fam.norm_hat(m));
    rest -= c * fam.poly(m);
  }
  CHECK(rest.is_zero());
}

TEST_CASE("Christoffel-Darboux closed form") {
  for (const Rational q : {Rational(1, 2), q35, Rational(9, 10)}) {
    const HermiteFamily fam = build_family(q, 9);
    for (const Rational y : {Rational(3), Rational(-2)}) {
      for (int n = 0; n <= 8; ++n) CHECK(cd_kernel(fam, n, y) == kernel_direct(fam, n, 0, 0, y).poly);
    }
  }
}

TEST_CASE("A/B and C/D coefficients") {
  for (const Rational q : {Rational(1, 2), q35, Rational(9, 10)}) {
    const HermiteFamily fam = build_family(q, 8);
    for (const Rational y : {Rational(3), Rational(-2)}) {
      for (int j = 0; j <= 3; ++j) {
        for (int n = 1; n <= 8; ++n) {
          const ABPair ab = ab_pair(fam, n, j, y);
          CHECK(kernel_residual(fam, n, ab.a, ab.b, 0, j, y).is_zero());
          const CDPair cd = cd_pairs(fam, n, j, y);
          CHECK(kernel_residual(fam, n, cd.c1, cd.d1, 1, j, y).is_zero());
          CHECK(kernel_residual(fam, n, cd.c2, cd.d2, 2, j, y).is_zero());
        }
      }
    }
  }
}

TEST_CASE("wrong coefficients leave a residual") {
  const HermiteFamily fam = build_family(q35, 5);
  const ABPair ab = ab_pair(fam, 4, 2, Rational(3));
  CHECK_FALSE(kernel_residual(fam, 4, ab.a + RatFunc(1), ab.b, 0, 2, Rational(3)).is_zero());
  CHECK_THROWS(ab_pair(fam, 0, 2, Rational(3)));
  CHECK_THROWS(cd_pairs(fam, 0, 2, Rational(3)));
  const CDPair one = cd_pairs(fam, 1, 2, Rational(3));
  CHECK(one.c1.is_zero());
  CHECK(one.d2.is_zero());
}
