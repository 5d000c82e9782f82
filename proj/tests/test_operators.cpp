#include <doctest.h>

#include "helpers.hpp"
#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/operators.hpp"
#include "hyperck/random.hpp"

using namespace hyperck;
using namespace testing;

TEST_CASE("dirac hand values") {
  for (const char* spec : {"clifford:n=3,m=3,p=0", "clifford:n=4,m=4,p=2", "octonion:m=5,p=1"}) {
    auto s = Setting::parse(spec);
    CHECK(dirac(s, X(s, 0)) == K(s, Rational(1)));
    for (int i = 0; i <= s.m(); ++i) CHECK(dirac(s, X(s, static_cast<std::size_t>(i))) == K(s, s.v(i)));
    Poly g = X(s, 0) + Rational(1, s.q()) * vec(s);
    CHECK(dirac(s, g).is_zero());
    CHECK(dirac_split(s, vec(s)).vector == K(s, Rational(-s.q())));
  }
}

TEST_CASE("dirac split of x0 x_{p+1}") {
  auto s = Setting::parse("clifford:n=3,m=3,p=1");
  Poly f = X(s, 0) * X(s, 2);
  auto d = dirac_split(s, f);
  CHECK(d.base == X(s, 2));
  CHECK(d.vector == left_mul(s.v(2), X(s, 0)));
  CHECK(d.base + d.vector == dirac(s, f));
}

TEST_CASE("laplacian hand values") {
  auto s = Setting::parse("clifford:n=3,m=3,p=0");
  CHECK(laplacian(X(s, 0) * X(s, 0)) == K(s, Rational(2)));
  Poly z = X(s, 0) + vec(s);
  CHECK(laplacian(z * z) == K(s, Rational(-4)));
  CHECK(dirac_power(s, X(s, 0) * X(s, 0), 2) == K(s, Rational(2)));
}

TEST_CASE("laplacian factorizations agree") {
  Rng rng(2);
  for (const char* spec : {"clifford:n=3,m=3,p=1", "octonion:m=7,p=3"}) {
    auto s = Setting::parse(spec);
    for (int t = 0; t < 10; ++t) {
      Poly f = random_ambient(rng, s, PolyShape{4, 3, 2});
      Poly l = laplacian(f);
      CHECK(dirac_bar(s, dirac(s, f)) == l);
      CHECK(dirac(s, dirac_bar(s, f)) == l);
      CHECK(dirac_bar_right(s, dirac_right(s, f)) == l);
      CHECK(dirac_right(s, dirac_bar_right(s, f)) == l);
    }
  }
}

TEST_CASE("gamma operator") {
  auto s = Setting::parse("clifford:n=4,m=4,p=1");
  CHECK(gamma_spherical(s, X(s, 0)).is_zero());
  CHECK(gamma_spherical(s, vec(s)) == Rational(s.q() - 1) * vec(s));
  // Gamma(f) = (q-1) PO part for slice functions.
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    StemPair st = random_stem(rng, s, PolyShape{3, 3, 2});
    Poly f = materialize(s, st);
    CHECK(gamma_spherical(s, f) == Rational(s.q() - 1) * partial_even_odd(s, f).odd);
  }
}

TEST_CASE("slice dirac") {
  auto s = Setting::parse("clifford:n=4,m=4,p=1");
  SpherePoint w{{Rational(3, 5), Rational(4, 5), Rational(0)}};
  Poly z1 = materialize(s, ck_extend(s, SX(s, 1)));
  CHECK(slice_dirac(s, z1, w).is_zero());
  CHECK(slice_dirac(s, K(s, E(s.algebra(), "e2")), w).is_zero());
  SpherePoint e{{Rational(1), Rational(0), Rational(0)}};
  CHECK_FALSE(slice_dirac(s, X(s, 2), e).is_zero());
  CHECK(slice_dirac(s, X(s, 2), e) == Poly::constant(s.algebra(), s.stem_vars(), s.v(2)));
}

TEST_CASE("radial iterate and stem systems") {
  auto s = Setting::parse("clifford:n=3,m=3,p=0");
  StemPair x2{GX(s, 0) * GX(s, 0) - GU(s), 2 * GX(s, 0)};
  CHECK(radial_iterate(s, x2, 0) == x2);
  StemPair r1 = radial_iterate(s, x2, 1);
  CHECK(r1.G1 == GK(s, Rational(-2)));
  CHECK(r1.G2.is_zero());
  CHECK(cr_check(s, x2));

  auto s2 = Setting::parse("clifford:n=3,m=3,p=1");
  StemPair z1{GX(s2, 1), GK(s2, s2.v(1))};
  CHECK(cr_check(s2, z1));
  CHECK_FALSE(vekua_check(s2, z1));
  StemPair g{GX(s2, 0), GK(s2, Rational(1, s2.q()))};
  CHECK(vekua_check(s2, g));
  StemPair c{GK(s2, E(s2.algebra(), "e3")), GK(s2, Rational(0))};
  CHECK(cr_check(s2, c));
  CHECK(vekua_check(s2, c));
  // A non-regular stem fails C-R.
  StemPair bad{GX(s2, 0), GK(s2, Rational(0))};
  CHECK_FALSE(cr_check(s2, bad));
}

TEST_CASE("u-encoded operators match ambient operators") {
  Rng rng(4);
  for (const char* spec : {"clifford:n=5,m=5,p=2", "octonion:m=6,p=1"}) {
    auto s = Setting::parse(spec);
    for (int t = 0; t < 10; ++t) {
      StemPair st = random_stem(rng, s, PolyShape{4, 3, 2});
      // slice Laplacian in u agrees with the (x_p, r) Laplacian of the restriction.
      SpherePoint w = rational_sphere_point(s, static_cast<std::uint64_t>(t));
      CHECK(slice_restrict(s, materialize(s, slice_laplacian(s, st)), w) ==
            laplacian(slice_restrict(s, materialize(s, st), w)));
      // a CK stem is monogenic on slices, hence slice harmonic.
      StemPair ck = ck_extend(s, random_seed(rng, s, PolyShape{4, 3, 2}));
      StemPair h = slice_laplacian(s, ck);
      CHECK(h.G1.is_zero());
      CHECK(h.G2.is_zero());
    }
  }
}

TEST_CASE("dirac power of real constants") {
  auto s = Setting::parse("clifford:n=2,m=2,p=0");
  CHECK(dirac_power(s, K(s, Rational(5)), 1).is_zero());
  CHECK(dirac_power(s, X(s, 1), 0) == X(s, 1));
}
