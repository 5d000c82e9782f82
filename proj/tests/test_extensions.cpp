#include <doctest.h>

#include "helpers.hpp"
#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/operators.hpp"
#include "hyperck/random.hpp"

using namespace hyperck;
using namespace testing;

TEST_CASE("ck extension hand values") {
  auto s = Setting::parse("clifford:n=3,m=3,p=0");
  StemPair ck = ck_extend(s, SX(s, 0) * SX(s, 0));
  CHECK(ck.G1 == GX(s, 0) * GX(s, 0) - GU(s));
  CHECK(ck.G2 == 2 * GX(s, 0));
  CHECK(cr_check(s, ck));

  auto a = s.algebra();
  StemPair c = ck_extend(s, SK(s, E(a, "e13")));
  CHECK(c.G1 == GK(s, E(a, "e13")));
  CHECK(c.G2.is_zero());

  auto s2 = Setting::parse("octonion:m=5,p=2");
  for (int l = 0; l <= 2; ++l) {
    StemPair z = ck_extend(s2, SX(s2, static_cast<std::size_t>(l)));
    CHECK(z.G1 == GX(s2, static_cast<std::size_t>(l)));
    CHECK(z.G2 == GK(s2, s2.v(l)));
    CHECK(materialize(s2, z) == fueter_variable(s2, l));
  }
}

TEST_CASE("ck extension round trips and rejects high variables") {
  auto s = Setting::parse("clifford:n=4,m=4,p=1");
  CHECK_THROWS_AS(ck_extend(s, Poly::variable(s.algebra(), s.ambient_vars(), 3)), DomainError);
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    Poly f0 = random_seed(rng, s, PolyShape{5, 4, 2});
    StemPair ck = ck_extend(s, f0);
    CHECK(cr_check(s, ck));
    Poly f = materialize(s, ck);
    std::vector<Rational> zero(s.ambient_vars(), Rational(0));
    // restriction to the base: set x_{p+1..m} = 0
    Poly restricted(s.algebra(), static_cast<std::size_t>(s.p()) + 1);
    for (const auto& [e, c] : f.terms()) {
      bool base = true;
      for (std::size_t i = static_cast<std::size_t>(s.p()) + 1; i <= static_cast<std::size_t>(s.m()); ++i)
        base = base && e[i] == 0;
      if (base) restricted.add_term(e, c);
    }
    CHECK(restricted == f0);
  }
}

TEST_CASE("gck extension hand values") {
  for (const char* spec : {"clifford:n=2,m=2,p=0", "clifford:n=4,m=4,p=1", "octonion:m=7,p=2"}) {
    auto s = Setting::parse(spec);
    CHECK(gck_extend(s, SK(s, Rational(7))) == K(s, Rational(7)));
    Poly g = gck_extend(s, SX(s, 0));
    CHECK(g == X(s, 0) + Rational(1, s.q()) * vec(s));
    CHECK(dirac(s, g).is_zero());
  }
  auto s1 = Setting::parse("clifford:n=3,m=3,p=2");
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    Poly f0 = random_seed(rng, s1, PolyShape{4, 3, 2});
    CHECK(gck_extend(s1, f0) == materialize(s1, ck_extend(s1, f0)));
  }
}

TEST_CASE("gck is monogenic and ck is not for q >= 2") {
  auto s = Setting::parse("clifford:n=5,m=5,p=2");
  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    Poly f0 = random_seed(rng, s, PolyShape{4, 3, 2});
    CHECK(dirac(s, gck_extend(s, f0)).is_zero());
  }
  CHECK_FALSE(dirac(s, fueter_variable(s, 1)).is_zero());
}

TEST_CASE("extension weights") {
  CHECK(gck_even_weight(3, 0) == 1);
  CHECK(gck_even_weight(3, 1) == Rational(1, 2 * 3));
  CHECK(gck_even_weight(3, 2) == Rational(1, 8 * 3 * 5));
  CHECK(gck_odd_weight(3, 0) == Rational(1, 3));
  CHECK(gck_odd_weight(3, 1) == Rational(1, 2 * 3 * 5));
  CHECK(hgck_odd_weight(3, 0) == 1);
  CHECK(hgck_odd_weight(3, 1) == Rational(1, 2 * 5));
  // q = 1 reduces to the CK factorials.
  for (int k = 0; k < 5; ++k) {
    CHECK(gck_even_weight(1, k) == Rational(1) / Rational(factorial(static_cast<unsigned>(2 * k))));
    CHECK(gck_odd_weight(1, k) == Rational(1) / Rational(factorial(static_cast<unsigned>(2 * k + 1))));
  }
}

TEST_CASE("hgck hand values") {
  for (const char* spec : {"clifford:n=3,m=3,p=0", "clifford:n=4,m=4,p=1", "octonion:m=7,p=4"}) {
    auto s = Setting::parse(spec);
    Poly zero = SK(s, Rational(0));
    CHECK(hgck_extend(s, SK(s, Rational(1)), zero) == K(s, Rational(1)));
    CHECK(hgck_extend(s, zero, SK(s, Rational(1))) == vec(s));
    Poly h = hgck_extend(s, SX(s, 0) * SX(s, 0), zero);
    CHECK(h == X(s, 0) * X(s, 0) - Rational(1, s.q()) * rho(s));
    CHECK(laplacian(h).is_zero());
  }
}

TEST_CASE("hgck corollary identities") {
  auto s = Setting::parse("octonion:m=5,p=2");
  Rng rng(21);
  for (int t = 0; t < 5; ++t) {
    Poly f0 = random_seed(rng, s, PolyShape{4, 3, 2});
    Poly zero = seed_zero(s);
    Poly d0 = dirac_p(s, seed_to_ambient(s, f0));
    Poly d0_seed(s.algebra(), static_cast<std::size_t>(s.p()) + 1);
    for (const auto& [e, c] : d0.terms()) d0_seed.add_term(e, c);
    Poly lhs = gck_extend(s, f0);
    Poly rhs = hgck_extend(s, f0, zero) + Rational(1, s.q()) * hgck_extend(s, zero, d0_seed);
    CHECK(lhs == rhs);
    CHECK(dirac_bar(s, hgck_extend(s, zero, f0)) == Rational(s.q()) * gck_extend(s, f0));
    CHECK(laplacian(hgck_extend(s, f0, d0_seed)).is_zero());
  }
}

TEST_CASE("fueter variables and polynomials") {
  auto s = Setting::parse("clifford:n=3,m=3,p=1");
  auto a = s.algebra();
  CHECK(fueter_variable(s, 0) == X(s, 0) + vec(s));
  CHECK(fueter_variable(s, 1) ==
        X(s, 1) + left_mul(E(a, "e2") * E(a, "e1"), X(s, 2)) + left_mul(E(a, "e3") * E(a, "e1"), X(s, 3)));
  CHECK(fueter_polynomial(s, {0, 0}) == K(s, Rational(1)));
  CHECK(fueter_polynomial(s, {0, 1}) == fueter_variable(s, 1));
  Poly z0 = fueter_variable(s, 0), z1 = fueter_variable(s, 1);
  CHECK(fueter_polynomial(s, {1, 1}) == Rational(1, 2) * (z0 * z1 + z1 * z0));
  CHECK(fueter_polynomial(s, {2, 0}) == Rational(1, 2) * (z0 * z0));
  CHECK(fueter_polynomial(s, {-1, 2}).is_zero());
  CHECK(v_polynomial(s, {1, 1}) == fueter_polynomial(s, {1, 1}));
  CHECK(v_polynomial(s, {0, 1}) == z1);
}

TEST_CASE("fueter polynomials agree with ck of monomials in octonions") {
  for (int p : {1, 2}) {
    Setting s(Algebra::make(AlgebraKind::Octonion), 7, p);
    std::vector<int> k(static_cast<std::size_t>(p) + 1, 0);
    k[0] = 1;
    k[1] = 2;
    Poly left = fueter_polynomial(s, k, Comb::Left);
    CHECK(left == fueter_polynomial(s, k, Comb::Right));
    CHECK(left == v_polynomial(s, k));
  }
}

namespace {

// g D_w = sum_{l<=p} (d_l g) v_l + (d_r g) w on a slice restriction.
Poly right_slice_dirac(const Setting& s, const Poly& f, const SpherePoint& w) {
  Poly g = slice_restrict(s, f, w);
  Poly out(s.algebra(), g.nvars());
  for (int l = 0; l <= s.p(); ++l) out.add_right_basis(partial_derivative(g, static_cast<std::size_t>(l)), s.unit_index(l));
  return out + right_mul(partial_derivative(g, g.nvars() - 1), w.element(s));
}

}  // namespace

TEST_CASE("right Fueter variables are right slice monogenic (exploratory)") {
  for (const char* spec : {"clifford:n=4,m=4,p=1", "octonion:m=7,p=2"}) {
    auto s = Setting::parse(spec);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      SpherePoint w = rational_sphere_point(s, seed);
      for (int a = 0; a <= s.p(); ++a) {
        Poly za = fueter_variable_right(s, a);
        CHECK(right_slice_dirac(s, za, w).is_zero());
        for (int b = 0; b <= s.p(); ++b) {
          Poly zb = fueter_variable_right(s, b);
          CHECK(right_slice_dirac(s, za * zb + zb * za, w).is_zero());
        }
      }
      // Left Fueter variables are not right slice monogenic once p >= 1.
      CHECK_FALSE(right_slice_dirac(s, fueter_variable(s, 1), w).is_zero());
    }
  }
}
