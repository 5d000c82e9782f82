#include <doctest.h>

#include "helpers.hpp"
#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/random.hpp"
#include "hyperck/verify.hpp"

using namespace hyperck;
using namespace testing;

TEST_CASE("element json") {
  auto a = Algebra::make(AlgebraKind::Clifford, 2);
  auto x = AlgebraElement::scalar(a, Rational(-3, 4)) + E(a, "e12", 2);
  Json j = element_to_json(x);
  CHECK(j.dump() == R"({"1":"-3/4","e12":"2"})");
  CHECK(element_from_json(a, j) == x);
  CHECK_THROWS_AS(element_from_json(a, Json::parse(R"({"e3":"1"})")), ParseError);
  CHECK_THROWS_AS(element_from_json(a, Json::parse(R"({"1":"1/0"})")), ParseError);
}

TEST_CASE("seed and stem json") {
  auto s = Setting::parse("clifford:n=3,m=3,p=0");
  Poly seed = seed_from_json(s, Json::parse(R"({"monomial":[1],"coeff":{"1":"1"}})"));
  CHECK(seed == SX(s, 0));
  StemPair ck = ck_extend(s, seed);
  CHECK(ck.G1 == GX(s, 0));
  CHECK(ck.G2 == GK(s, Rational(1)));
  CHECK(stem_from_json(s, stem_to_json(ck)) == ck);
  CHECK_THROWS_AS(seed_from_json(s, Json::parse(R"({"monomial":[0,1,0,0],"coeff":{"1":"1"}})")), DomainError);
}

TEST_CASE("random round trips") {
  Rng rng(99);
  for (const char* spec : {"clifford:n=5,m=5,p=2", "octonion:m=7,p=1"}) {
    auto s = Setting::parse(spec);
    for (int t = 0; t < 20; ++t) {
      Poly f = random_ambient(rng, s, PolyShape{4, 4, 3});
      CHECK(ambient_from_json(s, Json::parse(poly_to_json(f).dump())) == f);
      StemPair st = random_stem(rng, s, PolyShape{4, 4, 3});
      CHECK(stem_from_json(s, Json::parse(stem_to_json(st).dump())) == st);
    }
  }
}

TEST_CASE("verify reports are deterministic") {
  VerifyOptions o;
  o.suite = "stem";
  o.trials = 5;
  o.seed = 17;
  std::string first = run_suite(o).to_json().dump();
  CHECK(first == run_suite(o).to_json().dump());
  o.seed = 18;
  CHECK(first != run_suite(o).to_json().dump());

  VerifyOptions bad;
  bad.suite = "diagrams";
  bad.qs = {2};
  CHECK_THROWS_AS(run_suite(bad), DomainError);
  bad.suite = "no-such-suite";
  bad.qs.clear();
  CHECK_THROWS_AS(run_suite(bad), DomainError);
}
