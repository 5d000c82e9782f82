#include "hyperck/random.hpp"

#include "hyperck/errors.hpp"

namespace hyperck {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(int bound) {
  Rational r(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, bound)));
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational(int bound) {
  std::int64_t n = uniform(1, bound);
  if (coin()) n = -n;
  Rational r(static_cast<long>(n), static_cast<unsigned long>(uniform(1, bound)));
  r.canonicalize();
  return r;
}

AlgebraElement random_element(Rng& rng, const AlgebraPtr& alg, int max_terms) {
  AlgebraElement a(alg);
  const auto terms = rng.uniform(1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    a[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(alg->dim()) - 1))] += rng.nonzero_rational();
  }
  return a;
}

AlgebraElement random_dense_element(Rng& rng, const AlgebraPtr& alg) {
  AlgebraElement a(alg);
  for (std::size_t i = 0; i < alg->dim(); ++i) a[i] = rng.rational();
  return a;
}

Poly random_poly(Rng& rng, const AlgebraPtr& alg, std::size_t nvars, std::size_t active, const PolyShape& shape) {
  if (active == 0 || active > nvars) throw DomainError("random polynomial needs 1 <= active <= nvars");
  Poly f(alg, nvars);
  const auto terms = rng.uniform(1, shape.max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    Exponents e{};
    const auto d = rng.uniform(0, shape.max_degree);
    for (std::int64_t i = 0; i < d; ++i) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(active) - 1))];
    f.add_term(e, random_element(rng, alg, shape.coeff_terms));
  }
  return f;
}

Poly random_seed(Rng& rng, const Setting& setting, const PolyShape& shape) {
  const std::size_t n = static_cast<std::size_t>(setting.p()) + 1;
  return random_poly(rng, setting.algebra(), n, n, shape);
}

Poly random_ambient(Rng& rng, const Setting& setting, const PolyShape& shape) {
  return random_poly(rng, setting.algebra(), setting.ambient_vars(), setting.ambient_vars(), shape);
}

StemPair random_stem(Rng& rng, const Setting& setting, const PolyShape& shape) {
  const std::size_t n = setting.stem_vars();
  Poly g1 = random_poly(rng, setting.algebra(), n, n, shape);
  Poly g2 = random_poly(rng, setting.algebra(), n, n, shape);
  return {std::move(g1), std::move(g2)};
}

}  // namespace hyperck
