#pragma once

// Seeded generators for the randomized verification suites.
//
// Rationals are drawn with numerator in [-bound, bound] and denominator in
// [1, bound] (bound = 16 by default). Draws use plain modular reduction of a
// 64-bit Mersenne twister so the streams are identical on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperck/algebra.hpp"
#include "hyperck/poly.hpp"
#include "hyperck/stem.hpp"

namespace hyperck {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(int bound = 16);
  Rational nonzero_rational(int bound = 16);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Element with up to `max_terms` nonzero basis coefficients.
AlgebraElement random_element(Rng& rng, const AlgebraPtr& alg, int max_terms = 3);

// Dense element: every coefficient drawn independently.
AlgebraElement random_dense_element(Rng& rng, const AlgebraPtr& alg);

struct PolyShape {
  int max_degree = 3;
  int max_terms = 4;
  int coeff_terms = 2;  // nonzero blades per coefficient
};

// Random polynomial in the first `active` of `nvars` variables.
Poly random_poly(Rng& rng, const AlgebraPtr& alg, std::size_t nvars, std::size_t active,
                 const PolyShape& shape);

// Random seed polynomial in x_0..x_p (p+1 variables).
Poly random_seed(Rng& rng, const Setting& setting, const PolyShape& shape);

// Random ambient polynomial in x_0..x_m.
Poly random_ambient(Rng& rng, const Setting& setting, const PolyShape& shape);

// Random (not necessarily regular) stem.
StemPair random_stem(Rng& rng, const Setting& setting, const PolyShape& shape);

}  // namespace hyperck
