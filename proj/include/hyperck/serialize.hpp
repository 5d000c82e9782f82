#pragma once

// JSON forms of elements, polynomials and stems.
//
//   element:    {"1": "3/2", "e12": "-1"}
//   polynomial: [{"monomial": [k_0, ..., k_{n-1}], "coeff": <element>}, ...]
//   stem:       {"G1": <polynomial>, "G2": <polynomial>}, last slot of each
//               monomial is u = r^2
//
// Rationals are "num/den" strings (plain integers are also accepted on
// input). Output lists terms in graded lexicographic order.

#include <json.hpp>

#include "hyperck/algebra.hpp"
#include "hyperck/poly.hpp"
#include "hyperck/stem.hpp"

namespace hyperck {

using Json = nlohmann::ordered_json;

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const AlgebraPtr& alg, const Json& j);

Json poly_to_json(const Poly& f);
// A single entry object is accepted in place of an array.
Poly poly_from_json(const AlgebraPtr& alg, std::size_t nvars, const Json& j);

// Seed polynomial in x_0..x_p. Monomials may have length p+1, or m+1 with
// zero exponents beyond x_p.
Poly seed_from_json(const Setting& setting, const Json& j);
Poly ambient_from_json(const Setting& setting, const Json& j);

Json stem_to_json(const StemPair& s);
StemPair stem_from_json(const Setting& setting, const Json& j);

}  // namespace hyperck
