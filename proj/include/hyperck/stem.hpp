#pragma once

// Stem pairs of generalized partial-slice functions.
//
// A stem (G1, G2) lives in the p+2 variables (x_0, ..., x_p, u); the last
// slot is u = r^2. It encodes F1(x_p, r) = G1(x_p, r^2) and
// F2(x_p, r) = r G2(x_p, r^2), so the induced function is
//
//   f(x) = G1(x_p, rho) + sum_{s>p} x_s (v_s G2(x_p, rho)),  rho = sum_{s>p} x_s^2.

#include <span>

#include "hyperck/algebra.hpp"
#include "hyperck/poly.hpp"

namespace hyperck {

struct StemPair {
  Poly G1;
  Poly G2;

  friend bool operator==(const StemPair& a, const StemPair& b) { return a.G1 == b.G1 && a.G2 == b.G2; }
  friend bool operator!=(const StemPair& a, const StemPair& b) { return !(a == b); }
};

StemPair zero_stem(const Setting& setting);
StemPair operator+(const StemPair& a, const StemPair& b);
StemPair operator-(const StemPair& a, const StemPair& b);
StemPair operator*(const Rational& s, const StemPair& a);

// Polynomials in x_0..x_p (p+1 variables) and their lift to stem variables.
Poly seed_zero(const Setting& setting);
Poly seed_to_stem(const Setting& setting, const Poly& seed);
Poly seed_to_ambient(const Setting& setting, const Poly& seed);

// G(x_p, rho) as an ambient polynomial in x_0..x_m.
Poly even_function(const Setting& setting, const Poly& g);

// sum_{s>p} x_s (v_s g(x_p, rho)).
Poly vector_times(const Setting& setting, const Poly& g);

Poly materialize(const Setting& setting, const StemPair& s);

// Inverse of materialize. Throws NotSliceForm naming the first monomial at
// which f differs from the re-materialized candidate.
StemPair extract(const Setting& setting, const Poly& f);

struct EvenOdd {
  Poly even;
  Poly odd;
};
// PE[f] = (f + f o diamond)/2, PO[f] = (f - f o diamond)/2.
EvenOdd partial_even_odd(const Setting& setting, const Poly& f);

// Spherical value and derivative, both as polynomials in (x_p, u).
struct SphericalParts {
  Poly value;
  Poly derivative;
};
SphericalParts spherical_parts(const StemPair& s);

// The ambient point (x_p, r omega).
std::vector<Rational> slice_point(const Setting& setting, std::span<const Rational> xp, const Rational& r,
                                  const SpherePoint& omega);

// Representation formula for an arbitrary ambient polynomial at one
// configuration.
bool representation_holds(const Setting& setting, const Poly& f, std::span<const Rational> xp, const Rational& r,
                          const SpherePoint& omega, const SpherePoint& eta);

// Representation formula on materialize(s), plus the check that the stem
// values recovered from eta agree with G1(x_p, r^2) and r G2(x_p, r^2).
bool representation_check(const Setting& setting, const StemPair& s, std::span<const Rational> xp,
                          const Rational& r, const SpherePoint& omega, const SpherePoint& eta);

}  // namespace hyperck
