#pragma once

#include <vector>

#include "hyperck/algebra.hpp"
#include "hyperck/poly.hpp"
#include "hyperck/serialize.hpp"
#include "hyperck/stem.hpp"

namespace testing {

using namespace hyperck;

inline Poly X(const Setting& s, std::size_t i) { return Poly::variable(s.algebra(), s.ambient_vars(), i); }
inline Poly K(const Setting& s, const AlgebraElement& c) { return Poly::constant(s.algebra(), s.ambient_vars(), c); }
inline Poly K(const Setting& s, const Rational& c) { return Poly::constant(s.algebra(), s.ambient_vars(), c); }

// Seed-space (x_0..x_p) and stem-space (x_0..x_p, u) builders.
inline Poly SX(const Setting& s, std::size_t i) {
  return Poly::variable(s.algebra(), static_cast<std::size_t>(s.p()) + 1, i);
}
inline Poly SK(const Setting& s, const Rational& c) {
  return Poly::constant(s.algebra(), static_cast<std::size_t>(s.p()) + 1, c);
}
inline Poly SK(const Setting& s, const AlgebraElement& c) {
  return Poly::constant(s.algebra(), static_cast<std::size_t>(s.p()) + 1, c);
}
inline Poly GX(const Setting& s, std::size_t i) { return Poly::variable(s.algebra(), s.stem_vars(), i); }
inline Poly GU(const Setting& s) { return Poly::variable(s.algebra(), s.stem_vars(), s.stem_vars() - 1); }
inline Poly GK(const Setting& s, const Rational& c) { return Poly::constant(s.algebra(), s.stem_vars(), c); }
inline Poly GK(const Setting& s, const AlgebraElement& c) { return Poly::constant(s.algebra(), s.stem_vars(), c); }

// x_q = sum_{s>p} x_s v_s
inline Poly vec(const Setting& s) {
  Poly out(s.algebra(), s.ambient_vars());
  for (int i = s.p() + 1; i <= s.m(); ++i) out += left_mul(s.v(i), X(s, static_cast<std::size_t>(i)));
  return out;
}

inline Poly rho(const Setting& s) {
  Poly out(s.algebra(), s.ambient_vars());
  for (int i = s.p() + 1; i <= s.m(); ++i) out += X(s, static_cast<std::size_t>(i)) * X(s, static_cast<std::size_t>(i));
  return out;
}

inline Poly pow(const Poly& f, int k) {
  Poly out = Poly::constant(f.algebra(), f.nvars(), Rational(1));
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

inline AlgebraElement E(const AlgebraPtr& alg, const std::string& label, const Rational& c = 1) {
  return AlgebraElement::basis(alg, alg->index_of(label).value(), c);
}

inline Rational Q(const char* text) { return parse_rational(text); }

}  // namespace testing
