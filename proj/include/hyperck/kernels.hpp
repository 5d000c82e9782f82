#pragma once

// Functions N(x) rho^{-s}, rho = |x| over all variables of N, closed under
// differentiation. Surface-area normalizations of the Cauchy kernels are
// dropped; every identity checked here is linear.

#include "hyperck/poly.hpp"

namespace hyperck {

struct KelvinFunction {
  Poly numerator;
  int s = 0;  // exponent of rho in the denominator

  bool is_zero() const noexcept { return numerator.is_zero(); }
};

// Brings both to a common denominator exponent; parities must agree.
KelvinFunction operator+(const KelvinFunction& a, const KelvinFunction& b);
KelvinFunction operator-(const KelvinFunction& a, const KelvinFunction& b);
bool kelvin_equal(const KelvinFunction& a, const KelvinFunction& b);

// d_i (N rho^{-s}) = (rho^2 d_i N - s x_i N) rho^{-(s+2)}
KelvinFunction kelvin_derivative(const KelvinFunction& k, std::size_t i);
KelvinFunction kelvin_dirac(const Setting& setting, const KelvinFunction& k);
KelvinFunction kelvin_dirac_right(const Setting& setting, const KelvinFunction& k);
KelvinFunction kelvin_laplacian(const KelvinFunction& k);

// E^[k] = x-bar x_0^{k-1} / ((k-1)! rho^{m+1}), k >= 1.
KelvinFunction poly_kernel(const Setting& setting, int k);

// a + omega-hat b for a formal slice unit omega-hat (omega-hat^2 = -1,
// anticommuting with v_1..v_p).
struct SliceElement {
  Poly a;
  Poly b;
};

// Slice functions in (x_0..x_p, r) with SliceElement numerators.
struct SliceKelvin {
  SliceElement numerator;
  int s = 0;

  bool is_zero() const noexcept { return numerator.a.is_zero() && numerator.b.is_zero(); }
};

// (x_p^c - r omega-hat) rho^{-(p+2)}.
SliceKelvin slice_cauchy_kernel(const Setting& setting);

// D_{x_p} + omega-hat d_r from the left, resp. from the right. The right
// action needs b real and a in span(v_0..v_p); DomainError otherwise.
SliceKelvin slice_dirac_left(const Setting& setting, const SliceKelvin& k);
SliceKelvin slice_dirac_right(const Setting& setting, const SliceKelvin& k);

}  // namespace hyperck
