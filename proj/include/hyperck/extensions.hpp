#pragma once

// Cauchy-Kovalevskaya extensions of polynomial seeds, Fueter variables and
// Fueter polynomials.
//
// Seeds are polynomials in x_0..x_p (p+1 variables). Every series
// terminates: Delta_{x_p}^k f0 = 0 once 2k > deg f0.

#include <vector>

#include "hyperck/poly.hpp"
#include "hyperck/stem.hpp"

namespace hyperck {

// G1 = sum (-u)^k/(2k)! Delta^k f0, G2 = sum (-u)^k/(2k+1)! Delta^k D_{x_p} f0.
StemPair ck_extend(const Setting& setting, const Poly& f0);

// Series weights. With w(k) = (2k)!! = 2^k k!:
//   gck_even(k)  = 1 / ((2k)!! q(q+2)...(q+2k-2))
//   gck_odd(k)   = 1 / ((2k)!! q(q+2)...(q+2k))
//   hgck_odd(k)  = 1 / ((2k)!! (q+2)...(q+2k))
Rational gck_even_weight(int q, int k);
Rational gck_odd_weight(int q, int k);
Rational hgck_odd_weight(int q, int k);

StemPair gck_stem(const Setting& setting, const Poly& a0);
Poly gck_extend(const Setting& setting, const Poly& a0);

// Coefficients A_j of f = sum_j x_q^j A_j(x_p), read off a stem:
// A_{2k} = (-1)^k [u^k] G1, A_{2k+1} = (-1)^k [u^k] G2. Seed polynomials.
std::vector<Poly> series_coefficients(const Setting& setting, const StemPair& s);

StemPair hgck_stem(const Setting& setting, const Poly& a0, const Poly& a1);
Poly hgck_extend(const Setting& setting, const Poly& a0, const Poly& a1);

// x_l + sum_{s>p} x_s (v_s v_l), resp. x_l + sum_{s>p} x_s (v_l v_s).
Poly fueter_variable(const Setting& setting, int l);
Poly fueter_variable_right(const Setting& setting, int l);

enum class Comb { Left, Right };

// (1/|k|!) sum over distinguishable orderings of z_{i_1} ... z_{i_|k|},
// each product associated by `comb`. Negative entries give 0.
Poly fueter_polynomial(const Setting& setting, const std::vector<int>& k, Comb comb = Comb::Left);

// CK[x_p^k] / k!.
Poly v_polynomial(const Setting& setting, const std::vector<int>& k);

}  // namespace hyperck
