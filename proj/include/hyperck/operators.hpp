#pragma once

// Differential operators on ambient polynomials and on stems.

#include "hyperck/algebra.hpp"
#include "hyperck/poly.hpp"
#include "hyperck/stem.hpp"

namespace hyperck {

enum class Side { Left, Right };

// sum_{s=first}^{last} v_s d_s f (v_s^c when bar), multiplying on `side`.
// Works on any polynomial whose variable s is paired with v_s: ambient
// polynomials, seeds and stem components alike.
Poly dirac_range(const Setting& setting, const Poly& f, int first, int last, bool bar = false,
                 Side side = Side::Left);

Poly dirac(const Setting& setting, const Poly& f);
Poly dirac_bar(const Setting& setting, const Poly& f);
// f D and f D-bar.
Poly dirac_right(const Setting& setting, const Poly& f);
Poly dirac_bar_right(const Setting& setting, const Poly& f);

struct DiracSplit {
  Poly base;    // D_{x_p} f
  Poly vector;  // D_{x_q} f
};
DiracSplit dirac_split(const Setting& setting, const Poly& f);

// D_{x_p} and its conjugate, acting on seeds or stem components.
Poly dirac_p(const Setting& setting, const Poly& f);
Poly dirac_p_bar(const Setting& setting, const Poly& f);

Poly dirac_power(const Setting& setting, const Poly& f, int k);

// sum_{i=first}^{last} d_i^2 f.
Poly laplacian_range(const Poly& f, std::size_t first, std::size_t last);
Poly laplacian(const Poly& f);
// Delta_{x_p}^k on a seed or stem component.
Poly laplacian_p(const Setting& setting, const Poly& f, int k = 1);

// Substitutes x_s = r omega_s (s > p) and applies D_{x_p} + omega d_r.
// Result is a polynomial in (x_0..x_p, r).
Poly slice_restrict(const Setting& setting, const Poly& f, const SpherePoint& omega);
Poly slice_dirac(const Setting& setting, const Poly& f, const SpherePoint& omega);

// -sum_{p<i<j} v_i (v_j (L_ij f)), L_ij = x_i d_j - x_j d_i.
Poly gamma_spherical(const Setting& setting, const Poly& f);

Poly d_du(const Setting& setting, const Poly& g);

// (2 d_u)^k on both components.
StemPair radial_iterate(const Setting& setting, const StemPair& s, int k);

// Residuals of the generalized Cauchy-Riemann system in u-encoding:
//   first  = D_p G1 - G2 - 2u d_u G2
//   second = D-bar_p G2 + 2 d_u G1
StemPair cr_residual(const Setting& setting, const StemPair& s);
// Vekua system: first = D_p G1 - q G2 - 2u d_u G2, second as above.
StemPair vekua_residual(const Setting& setting, const StemPair& s);
bool cr_check(const Setting& setting, const StemPair& s);
bool vekua_check(const Setting& setting, const StemPair& s);

// (Delta_{x'} F1, Delta_{x'} F2 / r) in u-encoding, x' = (x_p, r).
StemPair slice_laplacian(const Setting& setting, const StemPair& s);

}  // namespace hyperck
