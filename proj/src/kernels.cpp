#include "hyperck/kernels.hpp"

#include "hyperck/errors.hpp"
#include "hyperck/operators.hpp"

namespace hyperck {

namespace {

Poly rho_squared(const AlgebraPtr& alg, std::size_t nvars) {
  Poly r(alg, nvars);
  const AlgebraElement one = AlgebraElement::scalar(alg, 1);
  for (std::size_t i = 0; i < nvars; ++i) {
    Exponents e{};
    e[i] = 2;
    r.add_term(e, one);
  }
  return r;
}

Poly lift(const Poly& n, int from, int to) {
  if ((to - from) % 2 != 0) throw DomainError("Kelvin terms with denominator exponents of different parity");
  Poly out = n;
  const Poly rho2 = rho_squared(n.algebra(), n.nvars());
  for (int s = from; s < to; s += 2) out = out * rho2;
  return out;
}

Poly times_var(const Poly& n, std::size_t i) {
  Exponents e{};
  e[i] = 1;
  return shift(n, e);
}

Poly derivative_numerator(const Poly& n, int s, std::size_t i) {
  return partial_derivative(n, i) * rho_squared(n.algebra(), n.nvars()) - Rational(s) * times_var(n, i);
}

Poly conj_poly(const Poly& f) {
  Poly out(f.algebra(), f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.conj());
  return out;
}

bool in_base_span(const Setting& setting, const Poly& f) {
  for (const auto& [e, c] : f.terms()) {
    AlgebraElement rest = c;
    for (int s = 0; s <= setting.p(); ++s) rest[setting.unit_index(s)] = 0;
    if (!rest.is_zero()) return false;
  }
  return true;
}

}  // namespace

KelvinFunction operator+(const KelvinFunction& a, const KelvinFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int s = std::max(a.s, b.s);
  return {lift(a.numerator, a.s, s) + lift(b.numerator, b.s, s), s};
}

KelvinFunction operator-(const KelvinFunction& a, const KelvinFunction& b) {
  return a + KelvinFunction{-b.numerator, b.s};
}

bool kelvin_equal(const KelvinFunction& a, const KelvinFunction& b) { return (a - b).is_zero(); }

KelvinFunction kelvin_derivative(const KelvinFunction& k, std::size_t i) {
  return {derivative_numerator(k.numerator, k.s, i), k.s + 2};
}

namespace {

KelvinFunction kelvin_dirac_side(const Setting& setting, const KelvinFunction& k, Side side) {
  const std::size_t nu = k.numerator.nvars();
  if (nu > setting.ambient_vars()) throw DomainError("kernel has more variables than the setting");
  Poly out(k.numerator.algebra(), nu);
  for (std::size_t i = 0; i < nu; ++i) {
    Poly d = derivative_numerator(k.numerator, k.s, i);
    if (side == Side::Left)
      out.add_left_basis(setting.unit_index(static_cast<int>(i)), d);
    else
      out.add_right_basis(d, setting.unit_index(static_cast<int>(i)));
  }
  return {std::move(out), k.s + 2};
}

}  // namespace

KelvinFunction kelvin_dirac(const Setting& setting, const KelvinFunction& k) {
  return kelvin_dirac_side(setting, k, Side::Left);
}

KelvinFunction kelvin_dirac_right(const Setting& setting, const KelvinFunction& k) {
  return kelvin_dirac_side(setting, k, Side::Right);
}

KelvinFunction kelvin_laplacian(const KelvinFunction& k) {
  KelvinFunction out{Poly(k.numerator.algebra(), k.numerator.nvars()), k.s + 4};
  for (std::size_t i = 0; i < k.numerator.nvars(); ++i) out = out + kelvin_derivative(kelvin_derivative(k, i), i);
  return out;
}

KelvinFunction poly_kernel(const Setting& setting, int k) {
  if (k < 1) throw DomainError("poly-monogenic kernel order must be >= 1");
  const std::size_t nu = setting.ambient_vars();
  Poly xbar(setting.algebra(), nu);
  Exponents e{};
  e[0] = static_cast<std::uint8_t>(k);
  xbar.add_term(e, setting.one());
  for (int s = 1; s <= setting.m(); ++s) {
    Exponents f{};
    f[0] = static_cast<std::uint8_t>(k - 1);
    f[static_cast<std::size_t>(s)] = 1;
    xbar.add_term(f, -setting.v(s));
  }
  return {xbar * (Rational(1) / Rational(factorial(static_cast<unsigned>(k - 1)))), setting.m() + 1};
}

SliceKelvin slice_cauchy_kernel(const Setting& setting) {
  const std::size_t nu = setting.stem_vars();
  Poly a(setting.algebra(), nu), b(setting.algebra(), nu);
  for (int l = 0; l <= setting.p(); ++l) {
    Exponents e{};
    e[static_cast<std::size_t>(l)] = 1;
    a.add_term(e, l == 0 ? setting.one() : -setting.v(l));
  }
  Exponents r{};
  r[nu - 1] = 1;
  b.add_term(r, -setting.one());
  return {{std::move(a), std::move(b)}, setting.p() + 2};
}

SliceKelvin slice_dirac_left(const Setting& setting, const SliceKelvin& k) {
  const std::size_t nu = setting.stem_vars();
  const AlgebraPtr& alg = setting.algebra();
  Poly a(alg, nu), b(alg, nu);
  for (std::size_t i = 0; i < nu; ++i) {
    Poly da = derivative_numerator(k.numerator.a, k.s, i);
    Poly db = derivative_numerator(k.numerator.b, k.s, i);
    if (i + 1 < nu) {
      // v_l (a + w b) = v_l a + w (v_l^c b)
      const std::size_t idx = setting.unit_index(static_cast<int>(i));
      a.add_left_basis(idx, da);
      b.add_left_basis(idx, db, Rational(i == 0 ? 1 : -1));
    } else {
      // w (a + w b) = -b + w a
      a -= db;
      b += da;
    }
  }
  return {{std::move(a), std::move(b)}, k.s + 2};
}

SliceKelvin slice_dirac_right(const Setting& setting, const SliceKelvin& k) {
  if (!k.numerator.b.is_real()) throw DomainError("right slice action needs a real omega-hat component");
  if (!in_base_span(setting, k.numerator.a)) throw DomainError("right slice action needs a in span(v_0..v_p)");
  const std::size_t nu = setting.stem_vars();
  const AlgebraPtr& alg = setting.algebra();
  Poly a(alg, nu), b(alg, nu);
  for (std::size_t i = 0; i < nu; ++i) {
    Poly da = derivative_numerator(k.numerator.a, k.s, i);
    Poly db = derivative_numerator(k.numerator.b, k.s, i);
    if (i + 1 < nu) {
      // (a + w b) v_l = a v_l + w (b v_l) for real b
      const std::size_t idx = setting.unit_index(static_cast<int>(i));
      a.add_right_basis(da, idx);
      b.add_right_basis(db, idx);
    } else {
      // (a + w b) w = w a^c - b for a in M_p, real b
      a -= db;
      b += conj_poly(da);
    }
  }
  return {{std::move(a), std::move(b)}, k.s + 2};
}

}  // namespace hyperck
