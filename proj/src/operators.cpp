#include "hyperck/operators.hpp"

#include "hyperck/errors.hpp"

namespace hyperck {

Poly dirac_range(const Setting& setting, const Poly& f, int first, int last, bool bar, Side side) {
  Poly out(f.algebra(), f.nvars());
  for (int s = first; s <= last; ++s) {
    Poly d = partial_derivative(f, static_cast<std::size_t>(s));
    if (d.is_zero()) continue;
    const Rational sign = bar && s > 0 ? -1 : 1;
    if (side == Side::Left)
      out.add_left_basis(setting.unit_index(s), d, sign);
    else
      out.add_right_basis(d, setting.unit_index(s), sign);
  }
  return out;
}

Poly dirac(const Setting& setting, const Poly& f) { return dirac_range(setting, f, 0, setting.m()); }
Poly dirac_bar(const Setting& setting, const Poly& f) { return dirac_range(setting, f, 0, setting.m(), true); }
Poly dirac_right(const Setting& setting, const Poly& f) {
  return dirac_range(setting, f, 0, setting.m(), false, Side::Right);
}
Poly dirac_bar_right(const Setting& setting, const Poly& f) {
  return dirac_range(setting, f, 0, setting.m(), true, Side::Right);
}

DiracSplit dirac_split(const Setting& setting, const Poly& f) {
  return {dirac_range(setting, f, 0, setting.p()), dirac_range(setting, f, setting.p() + 1, setting.m())};
}

Poly dirac_p(const Setting& setting, const Poly& f) { return dirac_range(setting, f, 0, setting.p()); }
Poly dirac_p_bar(const Setting& setting, const Poly& f) { return dirac_range(setting, f, 0, setting.p(), true); }

Poly dirac_power(const Setting& setting, const Poly& f, int k) {
  if (k < 0) throw DomainError("negative Dirac power");
  Poly out = f;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = dirac(setting, out);
  return out;
}

Poly laplacian_range(const Poly& f, std::size_t first, std::size_t last) {
  Poly out(f.algebra(), f.nvars());
  for (std::size_t i = first; i <= last; ++i) out += partial_derivative(partial_derivative(f, i), i);
  return out;
}

Poly laplacian(const Poly& f) { return laplacian_range(f, 0, f.nvars() - 1); }

Poly laplacian_p(const Setting& setting, const Poly& f, int k) {
  Poly out = f;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = laplacian_range(out, 0, static_cast<std::size_t>(setting.p()));
  return out;
}

Poly slice_restrict(const Setting& setting, const Poly& f, const SpherePoint& omega) {
  const std::size_t p = static_cast<std::size_t>(setting.p());
  if (f.nvars() != setting.ambient_vars()) throw DomainError("ambient polynomial has wrong variable count");
  if (omega.omega.size() != static_cast<std::size_t>(setting.q())) throw DomainError("sphere point has wrong length");
  Poly out(f.algebra(), setting.stem_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponents g{};
    for (std::size_t i = 0; i <= p; ++i) g[i] = e[i];
    Rational w = 1;
    unsigned rdeg = 0;
    for (std::size_t s = p + 1; s < f.nvars(); ++s) {
      for (unsigned k = 0; k < e[s]; ++k) w *= omega.omega[s - p - 1];
      rdeg += e[s];
    }
    g[p + 1] = static_cast<std::uint8_t>(rdeg);
    out.add_term(g, c, w);
  }
  return out;
}

Poly slice_dirac(const Setting& setting, const Poly& f, const SpherePoint& omega) {
  Poly g = slice_restrict(setting, f, omega);
  return dirac_p(setting, g) + left_mul(omega.element(setting), partial_derivative(g, setting.stem_vars() - 1));
}

Poly gamma_spherical(const Setting& setting, const Poly& f) {
  Poly out(f.algebra(), f.nvars());
  for (int i = setting.p() + 1; i <= setting.m(); ++i) {
    for (int j = i + 1; j <= setting.m(); ++j) {
      Exponents xi{}, xj{};
      xi[static_cast<std::size_t>(i)] = 1;
      xj[static_cast<std::size_t>(j)] = 1;
      Poly L = shift(partial_derivative(f, static_cast<std::size_t>(j)), xi) -
               shift(partial_derivative(f, static_cast<std::size_t>(i)), xj);
      Poly inner(f.algebra(), f.nvars());
      inner.add_left_basis(setting.unit_index(j), L);
      out.add_left_basis(setting.unit_index(i), inner, Rational(-1));
    }
  }
  return out;
}

Poly d_du(const Setting& setting, const Poly& g) { return partial_derivative(g, setting.stem_vars() - 1); }

namespace {

Poly times_u(const Setting& setting, const Poly& g) {
  Exponents u{};
  u[setting.stem_vars() - 1] = 1;
  return shift(g, u);
}

}  // namespace

StemPair radial_iterate(const Setting& setting, const StemPair& s, int k) {
  if (k < 0) throw DomainError("negative radial iterate");
  StemPair out = s;
  for (int i = 0; i < k; ++i) {
    out.G1 = Rational(2) * d_du(setting, out.G1);
    out.G2 = Rational(2) * d_du(setting, out.G2);
  }
  return out;
}

namespace {

StemPair system_residual(const Setting& setting, const StemPair& s, const Rational& q) {
  const Poly g2u = d_du(setting, s.G2);
  Poly first = dirac_p(setting, s.G1) - q * s.G2 - Rational(2) * times_u(setting, g2u);
  Poly second = dirac_p_bar(setting, s.G2) + Rational(2) * d_du(setting, s.G1);
  return {std::move(first), std::move(second)};
}

}  // namespace

StemPair cr_residual(const Setting& setting, const StemPair& s) { return system_residual(setting, s, 1); }
StemPair vekua_residual(const Setting& setting, const StemPair& s) {
  return system_residual(setting, s, setting.q());
}

bool cr_check(const Setting& setting, const StemPair& s) {
  StemPair r = cr_residual(setting, s);
  return r.G1.is_zero() && r.G2.is_zero();
}

bool vekua_check(const Setting& setting, const StemPair& s) {
  StemPair r = vekua_residual(setting, s);
  return r.G1.is_zero() && r.G2.is_zero();
}

StemPair slice_laplacian(const Setting& setting, const StemPair& s) {
  auto part = [&](const Poly& g, int c) {
    const Poly gu = d_du(setting, g);
    return laplacian_p(setting, g) + Rational(c) * gu + Rational(4) * times_u(setting, d_du(setting, gu));
  };
  return {part(s.G1, 2), part(s.G2, 6)};
}

}  // namespace hyperck
