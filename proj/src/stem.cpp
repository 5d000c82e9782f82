#include "hyperck/stem.hpp"

#include "hyperck/errors.hpp"

namespace hyperck {

StemPair zero_stem(const Setting& setting) {
  return {Poly(setting.algebra(), setting.stem_vars()), Poly(setting.algebra(), setting.stem_vars())};
}

StemPair operator+(const StemPair& a, const StemPair& b) { return {a.G1 + b.G1, a.G2 + b.G2}; }
StemPair operator-(const StemPair& a, const StemPair& b) { return {a.G1 - b.G1, a.G2 - b.G2}; }
StemPair operator*(const Rational& s, const StemPair& a) { return {s * a.G1, s * a.G2}; }

Poly seed_zero(const Setting& setting) {
  return Poly(setting.algebra(), static_cast<std::size_t>(setting.p()) + 1);
}

Poly seed_to_stem(const Setting& setting, const Poly& seed) {
  if (!seed.uses_only_below(static_cast<std::size_t>(setting.p()) + 1)) {
    throw DomainError("seed polynomial involves a variable beyond x" + std::to_string(setting.p()));
  }
  return seed.with_nvars(setting.stem_vars());
}

Poly seed_to_ambient(const Setting& setting, const Poly& seed) {
  if (!seed.uses_only_below(static_cast<std::size_t>(setting.p()) + 1)) {
    throw DomainError("seed polynomial involves a variable beyond x" + std::to_string(setting.p()));
  }
  return seed.with_nvars(setting.ambient_vars());
}

Poly even_function(const Setting& setting, const Poly& g) {
  const std::size_t p = static_cast<std::size_t>(setting.p());
  const std::size_t m = static_cast<std::size_t>(setting.m());
  if (g.nvars() != setting.stem_vars()) throw DomainError("stem component has wrong variable count");
  Poly out(setting.algebra(), setting.ambient_vars());
  for (const auto& [e, c] : g.terms()) {
    Exponents base{};
    for (std::size_t i = 0; i <= p; ++i) base[i] = e[i];
    for (const auto& [re, rc] : sum_of_squares_power(p + 1, m, e[p + 1])) {
      Exponents full = base;
      for (std::size_t i = p + 1; i <= m; ++i) full[i] = re[i];
      out.add_term(full, c, Rational(rc));
    }
  }
  return out;
}

Poly vector_times(const Setting& setting, const Poly& g) {
  Poly h = even_function(setting, g);
  Poly out(setting.algebra(), setting.ambient_vars());
  for (int s = setting.p() + 1; s <= setting.m(); ++s) {
    for (const auto& [e, c] : h.terms()) {
      Exponents f = e;
      ++f[static_cast<std::size_t>(s)];
      out.add_left_basis_term(f, setting.unit_index(s), c, Rational(1));
    }
  }
  return out;
}

Poly materialize(const Setting& setting, const StemPair& s) {
  return even_function(setting, s.G1) + vector_times(setting, s.G2);
}

StemPair extract(const Setting& setting, const Poly& f) {
  const std::size_t p = static_cast<std::size_t>(setting.p());
  const std::size_t m = static_cast<std::size_t>(setting.m());
  if (f.nvars() != setting.ambient_vars()) throw DomainError("ambient polynomial has wrong variable count");
  StemPair s = zero_stem(setting);
  const std::size_t first = setting.unit_index(setting.p() + 1);
  for (const auto& [e, c] : f.terms()) {
    bool on_axis = true;
    for (std::size_t i = p + 2; i <= m; ++i) on_axis = on_axis && e[i] == 0;
    if (!on_axis) continue;
    Exponents g{};
    for (std::size_t i = 0; i <= p; ++i) g[i] = e[i];
    const unsigned j = e[p + 1];
    g[p + 1] = static_cast<std::uint8_t>(j / 2);
    if (j % 2 == 0)
      s.G1.add_term(g, c);
    else
      s.G2.add_left_basis_term(g, first, c, Rational(-1));
  }
  Poly diff = materialize(setting, s) - f;
  if (!diff.is_zero()) {
    throw NotSliceForm("polynomial is not of generalized partial-slice form",
                       monomial_string(diff.terms().begin()->first, f.nvars()));
  }
  return s;
}

EvenOdd partial_even_odd(const Setting& setting, const Poly& f) {
  Poly r = reflect(f, static_cast<std::size_t>(setting.p()) + 1);
  const Rational half(1, 2);
  return {half * (f + r), half * (f - r)};
}

SphericalParts spherical_parts(const StemPair& s) { return {s.G1, s.G2}; }

std::vector<Rational> slice_point(const Setting& setting, std::span<const Rational> xp, const Rational& r,
                                  const SpherePoint& omega) {
  if (xp.size() != static_cast<std::size_t>(setting.p()) + 1) throw DomainError("x_p has wrong length");
  if (omega.omega.size() != static_cast<std::size_t>(setting.q())) throw DomainError("sphere point has wrong length");
  std::vector<Rational> x(xp.begin(), xp.end());
  for (const auto& w : omega.omega) x.push_back(r * w);
  return x;
}

namespace {

struct EtaValues {
  AlgebraElement plus, minus;
};

EtaValues eta_values(const Setting& setting, const Poly& f, std::span<const Rational> xp, const Rational& r,
                     const SpherePoint& eta) {
  return {evaluate(f, slice_point(setting, xp, r, eta)), evaluate(f, slice_point(setting, xp, -r, eta))};
}

}  // namespace

bool representation_holds(const Setting& setting, const Poly& f, std::span<const Rational> xp, const Rational& r,
                          const SpherePoint& omega, const SpherePoint& eta) {
  const AlgebraElement lhs = evaluate(f, slice_point(setting, xp, r, omega));
  const auto [plus, minus] = eta_values(setting, f, xp, r, eta);
  const Rational half(1, 2);
  const AlgebraElement w = omega.element(setting), h = eta.element(setting);
  const AlgebraElement rhs = half * (plus + minus) + half * (w * (h * (minus - plus)));
  return lhs == rhs;
}

bool representation_check(const Setting& setting, const StemPair& s, std::span<const Rational> xp,
                          const Rational& r, const SpherePoint& omega, const SpherePoint& eta) {
  const Poly f = materialize(setting, s);
  if (!representation_holds(setting, f, xp, r, omega, eta)) return false;
  const auto [plus, minus] = eta_values(setting, f, xp, r, eta);
  const Rational half(1, 2);
  const AlgebraElement F1 = half * (plus + minus);
  const AlgebraElement F2 = half * (eta.element(setting) * (minus - plus));
  std::vector<Rational> stem_point(xp.begin(), xp.end());
  stem_point.push_back(r * r);
  return F1 == evaluate(s.G1, stem_point) && F2 == r * evaluate(s.G2, stem_point);
}

}  // namespace hyperck
