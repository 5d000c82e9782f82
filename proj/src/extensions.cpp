#include "hyperck/extensions.hpp"

#include <algorithm>

#include "hyperck/errors.hpp"
#include "hyperck/operators.hpp"

namespace hyperck {

namespace {

// sum_k weight(k) (-u)^k Delta_{x_p}^k a, as a stem component.
template <class Weight>
Poly u_series(const Setting& setting, const Poly& a, Weight weight) {
  const std::size_t uslot = setting.stem_vars() - 1;
  Poly term = seed_to_stem(setting, a);
  Poly out(setting.algebra(), setting.stem_vars());
  for (int k = 0; !term.is_zero(); ++k) {
    Exponents u{};
    u[uslot] = static_cast<std::uint8_t>(k);
    out += shift(term, u) * (k % 2 == 0 ? weight(k) : -weight(k));
    term = laplacian_p(setting, term);
  }
  return out;
}

Rational inverse_factorial(unsigned n) { return Rational(1) / Rational(factorial(n)); }

// q(q+2)...(q+2k-2) times (2k)!!
Integer rising_even(int q, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= q + 2 * i;
  return r;
}

}  // namespace

StemPair ck_extend(const Setting& setting, const Poly& f0) {
  Poly d = dirac_p(setting, seed_to_stem(setting, f0)).with_nvars(static_cast<std::size_t>(setting.p()) + 1);
  return {u_series(setting, f0, [](int k) { return inverse_factorial(2 * k); }),
          u_series(setting, d, [](int k) { return inverse_factorial(2 * k + 1); })};
}

Rational gck_even_weight(int q, int k) {
  return Rational(1) / Rational(double_factorial(2 * k) * rising_even(q, k));
}

Rational gck_odd_weight(int q, int k) {
  return Rational(1) / Rational(double_factorial(2 * k) * rising_even(q, k + 1));
}

Rational hgck_odd_weight(int q, int k) {
  return Rational(1) / Rational(double_factorial(2 * k) * rising_even(q + 2, k));
}

StemPair gck_stem(const Setting& setting, const Poly& a0) {
  const int q = setting.q();
  Poly d = dirac_p(setting, seed_to_stem(setting, a0)).with_nvars(static_cast<std::size_t>(setting.p()) + 1);
  return {u_series(setting, a0, [q](int k) { return gck_even_weight(q, k); }),
          u_series(setting, d, [q](int k) { return gck_odd_weight(q, k); })};
}

Poly gck_extend(const Setting& setting, const Poly& a0) { return materialize(setting, gck_stem(setting, a0)); }

std::vector<Poly> series_coefficients(const Setting& setting, const StemPair& s) {
  const std::size_t uslot = setting.stem_vars() - 1;
  const unsigned top = std::max(s.G1.degree_in(uslot), s.G2.degree_in(uslot));
  std::vector<Poly> out(2 * (top + 1), seed_zero(setting));
  auto collect = [&](const Poly& g, std::size_t parity) {
    for (const auto& [e, c] : g.terms()) {
      const unsigned k = e[uslot];
      Exponents x = e;
      x[uslot] = 0;
      out[2 * k + parity].add_term(x, c, Rational(k % 2 == 0 ? 1 : -1));
    }
  };
  collect(s.G1, 0);
  collect(s.G2, 1);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

StemPair hgck_stem(const Setting& setting, const Poly& a0, const Poly& a1) {
  const int q = setting.q();
  return {u_series(setting, a0, [q](int k) { return gck_even_weight(q, k); }),
          u_series(setting, a1, [q](int k) { return hgck_odd_weight(q, k); })};
}

Poly hgck_extend(const Setting& setting, const Poly& a0, const Poly& a1) {
  return materialize(setting, hgck_stem(setting, a0, a1));
}

namespace {

Poly fueter_variable_side(const Setting& setting, int l, bool right) {
  if (l < 0 || l > setting.p()) throw DomainError("Fueter variable index must lie in 0..p");
  Poly z = Poly::variable(setting.algebra(), setting.ambient_vars(), static_cast<std::size_t>(l));
  for (int s = setting.p() + 1; s <= setting.m(); ++s) {
    Exponents e{};
    e[static_cast<std::size_t>(s)] = 1;
    z.add_term(e, right ? setting.v(l) * setting.v(s) : setting.v(s) * setting.v(l));
  }
  return z;
}

}  // namespace

Poly fueter_variable(const Setting& setting, int l) { return fueter_variable_side(setting, l, false); }
Poly fueter_variable_right(const Setting& setting, int l) { return fueter_variable_side(setting, l, true); }

Poly fueter_polynomial(const Setting& setting, const std::vector<int>& k, Comb comb) {
  if (k.size() != static_cast<std::size_t>(setting.p()) + 1) throw DomainError("multi-index length must be p+1");
  Poly out(setting.algebra(), setting.ambient_vars());
  std::vector<int> order;
  for (std::size_t l = 0; l < k.size(); ++l) {
    if (k[l] < 0) return out;
    order.insert(order.end(), static_cast<std::size_t>(k[l]), static_cast<int>(l));
  }
  if (order.empty()) return Poly::constant(setting.algebra(), setting.ambient_vars(), Rational(1));
  std::vector<Poly> z;
  for (std::size_t l = 0; l < k.size(); ++l) z.push_back(fueter_variable(setting, static_cast<int>(l)));
  const AssocTree tree = comb == Comb::Left ? AssocTree::left_comb(order.size()) : AssocTree::right_comb(order.size());
  std::vector<Poly> factors;
  do {
    factors.clear();
    for (int i : order) factors.push_back(z[static_cast<std::size_t>(i)]);
    out += assoc_product(factors, tree);
  } while (std::next_permutation(order.begin(), order.end()));
  return out * inverse_factorial(static_cast<unsigned>(order.size()));
}

Poly v_polynomial(const Setting& setting, const std::vector<int>& k) {
  if (k.size() != static_cast<std::size_t>(setting.p()) + 1) throw DomainError("multi-index length must be p+1");
  Exponents e{};
  Integer kfact = 1;
  for (std::size_t l = 0; l < k.size(); ++l) {
    if (k[l] < 0) return Poly(setting.algebra(), setting.ambient_vars());
    e[l] = static_cast<std::uint8_t>(k[l]);
    kfact *= factorial(static_cast<unsigned>(k[l]));
  }
  Poly seed = Poly::monomial(setting.algebra(), static_cast<std::size_t>(setting.p()) + 1, e, setting.one());
  return materialize(setting, ck_extend(setting, seed)) * (Rational(1) / Rational(kfact));
}

}  // namespace hyperck
