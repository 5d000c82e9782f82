#include "hyperck/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/fueter_sce.hpp"
#include "hyperck/kernels.hpp"
#include "hyperck/operators.hpp"
#include "hyperck/random.hpp"

namespace hyperck {

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.failures.empty()) return false;
  return true;
}

Json SuiteReport::to_json() const {
  Json results_json = Json::array();
  for (const auto& r : results) {
    results_json.push_back(Json{{"theorem", r.theorem}, {"trials", r.trials}, {"failures", r.failures}});
  }
  return Json{{"suite", suite}, {"seed", seed}, {"results", std::move(results_json)}, {"passed", passed()}};
}

namespace {

class Context {
 public:
  Context(const VerifyOptions& options, std::uint64_t seed) : options(options), rng(seed) {}

  const VerifyOptions& options;
  Rng rng;

  void record(const std::string& law, bool ok, const std::function<Json()>& payload) {
    auto& r = laws_[law];
    r.theorem = law;
    ++r.trials;
    if (!ok) r.failures.push_back(payload());
  }

  // Runs `check`; an exception counts as a failure carrying its message.
  void attempt(const std::string& law, const std::function<bool()>& check, const std::function<Json()>& payload) {
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    record(law, ok, [&] {
      Json j = payload();
      if (!error.empty()) j["error"] = error;
      return j;
    });
  }

  int trials(int fallback) const { return options.trials > 0 ? options.trials : fallback; }
  int degree(int fallback) const { return options.degree > 0 ? options.degree : fallback; }

  std::vector<LawResult> take() {
    std::vector<LawResult> out;
    for (auto& [name, r] : laws_) out.push_back(std::move(r));
    return out;
  }

 private:
  std::map<std::string, LawResult> laws_;
};

Json payload(const Setting& setting, int trial, Json extra = Json::object()) {
  Json j{{"setting", setting.spec()}, {"trial", trial}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

std::vector<Setting> parse_settings(const std::vector<std::string>& specs) {
  std::vector<Setting> out;
  for (const auto& s : specs) out.push_back(Setting::parse(s));
  return out;
}

// Default settings, narrowed by --setting or --q.
std::vector<Setting> settings_for(const Context& ctx, const std::vector<std::string>& defaults) {
  if (ctx.options.setting) return {Setting::parse(*ctx.options.setting)};
  std::vector<Setting> out;
  for (auto& s : parse_settings(defaults)) {
    if (ctx.options.qs.empty() || std::count(ctx.options.qs.begin(), ctx.options.qs.end(), s.q()) > 0) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Settings over R_{0,5} (m=5) and the octonions (m=7) with the requested q.
std::vector<Setting> settings_by_q(const Context& ctx, const std::vector<int>& default_qs, bool odd_only) {
  const std::vector<int>& qs = ctx.options.qs.empty() ? default_qs : ctx.options.qs;
  for (int q : qs) {
    if (q < 1) throw DomainError("q must be positive");
    if (odd_only && q % 2 == 0) throw DomainError("odd q required (got q = " + std::to_string(q) + ")");
  }
  if (ctx.options.setting) {
    Setting s = Setting::parse(*ctx.options.setting);
    if (odd_only && s.q() % 2 == 0) throw DomainError("odd q required (got q = " + std::to_string(s.q()) + ")");
    return {s};
  }
  std::vector<Setting> out;
  auto clifford = Algebra::make(AlgebraKind::Clifford, 5);
  auto octonion = Algebra::make(AlgebraKind::Octonion);
  for (int q : qs) {
    if (q <= 5) out.emplace_back(clifford, 5, 5 - q);
    if (q <= 7) out.emplace_back(octonion, 7, 7 - q);
  }
  return out;
}

PolyShape shape_of(int degree) { return PolyShape{degree, 4, 2}; }

// f restricted to x_q = 0, as a seed.
Poly restrict_to_base(const Setting& setting, const Poly& f) {
  const std::size_t nseed = static_cast<std::size_t>(setting.p()) + 1;
  Poly out(f.algebra(), nseed);
  for (const auto& [e, c] : f.terms()) {
    bool base = true;
    for (std::size_t i = nseed; i < f.nvars(); ++i) base = base && e[i] == 0;
    if (base) out.add_term(e, c);
  }
  return out;
}

// g(x_p, u) -> g(x_p, r^2) in the variables (x_p, r).
Poly u_to_r2(const Poly& g) {
  Poly out(g.algebra(), g.nvars());
  const std::size_t last = g.nvars() - 1;
  for (const auto& [e, c] : g.terms()) {
    Exponents f = e;
    f[last] = static_cast<std::uint8_t>(2 * e[last]);
    out.add_term(f, c);
  }
  return out;
}

Poly times_last(const Poly& g) {
  Exponents e{};
  e[g.nvars() - 1] = 1;
  return shift(g, e);
}

// (-u)^k g for a seed g, as a stem component.
Poly minus_u_power(const Setting& setting, const Poly& g, int k) {
  Exponents e{};
  e[setting.stem_vars() - 1] = static_cast<std::uint8_t>(k);
  return shift(seed_to_stem(setting, g), e) * Rational(k % 2 == 0 ? 1 : -1);
}

// x_q^{2k} g and x_q^{2k+1} g.
Poly xq_even(const Setting& setting, const Poly& g, int k) {
  return even_function(setting, minus_u_power(setting, g, k));
}
Poly xq_odd(const Setting& setting, const Poly& g, int k) {
  return vector_times(setting, minus_u_power(setting, g, k));
}

std::vector<Rational> random_base_point(Rng& rng, const Setting& setting) {
  std::vector<Rational> xp;
  for (int i = 0; i <= setting.p(); ++i) xp.push_back(rng.rational(8));
  return xp;
}

// ---------------------------------------------------------------------------

void suite_algebra(Context& ctx) {
  std::vector<AlgebraPtr> algebras;
  if (ctx.options.setting) {
    algebras.push_back(Setting::parse(*ctx.options.setting).algebra());
  } else {
    algebras = {Algebra::make(AlgebraKind::Clifford, 3), Algebra::make(AlgebraKind::Clifford, 5),
                Algebra::make(AlgebraKind::Octonion)};
  }
  const int n = ctx.trials(500);
  for (const auto& alg : algebras) {
    const Setting setting(alg, alg->generators(), alg->generators() / 2);
    auto el = [&](const AlgebraElement& a) { return element_to_json(a); };

    // Descriptor invariants over all basis pairs.
    {
      bool ok = true;
      std::string where;
      for (std::size_t i = 0; i < alg->dim() && ok; ++i) {
        auto a = alg->product(0, i), b = alg->product(i, 0);
        if (a.sign != 1 || a.index != i || b.sign != 1 || b.index != i) ok = false, where = "unity at " + alg->label(i);
        for (std::size_t j = 0; j < alg->dim() && ok; ++j) {
          AlgebraElement ei = AlgebraElement::basis(alg, i), ej = AlgebraElement::basis(alg, j);
          if ((ei * ej).conj() != ej.conj() * ei.conj()) ok = false, where = alg->label(i) + "," + alg->label(j);
        }
      }
      for (int s = 1; s <= alg->generators() && ok; ++s) {
        for (int t = 1; t <= alg->generators() && ok; ++t) {
          AlgebraElement es = AlgebraElement::basis(alg, alg->generator_index(s));
          AlgebraElement et = AlgebraElement::basis(alg, alg->generator_index(t));
          if (es * et + et * es != AlgebraElement::scalar(alg, s == t ? -2 : 0)) {
            ok = false, where = "e" + std::to_string(s) + " e" + std::to_string(t);
          }
        }
      }
      ctx.record("algebra.descriptor_invariants", ok, [&] { return Json{{"algebra", alg->spec()}, {"at", where}}; });
    }

    for (int t = 0; t < n; ++t) {
      AlgebraElement a = random_dense_element(ctx.rng, alg);
      AlgebraElement b = random_dense_element(ctx.rng, alg);
      AlgebraElement c = random_dense_element(ctx.rng, alg);
      const Rational r = ctx.rng.rational();
      auto triple = [&] {
        return Json{{"algebra", alg->spec()}, {"trial", t}, {"a", el(a)}, {"b", el(b)}, {"c", el(c)}};
      };
      const AlgebraElement abc = associator(a, b, c);
      ctx.record("algebra.associator_alternating",
                 associator(a, a, b).is_zero() && associator(a, b, b).is_zero() && associator(b, a, c) == -abc &&
                     associator(a, c, b) == -abc && associator(c, b, a) == -abc,
                 triple);
      ctx.record("algebra.moufang_left", a * (b * (a * c)) == ((a * b) * a) * c, triple);
      ctx.record("algebra.moufang_right", ((a * b) * c) * b == a * ((b * c) * b), triple);
      ctx.record("algebra.moufang_middle", (a * b) * (c * a) == (a * (b * c)) * a, triple);
      ctx.record("algebra.anti_involution", a.conj().conj() == a && (a * b).conj() == b.conj() * a.conj(), triple);
      ctx.record("algebra.real_associator", associator(AlgebraElement::scalar(alg, r), b, c).is_zero(), triple);

      // Paravectors x in M: inverse exists and Artin identities apply.
      AlgebraElement x(alg);
      for (int s = 0; s <= setting.m(); ++s) x[setting.unit_index(s)] = ctx.rng.rational();
      AlgebraElement y(alg);
      for (int s = 0; s <= setting.m(); ++s) y[setting.unit_index(s)] = ctx.rng.rational();
      auto pair = [&] { return Json{{"algebra", alg->spec()}, {"trial", t}, {"x", el(x)}, {"b", el(b)}}; };
      ctx.record("algebra.artin_paravector", associator(x, x, b).is_zero() && associator(x.conj(), x, b).is_zero(),
                 pair);
      // Inverse of a random element when n(a) is a nonzero real (always for octonions).
      for (const AlgebraElement* z : {&a, &x}) {
        if (auto inv = inverse_if_quadratic(*z)) {
          ctx.record("algebra.artin_inverse", associator(*inv, *z, b).is_zero(), [&] {
            return Json{{"algebra", alg->spec()}, {"trial", t}, {"x", el(*z)}, {"y", el(b)}};
          });
        }
      }
      {
        const Rational two_inner = 2 * euclidean_inner(x, y);
        auto t1 = trace_norm(x * y.conj()).trace, t2 = trace_norm(y.conj() * x).trace;
        auto nx = trace_norm(x).norm;
        ctx.record("algebra.trace_inner_product",
                   t1 == AlgebraElement::scalar(alg, two_inner) && t2 == t1 &&
                       nx == AlgebraElement::scalar(alg, euclidean_inner(x, x)),
                   [&] { return Json{{"algebra", alg->spec()}, {"trial", t}, {"x", el(x)}, {"y", el(y)}}; });
      }
      {
        AlgebraElement base(alg);
        for (int s = 0; s <= setting.p(); ++s) base[setting.unit_index(s)] = ctx.rng.rational();
        const AlgebraElement w = rational_sphere_point(setting, ctx.rng.next()).element(setting);
        ctx.record("algebra.exchange_lemma", base * (w * b) == w * (base.conj() * b), [&] {
          return Json{{"setting", setting.spec()}, {"trial", t}, {"a", el(base)}, {"omega", el(w)}, {"b", el(b)}};
        });
      }
      ctx.record("algebra.paravector_in_cone", cone_membership(x).in_quadratic_cone, pair);
    }
  }
}

void suite_hypercomplex(Context& ctx) {
  std::vector<Setting> settings;
  if (ctx.options.setting) {
    settings.push_back(Setting::parse(*ctx.options.setting));
  } else {
    for (int n = 1; n <= 5; ++n) {
      auto alg = Algebra::make(AlgebraKind::Clifford, n);
      for (int m = 1; m <= n; ++m)
        for (int p = 0; p < m; ++p) settings.emplace_back(alg, m, p);
    }
    auto oct = Algebra::make(AlgebraKind::Octonion);
    for (int m = 1; m <= 7; ++m)
      for (int p = 0; p < m; ++p) settings.emplace_back(oct, m, p);
  }
  for (const auto& s : settings) {
    auto violations = hypercomplex_basis_violations(s);
    ctx.record("hypercomplex.basis_conditions", violations.empty(),
               [&] { return Json{{"setting", s.spec()}, {"violations", violations}}; });
    for (int i = 0; i < 3; ++i) {
      const SpherePoint w = rational_sphere_point(s, ctx.rng.next());
      Rational sum = 0;
      for (const auto& c : w.omega) sum += c * c;
      const AlgebraElement e = w.element(s);
      const auto cm = cone_membership(e);
      ctx.record("hypercomplex.sphere_point", sum == 1 && e * e == AlgebraElement::scalar(s.algebra(), -1) &&
                                                  cm.in_imaginary_sphere && cm.in_quadratic_cone,
                 [&] { return Json{{"setting", s.spec()}, {"omega", element_to_json(e)}}; });
    }
  }
}

void suite_ck(Context& ctx) {
  const auto settings = settings_for(ctx, {"clifford:n=3,m=3,p=0", "clifford:n=3,m=3,p=1", "clifford:n=5,m=5,p=2",
                                           "octonion,m=7,p=0", "octonion,m=7,p=4"});
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (const auto& s : settings) {
    for (int t = 0; t < n; ++t) {
      const Poly f0 = random_seed(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"seed", poly_to_json(f0)}}); };
      const StemPair S = ck_extend(s, f0);
      ctx.record("ck.cr_check", cr_check(s, S), pl);
      const Poly f = materialize(s, S);
      ctx.record("ck.restriction", restrict_to_base(s, f) == f0, pl);
      ctx.record("ck.stem_round_trip", extract(s, f) == S, pl);
      Poly trace(s.algebra(), f0.nvars());
      for (const auto& [e, c] : S.G1.terms())
        if (e[s.stem_vars() - 1] == 0) trace.add_term(e, c);
      ctx.record("ck.uniqueness_from_trace", ck_extend(s, trace.with_nvars(f0.nvars())) == S, pl);
      const StemPair lap = slice_laplacian(s, S);
      ctx.record("ck.slice_harmonic", lap.G1.is_zero() && lap.G2.is_zero(), pl);
      for (int i = 0; i < 5; ++i) {
        const SpherePoint w = rational_sphere_point(s, ctx.rng.next());
        ctx.record("ck.slice_dirac_vanishes", slice_dirac(s, f, w).is_zero(), [&] {
          Json j = pl();
          j["omega"] = element_to_json(w.element(s));
          return j;
        });
      }
    }
  }
}

void suite_gck(Context& ctx) {
  const auto settings = settings_by_q(ctx, {1, 2, 3, 5}, false);
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (const auto& s : settings) {
    const int q = s.q();
    for (int t = 0; t < n; ++t) {
      const Poly a0 = random_seed(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"A0", poly_to_json(a0)}}); };
      const Poly f = gck_extend(s, a0);
      ctx.record("gck.monogenic", dirac(s, f).is_zero(), pl);
      ctx.record("gck.restriction", restrict_to_base(s, f) == a0, pl);
      ctx.attempt(
          "gck.coefficient_recursion",
          [&] {
            const auto A = series_coefficients(s, extract(s, f));
            if (A.empty() || A[0] != a0) return false;
            auto at = [&](std::size_t j) { return j < A.size() ? A[j] : seed_zero(s); };
            for (std::size_t k = 0; 2 * k < A.size(); ++k) {
              const Poly even = seed_to_stem(s, at(2 * k)), odd = seed_to_stem(s, at(2 * k + 1));
              if (Rational(static_cast<long>(2 * k) + q) * odd != dirac_p(s, even)) return false;
              if (Rational(static_cast<long>(2 * k) + 2) * seed_to_stem(s, at(2 * k + 2)) != dirac_p_bar(s, odd))
                return false;
            }
            return true;
          },
          pl);
      if (q == 1) ctx.record("gck.q1_equals_ck", f == materialize(s, ck_extend(s, a0)), pl);
    }
  }
}

void suite_hgck(Context& ctx) {
  const auto settings = settings_by_q(ctx, {1, 2, 3, 5}, false);
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (const auto& s : settings) {
    const int q = s.q();
    const Poly zero = seed_zero(s);
    for (int t = 0; t < n; ++t) {
      const Poly a0 = random_seed(ctx.rng, s, shape);
      const Poly a1 = random_seed(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"A0", poly_to_json(a0)}, {"A1", poly_to_json(a1)}}); };
      const Poly f = hgck_extend(s, a0, a1);
      ctx.record("hgck.harmonic", laplacian(f).is_zero(), pl);
      ctx.record("hgck.initial_value", restrict_to_base(s, f) == a0, pl);
      ctx.record("hgck.initial_slope", restrict_to_base(s, dirac_split(s, f).vector) == Rational(-q) * a1, pl);
      ctx.record("hgck.split", f == hgck_extend(s, a0, zero) + hgck_extend(s, zero, a1), pl);
      ctx.attempt("hgck.slice_form", [&] { return materialize(s, extract(s, f)) == f; }, pl);
      const EvenOdd parts = partial_even_odd(s, f);
      ctx.record("hgck.partial_parts",
                 parts.even == hgck_extend(s, a0, zero) && parts.odd == hgck_extend(s, zero, a1), pl);
      const Poly da0 = dirac_p(s, seed_to_stem(s, a0)).with_nvars(a0.nvars());
      const Poly dba0 = dirac_p_bar(s, seed_to_stem(s, a0)).with_nvars(a0.nvars());
      ctx.record("hgck.corollary_gck",
                 gck_extend(s, a0) == hgck_extend(s, a0, zero) + Rational(1, q) * hgck_extend(s, zero, da0), pl);
      ctx.record("hgck.dbar_even", dirac_bar(s, hgck_extend(s, a0, zero)) == gck_extend(s, dba0), pl);
      ctx.record("hgck.dbar_odd", dirac_bar(s, hgck_extend(s, zero, a0)) == Rational(q) * gck_extend(s, a0), pl);
    }
  }
}

std::vector<std::vector<int>> multi_indices(int len, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == len) {
      out.push_back(k);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, max_total);
  return out;
}

void suite_fueter(Context& ctx) {
  const auto settings = settings_for(
      ctx, {"clifford:n=5,m=5,p=1", "clifford:n=5,m=5,p=2", "octonion,m=7,p=1", "octonion,m=7,p=2"});
  const int max_total = ctx.degree(4);
  for (const auto& s : settings) {
    for (int l = 0; l <= s.p(); ++l) {
      Poly xl = Poly::variable(s.algebra(), static_cast<std::size_t>(s.p()) + 1, static_cast<std::size_t>(l));
      const Poly z = fueter_variable(s, l);
      ctx.record("fueter.variable_is_ck", materialize(s, ck_extend(s, xl)) == z,
                 [&] { return payload(s, l, {{"l", l}}); });
      // z_l + z_l^R = 2 x_l + sum_s x_s (v_s v_l + v_l v_s): 2 x_l for l >= 1, 2 z_0 for l = 0.
      const Poly zr = fueter_variable_right(s, l);
      const Poly expect = l == 0 ? Rational(2) * z : Rational(2) * Poly::variable(s.algebra(), s.ambient_vars(), l);
      ctx.record("fueter.right_variable_relation", z + zr == expect, [&] { return payload(s, l, {{"l", l}}); });
    }
    for (const auto& k : multi_indices(s.p() + 1, max_total)) {
      auto pl = [&] { return Json{{"setting", s.spec()}, {"k", k}}; };
      const Poly P = fueter_polynomial(s, k, Comb::Left);
      ctx.record("fueter.v_equals_p", P == v_polynomial(s, k), pl);
      ctx.record("fueter.association_order_independent", P == fueter_polynomial(s, k, Comb::Right), pl);
      ctx.record("fueter.monogenic_slice", cr_check(s, extract(s, P)), pl);
    }
  }
}

void suite_fueter_sce(Context& ctx) {
  std::vector<Setting> settings = settings_by_q(ctx, {3, 5, 7}, true);
  if (!ctx.options.setting && (ctx.options.qs.empty() ||
                               std::count(ctx.options.qs.begin(), ctx.options.qs.end(), 3) > 0)) {
    settings.push_back(Setting::parse("clifford:n=3,m=3,p=0"));
  }
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (int q : {1, 3, 5, 7}) {
    const FSConstants fs = fs_constants(q);
    ctx.record("fueter_sce.constants", fs.C[static_cast<std::size_t>((q - 1) / 2)] == Rational(double_factorial(q - 1)),
               [&] { return Json{{"q", q}}; });
  }
  for (const auto& s : settings) {
    const int q = s.q();
    if (q == 3 && s.p() == 0) {
      Poly x0sq = Poly::monomial(s.algebra(), 1, Exponents{2}, s.one());
      const Poly z2 = materialize(s, fueter_sce_map(s, ck_extend(s, x0sq)));
      const Poly direct = laplacian(materialize(s, ck_extend(s, x0sq)));
      const Poly minus4 = Poly::constant(s.algebra(), s.ambient_vars(), Rational(-4));
      ctx.record("fueter_sce.spot_value_laplacian_x_squared", z2 == minus4 && direct == minus4,
                 [&] { return Json{{"setting", s.spec()}, {"map", poly_to_json(z2)}, {"direct", poly_to_json(direct)}}; });
    }
    for (int t = 0; t < n; ++t) {
      const Poly f0 = random_seed(ctx.rng, s, shape);
      const StemPair S = ck_extend(s, f0);
      auto pl = [&] { return payload(s, t, {{"stem", stem_to_json(S)}}); };
      const StemPair F = fueter_sce_map(s, S);
      ctx.record("fueter_sce.vekua", vekua_check(s, F), pl);
      const Poly f = materialize(s, S);
      ctx.record("fueter_sce.monogenic", dirac(s, materialize(s, F)).is_zero(), pl);
      Poly lap = f;
      for (int k = 0; k <= (q + 1) / 2; ++k) {
        const StemPair via_stem = laplacian_power_stem(s, S, k);
        ctx.attempt("fueter_sce.laplacian_power_routes", [&] { return extract(s, lap) == via_stem; }, pl);
        const Poly g2k = even_function(s, radial_iterate(s, S, k).G2);
        ctx.record("fueter_sce.dirac_of_laplacian_power", dirac(s, lap) == -fs_c(q, k + 1) * g2k, pl);
        if (k < (q + 1) / 2) lap = laplacian(lap);
      }
      ctx.record("fueter_sce.annihilation", lap.is_zero(), pl);
    }
  }
}

void suite_diagrams(Context& ctx) {
  const auto settings = settings_by_q(ctx, {3, 5}, true);
  const int n = ctx.trials(50);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (const auto& s : settings) {
    for (int t = 0; t < n; ++t) {
      const Poly f0 = random_seed(ctx.rng, s, shape);
      for (auto verify : {&verify_diagram_M, &verify_diagram_MH, &verify_diagram_H}) {
        if (verify == &verify_diagram_H && s.q() < 3) continue;
        const DiagramReport report = verify(s, f0);
        ctx.record("diagrams." + report.theorem, report.passed(), [&] {
          Json failed = Json::array();
          for (const auto& c : report.checks)
            if (!c.holds) failed.push_back(Json{{"identity", c.name}, {"detail", c.detail}});
          return payload(s, t, {{"f0", poly_to_json(f0)}, {"failed", failed}});
        });
      }
    }
  }
}

void suite_kernels(Context& ctx) {
  const auto settings = settings_for(ctx, {"clifford:n=2,m=2", "clifford:n=3,m=3", "octonion,m=2", "octonion,m=3"});
  const int top = ctx.degree(4);
  for (const auto& s : settings) {
    const std::size_t nu = s.ambient_vars();
    {
      KelvinFunction fund{Poly::constant(s.algebra(), nu, Rational(1)), static_cast<int>(nu) - 2};
      ctx.record("kernels.fundamental_solution", kelvin_laplacian(fund).is_zero(),
                 [&] { return Json{{"setting", s.spec()}}; });
    }
    for (int k = 1; k <= top; ++k) {
      const KelvinFunction E = poly_kernel(s, k);
      KelvinFunction left = E, right = E;
      for (int n = 1; n <= k; ++n) {
        left = kelvin_dirac(s, left);
        right = kelvin_dirac_right(s, right);
        const bool lok = n == k ? left.is_zero() : kelvin_equal(left, poly_kernel(s, k - n));
        const bool rok = n == k ? right.is_zero() : kelvin_equal(right, poly_kernel(s, k - n));
        auto pl = [&] { return Json{{"setting", s.spec()}, {"k", k}, {"n", n}}; };
        ctx.record("kernels.dirac_power_left", lok, pl);
        ctx.record("kernels.dirac_power_right", rok, pl);
      }
    }
  }
  const auto slice_settings = settings_for(ctx, {"clifford:n=3,m=3,p=0", "clifford:n=3,m=3,p=1", "clifford:n=3,m=3,p=2",
                                                 "octonion,m=7,p=0", "octonion,m=7,p=1", "octonion,m=7,p=2"});
  for (const auto& s : slice_settings) {
    const SliceKelvin E = slice_cauchy_kernel(s);
    auto pl = [&] { return Json{{"setting", s.spec()}}; };
    ctx.attempt("kernels.slice_cauchy_left", [&] { return slice_dirac_left(s, E).is_zero(); }, pl);
    ctx.attempt("kernels.slice_cauchy_right", [&] { return slice_dirac_right(s, E).is_zero(); }, pl);
  }
}

// Iterated D^k f against the symmetrized multi-index sums with both combs.
bool dirac_power_symmetrized(const Setting& s, const Poly& f, int k) {
  const Poly iterated = dirac_power(s, f, k);
  for (Comb comb : {Comb::Left, Comb::Right}) {
    Poly sum(f.algebra(), f.nvars());
    for (const auto& idx : multi_indices(s.m() + 1, k)) {
      int total = 0;
      for (int v : idx) total += v;
      if (total != k) continue;
      Poly d = f;
      std::vector<int> order;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (int j = 0; j < idx[i]; ++j) d = partial_derivative(d, i);
        order.insert(order.end(), static_cast<std::size_t>(idx[i]), static_cast<int>(i));
      }
      if (d.is_zero()) continue;
      const AssocTree tree = comb == Comb::Left ? AssocTree::left_comb(order.size() + 1)
                                                : AssocTree::right_comb(order.size() + 1);
      do {
        std::vector<Poly> factors;
        for (int i : order) factors.push_back(Poly::constant(s.algebra(), f.nvars(), s.v(i)));
        factors.push_back(d);
        sum += assoc_product(factors, tree);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    if (sum != iterated) return false;
  }
  return true;
}

void suite_operators(Context& ctx) {
  const auto settings = settings_for(ctx, {"clifford:n=3,m=3,p=1", "clifford:n=5,m=5,p=2", "octonion,m=7,p=3"});
  const int n = ctx.trials(200);
  const int degree = ctx.degree(5);
  const PolyShape shape = shape_of(degree);
  for (const auto& s : settings) {
    const int q = s.q();
    for (int t = 0; t < n; ++t) {
      const Poly f = random_ambient(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"f", poly_to_json(f)}}); };
      const Poly lap = laplacian(f);
      ctx.record("operators.laplacian_routes",
                 dirac_bar(s, dirac(s, f)) == lap && dirac(s, dirac_bar(s, f)) == lap &&
                     dirac_bar_right(s, dirac_right(s, f)) == lap && dirac_right(s, dirac_bar_right(s, f)) == lap,
                 pl);
      const DiracSplit split = dirac_split(s, f);
      ctx.record("operators.dirac_split_sum", split.base + split.vector == dirac(s, f), pl);
    }
    for (int t = 0; t < std::max(1, n / 2); ++t) {
      const StemPair S = random_stem(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"stem", stem_to_json(S)}}); };
      const Poly f = materialize(s, S);
      ctx.record("operators.gamma_identity", gamma_spherical(s, f) == Rational(q - 1) * vector_times(s, S.G2), pl);
      const SpherePoint w = rational_sphere_point(s, ctx.rng.next());
      ctx.record("operators.dirac_minus_slice_dirac",
                 slice_restrict(s, dirac(s, f), w) - slice_dirac(s, f, w) == Rational(1 - q) * u_to_r2(S.G2), pl);
      const StemPair R = cr_residual(s, S);
      const AlgebraElement we = w.element(s);
      ctx.record("operators.cr_residual_route",
                 slice_dirac(s, f, w) == u_to_r2(R.G1) + left_mul(we, times_last(u_to_r2(R.G2))), pl);
      const StemPair L = slice_laplacian(s, S);
      const Poly restricted = slice_restrict(s, f, w);
      ctx.record("operators.slice_laplacian_route",
                 laplacian(restricted) == u_to_r2(L.G1) + left_mul(we, times_last(u_to_r2(L.G2))), pl);
      // GPS-regular stem from the same data.
      const StemPair C = ck_extend(s, restrict_to_base(s, f));
      for (int k = 0; k <= 3; ++k) {
        const StemPair AB = radial_iterate(s, C, k);
        const Poly lhs = dirac_p(s, AB.G1) - AB.G2 - Rational(2) * times_last(d_du(s, AB.G2));
        ctx.record("operators.radial_interrelation", lhs == Rational(2 * k) * AB.G2, pl);
      }
    }
    // Splitting lemma, eight formulas.
    for (int t = 0; t < std::max(1, n / 10); ++t) {
      const Poly g = random_seed(ctx.rng, s, shape);
      const Poly dg = dirac_p(s, seed_to_stem(s, g)).with_nvars(g.nvars());
      const Poly dbg = dirac_p_bar(s, seed_to_stem(s, g)).with_nvars(g.nvars());
      auto pl = [&] { return payload(s, t, {{"g", poly_to_json(g)}}); };
      auto Dq = [&](const Poly& h, bool bar) { return dirac_range(s, h, s.p() + 1, s.m(), bar); };
      auto Dp = [&](const Poly& h, bool bar) { return dirac_range(s, h, 0, s.p(), bar); };
      for (int k = 0; k <= 3; ++k) {
        const Poly even = xq_even(s, g, k), odd = xq_odd(s, g, k);
        const Poly below = k > 0 ? xq_odd(s, g, k - 1) : Poly(s.algebra(), s.ambient_vars());
        ctx.record("operators.splitting_lemma.Dp_even", Dp(even, false) == xq_even(s, dg, k), pl);
        ctx.record("operators.splitting_lemma.Dp_odd", Dp(odd, false) == xq_odd(s, dbg, k), pl);
        ctx.record("operators.splitting_lemma.Dq_even", Dq(even, false) == Rational(-2 * k) * below, pl);
        ctx.record("operators.splitting_lemma.Dq_odd", Dq(odd, false) == Rational(-(2 * k + q)) * even, pl);
        ctx.record("operators.splitting_lemma.Dbar_p_even", Dp(even, true) == xq_even(s, dbg, k), pl);
        ctx.record("operators.splitting_lemma.Dbar_p_odd", Dp(odd, true) == xq_odd(s, dg, k), pl);
        ctx.record("operators.splitting_lemma.Dbar_q_even", Dq(even, true) == Rational(2 * k) * below, pl);
        ctx.record("operators.splitting_lemma.Dbar_q_odd", Dq(odd, true) == Rational(2 * k + q) * even, pl);
      }
    }
    // Iterated Dirac powers against symmetrized sums, degree <= 3, k <= 3.
    const PolyShape small = shape_of(std::min(degree, 3));
    for (int t = 0; t < std::max(1, n / 20); ++t) {
      const Poly f = random_ambient(ctx.rng, s, small);
      for (int k = 1; k <= 3; ++k) {
        ctx.record("operators.dirac_power_symmetrized", dirac_power_symmetrized(s, f, k),
                   [&] { return payload(s, t, {{"f", poly_to_json(f)}, {"k", k}}); });
      }
    }
  }
}

void suite_representation(Context& ctx) {
  const auto settings = settings_for(
      ctx, {"clifford:n=3,m=3,p=0", "clifford:n=5,m=5,p=2", "octonion,m=7,p=0", "octonion,m=7,p=4"});
  const int n = ctx.trials(50);
  const PolyShape shape = shape_of(ctx.degree(5));
  constexpr int kConfigs = 20;
  for (const auto& s : settings) {
    for (int t = 0; t < n; ++t) {
      const StemPair S = ck_extend(s, random_seed(ctx.rng, s, shape));
      for (int c = 0; c < kConfigs; ++c) {
        const auto xp = random_base_point(ctx.rng, s);
        const Rational r = ctx.rng.nonzero_rational(8);
        const SpherePoint w = rational_sphere_point(s, ctx.rng.next());
        const SpherePoint h = rational_sphere_point(s, ctx.rng.next());
        ctx.record("representation.formula", representation_check(s, S, xp, r, w, h), [&] {
          Json point = Json::array();
          for (const auto& x : xp) point.push_back(x.get_str());
          return payload(s, t,
                         {{"stem", stem_to_json(S)}, {"xp", point}, {"r", r.get_str()},
                          {"omega", element_to_json(w.element(s))}, {"eta", element_to_json(h.element(s))}});
        });
      }
      const SpherePoint w = rational_sphere_point(s, ctx.rng.next());
      ctx.record("representation.eta_equals_omega",
                 representation_check(s, S, random_base_point(ctx.rng, s), ctx.rng.nonzero_rational(8), w, w),
                 [&] { return payload(s, t, {{"stem", stem_to_json(S)}}); });
    }
    if (s.q() < 2) continue;
    // Non-slice polynomials violate the formula somewhere.
    for (int t = 0; t < n; ++t) {
      const Poly f = random_ambient(ctx.rng, s, shape_of(3));
      bool slice = true;
      try {
        extract(s, f);
      } catch (const NotSliceForm&) {
        slice = false;
      }
      if (slice) continue;
      bool violated = false;
      for (int c = 0; c < kConfigs && !violated; ++c) {
        violated = !representation_holds(s, f, random_base_point(ctx.rng, s), ctx.rng.nonzero_rational(8),
                                         rational_sphere_point(s, ctx.rng.next()),
                                         rational_sphere_point(s, ctx.rng.next()));
      }
      ctx.record("representation.detects_non_slice", violated,
                 [&] { return payload(s, t, {{"f", poly_to_json(f)}}); });
    }
  }
}

void suite_poly(Context& ctx) {
  const auto settings = settings_for(ctx, {"clifford:n=3,m=3,p=1", "octonion,m=7,p=3"});
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(std::min(ctx.degree(3), 4));
  for (const auto& s : settings) {
    const std::size_t nv = s.ambient_vars();
    for (int t = 0; t < n; ++t) {
      const Poly f = random_ambient(ctx.rng, s, shape), g = random_ambient(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"f", poly_to_json(f)}, {"g", poly_to_json(g)}}); };
      const std::size_t i = static_cast<std::size_t>(ctx.rng.uniform(0, static_cast<std::int64_t>(nv) - 1));
      const std::size_t j = static_cast<std::size_t>(ctx.rng.uniform(0, static_cast<std::int64_t>(nv) - 1));
      ctx.record("poly.leibniz",
                 partial_derivative(f * g, i) == partial_derivative(f, i) * g + f * partial_derivative(g, i), pl);
      ctx.record("poly.derivatives_commute",
                 partial_derivative(partial_derivative(f, i), j) == partial_derivative(partial_derivative(f, j), i),
                 pl);
      ctx.record("poly.reflect_involution", reflect(reflect(f, s.p() + 1), s.p() + 1) == f, pl);
      std::vector<Rational> point;
      for (std::size_t k = 0; k < nv; ++k) point.push_back(ctx.rng.rational(6));
      Poly real(s.algebra(), nv);
      for (const auto& [e, c] : f.terms()) real.add_term(e, AlgebraElement::scalar(s.algebra(), c[0]));
      ctx.record("poly.evaluate_multiplicative_for_real",
                 evaluate(real * g, point) == evaluate(real, point) * evaluate(g, point), pl);
      ctx.record("poly.commutative_sum", f + g == g + f && (f + g) - g == f, pl);
    }
  }
}

void suite_stem(Context& ctx) {
  const auto settings = settings_for(ctx, {"clifford:n=3,m=3,p=1", "clifford:n=5,m=5,p=2", "octonion,m=7,p=4"});
  const int n = ctx.trials(100);
  const PolyShape shape = shape_of(ctx.degree(5));
  for (const auto& s : settings) {
    for (int t = 0; t < n; ++t) {
      const StemPair S = random_stem(ctx.rng, s, shape);
      auto pl = [&] { return payload(s, t, {{"stem", stem_to_json(S)}}); };
      const Poly f = materialize(s, S);
      ctx.attempt("stem.extract_materialize", [&] { return extract(s, f) == S; }, pl);
      ctx.record("stem.reflect", reflect(f, s.p() + 1) == materialize(s, {S.G1, -S.G2}), pl);
      const EvenOdd parts = partial_even_odd(s, f);
      const SphericalParts sp = spherical_parts(S);
      ctx.record("stem.spherical_parts",
                 parts.even == even_function(s, sp.value) && parts.odd == vector_times(s, sp.derivative) &&
                     parts.even + parts.odd == f,
                 pl);
    }
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"algebra", suite_algebra},   {"hypercomplex", suite_hypercomplex},
      {"poly", suite_poly},         {"stem", suite_stem},
      {"operators", suite_operators}, {"ck", suite_ck},
      {"gck", suite_gck},           {"hgck", suite_hgck},
      {"fueter", suite_fueter},     {"fueter-sce", suite_fueter_sce},
      {"diagrams", suite_diagrams}, {"kernels", suite_kernels},
      {"representation", suite_representation},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  bool found = false;
  std::vector<LawResult> all;
  std::uint64_t index = 0;
  for (const auto& [name, fn] : registry()) {
    ++index;
    if (options.suite != "all" && options.suite != name) continue;
    found = true;
    // Each suite draws from its own stream so results do not depend on
    // which other suites run.
    Context ctx(options, options.seed * 1000003ULL + index);
    fn(ctx);
    for (auto& r : ctx.take()) all.push_back(std::move(r));
  }
  if (!found) throw DomainError("unknown suite '" + options.suite + "'");
  std::sort(all.begin(), all.end(), [](const LawResult& a, const LawResult& b) { return a.theorem < b.theorem; });
  report.results = std::move(all);
  return report;
}

}  // namespace hyperck
