#include "hyperck/serialize.hpp"

#include "hyperck/errors.hpp"

namespace hyperck {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("rational must be a \"num/den\" string or an integer");
}

}  // namespace

Json element_to_json(const AlgebraElement& a) {
  Json j = Json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(a[i]) != 0) j[a.algebra()->label(i)] = a[i].get_str();
  return j;
}

AlgebraElement element_from_json(const AlgebraPtr& alg, const Json& j) {
  if (!j.is_object()) throw ParseError("coefficient must be an object mapping blade labels to rationals");
  AlgebraElement a(alg);
  for (const auto& [label, value] : j.items()) {
    auto idx = alg->index_of(label);
    if (!idx) throw ParseError("unknown basis label '" + label + "' for " + alg->spec());
    a[*idx] += rational_from_json(value);
  }
  return a;
}

Json poly_to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json mono = Json::array();
    for (std::size_t i = 0; i < f.nvars(); ++i) mono.push_back(e[i]);
    out.push_back(Json{{"monomial", std::move(mono)}, {"coeff", element_to_json(c)}});
  }
  return out;
}

Poly poly_from_json(const AlgebraPtr& alg, std::size_t nvars, const Json& j) {
  if (j.is_object()) return poly_from_json(alg, nvars, Json::array({j}));
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  Poly f(alg, nvars);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff")) {
      throw ParseError("polynomial term needs \"monomial\" and \"coeff\"");
    }
    const Json& mono = term.at("monomial");
    if (!mono.is_array() || mono.size() != nvars) {
      throw ParseError("monomial must list " + std::to_string(nvars) + " exponents");
    }
    Exponents e{};
    for (std::size_t i = 0; i < nvars; ++i) {
      if (!mono[i].is_number_integer() || mono[i].get<long long>() < 0 || mono[i].get<long long>() > 255) {
        throw ParseError("exponents must be integers in 0..255");
      }
      e[i] = static_cast<std::uint8_t>(mono[i].get<int>());
    }
    f.add_term(e, element_from_json(alg, term.at("coeff")));
  }
  return f;
}

Poly seed_from_json(const Setting& setting, const Json& j) {
  const std::size_t nseed = static_cast<std::size_t>(setting.p()) + 1;
  const Json& first = j.is_array() && !j.empty() ? j.front() : j;
  std::size_t len = nseed;
  if (first.is_object() && first.contains("monomial") && first.at("monomial").is_array()) {
    len = first.at("monomial").size();
  }
  if (len == nseed) return poly_from_json(setting.algebra(), nseed, j);
  if (len != setting.ambient_vars()) {
    throw ParseError("seed monomials must have length p+1 = " + std::to_string(nseed) + " or m+1 = " +
                     std::to_string(setting.ambient_vars()));
  }
  Poly ambient = poly_from_json(setting.algebra(), len, j);
  if (!ambient.uses_only_below(nseed)) {
    throw DomainError("seed polynomial involves a variable beyond x" + std::to_string(setting.p()));
  }
  return ambient.with_nvars(nseed);
}

Poly ambient_from_json(const Setting& setting, const Json& j) {
  return poly_from_json(setting.algebra(), setting.ambient_vars(), j);
}

Json stem_to_json(const StemPair& s) { return Json{{"G1", poly_to_json(s.G1)}, {"G2", poly_to_json(s.G2)}}; }

StemPair stem_from_json(const Setting& setting, const Json& j) {
  if (!j.is_object() || !j.contains("G1") || !j.contains("G2")) throw ParseError("stem needs \"G1\" and \"G2\"");
  return {poly_from_json(setting.algebra(), setting.stem_vars(), j.at("G1")),
          poly_from_json(setting.algebra(), setting.stem_vars(), j.at("G2"))};
}

}  // namespace hyperck
