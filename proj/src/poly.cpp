#include "hyperck/poly.hpp"

#include <numeric>
#include <sstream>
#include <tuple>

#include "hyperck/errors.hpp"

namespace hyperck {

unsigned total_degree(const Exponents& e) noexcept {
  unsigned d = 0;
  for (auto k : e) d += k;
  return d;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

std::string monomial_string(const Exponents& e, std::size_t nvars) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Poly::Poly(AlgebraPtr alg, std::size_t nvars) : alg_(std::move(alg)), nvars_(nvars) {
  if (nvars > kMaxVars) throw DomainError("too many polynomial variables");
}

Poly Poly::constant(AlgebraPtr alg, std::size_t nvars, const AlgebraElement& c) {
  Poly f(std::move(alg), nvars);
  f.add_term(Exponents{}, c);
  return f;
}

Poly Poly::constant(AlgebraPtr alg, std::size_t nvars, const Rational& c) {
  AlgebraElement e = AlgebraElement::scalar(alg, c);
  return constant(std::move(alg), nvars, e);
}

Poly Poly::variable(AlgebraPtr alg, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponents e{};
  e[i] = 1;
  AlgebraElement one = AlgebraElement::scalar(alg, 1);
  return monomial(std::move(alg), nvars, e, one);
}

Poly Poly::monomial(AlgebraPtr alg, std::size_t nvars, const Exponents& e, const AlgebraElement& c) {
  Poly f(std::move(alg), nvars);
  f.add_term(e, c);
  return f;
}

unsigned Poly::degree() const noexcept {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

unsigned Poly::degree_in(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
  return d;
}

bool Poly::uses_only_below(std::size_t first) const noexcept {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = first; i < kMaxVars; ++i)
      if (e[i] != 0) return false;
  return true;
}

bool Poly::is_real() const noexcept {
  for (const auto& [e, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

AlgebraElement Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgebraElement(alg_) : it->second;
}

void Poly::add_term(const Exponents& e, const AlgebraElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::add_term(const Exponents& e, const AlgebraElement& c, const Rational& s) {
  if (sgn(s) == 0) return;
  if (s == 1) {
    add_term(e, c);
    return;
  }
  add_term(e, c * s);
}

void Poly::add_left_basis_term(const Exponents& e, std::size_t index, const AlgebraElement& c, const Rational& s) {
  if (sgn(s) == 0 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, alg_);
  it->second.add_basis_left_product(index, c, s);
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::add_right_basis_term(const Exponents& e, const AlgebraElement& c, std::size_t index, const Rational& s) {
  if (sgn(s) == 0 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, alg_);
  it->second.add_basis_right_product(c, index, s);
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::add_left_basis(std::size_t index, const Poly& f, const Rational& s) {
  require_compatible(f);
  for (const auto& [e, c] : f.terms_) add_left_basis_term(e, index, c, s);
}

void Poly::add_right_basis(const Poly& f, std::size_t index, const Rational& s) {
  require_compatible(f);
  for (const auto& [e, c] : f.terms_) add_right_basis_term(e, c, index, s);
}

Poly Poly::with_nvars(std::size_t nvars) const {
  if (!uses_only_below(nvars)) {
    throw DomainError("polynomial uses a variable beyond x" + std::to_string(nvars - 1));
  }
  Poly out(alg_, nvars);
  out.terms_ = terms_;
  return out;
}

void Poly::require_compatible(const Poly& other) const {
  if (!same_algebra(alg_, other.alg_)) throw AlgebraMismatch("polynomials over different algebras");
  if (nvars_ != other.nvars_) throw DomainError("polynomials in different variable counts");
}

Poly& Poly::operator+=(const Poly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c, Rational(-1));
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a[i]} + b[i];
    if (s > 255) throw DomainError("exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  Poly r(a.alg_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_algebra(a.alg_, b.alg_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.to_string() << ")";
    if (total_degree(e) > 0) out << "*" << monomial_string(e, nvars_);
    first = false;
  }
  return out.str();
}

Poly left_mul(const AlgebraElement& c, const Poly& f) {
  Poly r(f.algebra(), f.nvars());
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (sgn(c[i]) != 0) r.add_left_basis(i, f, c[i]);
  return r;
}

Poly right_mul(const Poly& f, const AlgebraElement& c) {
  Poly r(f.algebra(), f.nvars());
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (sgn(c[i]) != 0) r.add_right_basis(f, i, c[i]);
  return r;
}

Poly shift(const Poly& f, const Exponents& e) {
  Poly r(f.algebra(), f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(add_exponents(m, e), c);
  return r;
}

Poly partial_derivative(const Poly& f, std::size_t i) {
  if (i >= f.nvars()) throw DomainError("derivative variable index out of range");
  Poly r(f.algebra(), f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    r.add_term(d, c, Rational(e[i]));
  }
  return r;
}

AlgebraElement evaluate(const Poly& f, std::span<const Rational> point) {
  if (point.size() < f.nvars() && !f.uses_only_below(point.size())) {
    throw DomainError("evaluation point has too few coordinates");
  }
  AlgebraElement out(f.algebra());
  for (const auto& [e, c] : f.terms()) {
    Rational w = 1;
    for (std::size_t i = 0; i < f.nvars(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) w *= point[i];
    if (sgn(w) != 0) out += c * w;
  }
  return out;
}

Poly reflect(const Poly& f, std::size_t first) {
  Poly r(f.algebra(), f.nvars());
  for (const auto& [e, c] : f.terms()) {
    unsigned odd = 0;
    for (std::size_t i = first; i < f.nvars(); ++i) odd += e[i];
    r.add_term(e, c, Rational(odd % 2 == 0 ? 1 : -1));
  }
  return r;
}

AssocTree AssocTree::leaf() { return AssocTree(); }

AssocTree AssocTree::node(AssocTree left, AssocTree right) {
  AssocTree t;
  t.leaves_ = left.leaves_ + right.leaves_;
  t.left_ = std::make_shared<const AssocTree>(std::move(left));
  t.right_ = std::make_shared<const AssocTree>(std::move(right));
  return t;
}

AssocTree AssocTree::left_comb(std::size_t k) {
  if (k == 0) throw DomainError("association tree needs at least one leaf");
  AssocTree t = leaf();
  for (std::size_t i = 1; i < k; ++i) t = node(std::move(t), leaf());
  return t;
}

AssocTree AssocTree::right_comb(std::size_t k) {
  if (k == 0) throw DomainError("association tree needs at least one leaf");
  AssocTree t = leaf();
  for (std::size_t i = 1; i < k; ++i) t = node(leaf(), std::move(t));
  return t;
}

namespace {

Poly fold(std::span<const Poly> factors, const AssocTree& tree) {
  if (tree.is_leaf()) return factors.front();
  const std::size_t nl = tree.left().leaves();
  return fold(factors.first(nl), tree.left()) * fold(factors.subspan(nl), tree.right());
}

}  // namespace

Poly assoc_product(std::span<const Poly> factors, const AssocTree& tree) {
  if (factors.empty()) throw DomainError("product of zero factors");
  if (factors.size() != tree.leaves()) throw DomainError("association tree leaf count differs from factor count");
  return fold(factors, tree);
}

std::map<Exponents, Integer, GradedLex> sum_of_squares_power(std::size_t first, std::size_t last, unsigned k) {
  using Table = std::map<Exponents, Integer, GradedLex>;
  thread_local std::map<std::tuple<std::size_t, std::size_t, unsigned>, Table> cache;
  auto key = std::make_tuple(first, last, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Table out;
  if (k == 0) {
    out.emplace(Exponents{}, 1);
  } else {
    Table prev = sum_of_squares_power(first, last, k - 1);
    for (const auto& [e, c] : prev) {
      for (std::size_t s = first; s <= last; ++s) {
        Exponents f = e;
        f[s] = static_cast<std::uint8_t>(f[s] + 2);
        out[f] += c;
      }
    }
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace hyperck
