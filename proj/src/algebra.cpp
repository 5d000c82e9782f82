#include "hyperck/algebra.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <sstream>

#include "hyperck/errors.hpp"
#include "hyperck/random.hpp"

namespace hyperck {

namespace {

BasisProduct clifford_product(std::size_t a, std::size_t b) {
  int swaps = 0;
  for (std::size_t s = a >> 1; s != 0; s >>= 1) swaps += std::popcount(s & b);
  swaps += std::popcount(a & b);  // e_i e_i = -1
  return {swaps % 2 == 0 ? 1 : -1, a ^ b};
}

// Basis products of the level-`level` Cayley-Dickson algebra (dimension
// 2^level) under (a,b)(c,d) = (ac - d^c b, da + b c^c).
BasisProduct cayley_dickson_product(int level, std::size_t i, std::size_t j) {
  if (level == 0) return {1, 0};
  const std::size_t half = std::size_t{1} << (level - 1);
  const bool hi = i >= half, hj = j >= half;
  const std::size_t x = i & (half - 1), y = j & (half - 1);
  auto conj = [](std::size_t k) { return k == 0 ? 1 : -1; };
  if (!hi && !hj) return cayley_dickson_product(level - 1, x, y);
  if (!hi && hj) {  // (x,0)(0,y) = (0, y x)
    auto r = cayley_dickson_product(level - 1, y, x);
    return {r.sign, r.index + half};
  }
  if (hi && !hj) {  // (0,x)(y,0) = (0, x y^c)
    auto r = cayley_dickson_product(level - 1, x, y);
    return {r.sign * conj(y), r.index + half};
  }
  // (0,x)(0,y) = (-y^c x, 0)
  auto r = cayley_dickson_product(level - 1, y, x);
  return {-r.sign * conj(y), r.index};
}

std::string clifford_label(std::size_t mask, int n) {
  if (mask == 0) return "1";
  std::string out = "e";
  bool first = true;
  for (int s = 1; s <= n; ++s) {
    if (!(mask & (std::size_t{1} << (s - 1)))) continue;
    if (!first && n >= 10) out += '_';
    out += std::to_string(s);
    first = false;
  }
  return out;
}

int parse_int(std::string_view text, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected integer in '" + context + "'");
  }
  return value;
}

// Splits "key=value" fields separated by ',' (and the first ':').
std::map<std::string, std::string, std::less<>> parse_fields(std::string_view spec, std::string& head) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t cut = spec.find_first_of(":,");
  head = std::string(spec.substr(0, cut));
  while (cut != std::string_view::npos) {
    std::size_t next = spec.find(',', cut + 1);
    std::string_view field = spec.substr(cut + 1, next == std::string_view::npos ? std::string_view::npos : next - cut - 1);
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("malformed setting field '" + std::string(field) + "'");
    fields.emplace(std::string(field.substr(0, eq)), std::string(field.substr(eq + 1)));
    cut = next;
  }
  return fields;
}

}  // namespace

Algebra::Algebra(AlgebraKind kind, int generators) : kind_(kind), generators_(generators) {
  if (kind == AlgebraKind::Clifford) {
    dim_ = std::size_t{1} << generators;
    labels_.reserve(dim_);
    conj_sign_.reserve(dim_);
    for (std::size_t mask = 0; mask < dim_; ++mask) {
      labels_.push_back(clifford_label(mask, generators));
      // Clifford conjugation: (-1)^k (-1)^{k(k-1)/2} on grade k.
      const int k = std::popcount(mask);
      conj_sign_.push_back((k * (k + 1) / 2) % 2 == 0 ? 1 : -1);
    }
  } else {
    dim_ = 8;
    for (std::size_t i = 0; i < dim_; ++i) {
      labels_.push_back(i == 0 ? "1" : "e" + std::to_string(i));
      conj_sign_.push_back(i == 0 ? 1 : -1);
    }
    table_.reserve(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) table_.push_back(cayley_dickson_product(3, i, j));
  }
}

std::shared_ptr<const Algebra> Algebra::make(AlgebraKind kind, int n) {
  if (kind == AlgebraKind::Octonion) return std::shared_ptr<const Algebra>(new Algebra(kind, 7));
  if (n < 1) throw DomainError("clifford algebra needs n >= 1 generators");
  if (n > kMaxGenerators) {
    throw DomainError("clifford generator count " + std::to_string(n) + " exceeds the limit " +
                      std::to_string(kMaxGenerators));
  }
  return std::shared_ptr<const Algebra>(new Algebra(kind, n));
}

std::shared_ptr<const Algebra> Algebra::parse(std::string_view spec) {
  std::string head;
  auto fields = parse_fields(spec, head);
  if (head == "octonion") return make(AlgebraKind::Octonion);
  if (head == "clifford") {
    auto it = fields.find("n");
    if (it == fields.end()) throw ParseError("clifford algebra spec needs n=<generators>");
    return make(AlgebraKind::Clifford, parse_int(it->second, std::string(spec)));
  }
  throw ParseError("unsupported algebra kind '" + head + "'");
}

BasisProduct Algebra::product(std::size_t i, std::size_t j) const {
  if (kind_ == AlgebraKind::Clifford) return clifford_product(i, j);
  return table_[i * dim_ + j];
}

std::optional<std::size_t> Algebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t Algebra::generator_index(int s) const {
  if (s < 1 || s > generators_) throw DomainError("generator index out of range");
  return kind_ == AlgebraKind::Clifford ? std::size_t{1} << (s - 1) : static_cast<std::size_t>(s);
}

std::string Algebra::spec() const {
  return kind_ == AlgebraKind::Octonion ? "octonion" : "clifford:n=" + std::to_string(generators_);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)), coeffs_(alg_->dim()) {}

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Rational> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_->dim()) throw AlgebraMismatch("coefficient vector length differs from algebra dimension");
}

AlgebraElement AlgebraElement::scalar(AlgebraPtr alg, const Rational& value) {
  AlgebraElement e(std::move(alg));
  e.coeffs_[0] = value;
  return e;
}

AlgebraElement AlgebraElement::basis(AlgebraPtr alg, std::size_t index, const Rational& value) {
  AlgebraElement e(std::move(alg));
  e.coeffs_.at(index) = value;
  return e;
}

bool AlgebraElement::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool AlgebraElement::is_real() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

AlgebraElement AlgebraElement::conj() const {
  AlgebraElement r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    if (alg_->conj_sign(i) < 0) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

void AlgebraElement::require_same(const AlgebraElement& other) const {
  if (!same_algebra(alg_, other.alg_)) throw AlgebraMismatch("operands belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_)
    if (sgn(c) != 0) c *= s;
  return *this;
}

void AlgebraElement::add_basis_left_product(std::size_t index, const AlgebraElement& other, const Rational& s) {
  require_same(other);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
    if (sgn(other.coeffs_[j]) == 0) continue;
    auto [sign, k] = alg_->product(index, j);
    if (sign > 0)
      coeffs_[k] += s * other.coeffs_[j];
    else
      coeffs_[k] -= s * other.coeffs_[j];
  }
}

void AlgebraElement::add_basis_right_product(const AlgebraElement& other, std::size_t index, const Rational& s) {
  require_same(other);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
    if (sgn(other.coeffs_[j]) == 0) continue;
    auto [sign, k] = alg_->product(j, index);
    if (sign > 0)
      coeffs_[k] += s * other.coeffs_[j];
    else
      coeffs_[k] -= s * other.coeffs_[j];
  }
}

namespace {

// Integer numerators over a common denominator.
struct Scaled {
  std::vector<Integer> num;
  Integer den = 1;
  std::vector<std::size_t> support;
};

Scaled scale_to_integers(std::span<const Rational> c) {
  Scaled s;
  s.num.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    s.support.push_back(i);
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c[i].get_den_mpz_t());
  }
  for (std::size_t i : s.support) {
    mpz_divexact(s.num[i].get_mpz_t(), s.den.get_mpz_t(), c[i].get_den_mpz_t());
    s.num[i] *= c[i].get_num();
  }
  return s;
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same(b);
  AlgebraElement r(a.alg_);
  const Scaled sa = scale_to_integers(a.coeffs_), sb = scale_to_integers(b.coeffs_);
  if (sa.support.empty() || sb.support.empty()) return r;
  std::vector<Integer> acc(a.coeffs_.size());
  for (std::size_t i : sa.support) {
    for (std::size_t j : sb.support) {
      auto [sign, k] = a.alg_->product(i, j);
      if (sign > 0)
        mpz_addmul(acc[k].get_mpz_t(), sa.num[i].get_mpz_t(), sb.num[j].get_mpz_t());
      else
        mpz_submul(acc[k].get_mpz_t(), sa.num[i].get_mpz_t(), sb.num[j].get_mpz_t());
    }
  }
  const Integer den = sa.den * sb.den;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (sgn(acc[k]) == 0) continue;
    r.coeffs_[k] = Rational(acc[k], den);
    r.coeffs_[k].canonicalize();
  }
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_algebra(a.alg_, b.alg_) && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (any) out << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) out << "-";
    Rational mag = abs(coeffs_[i]);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << alg_->label(i);
    }
    any = true;
  }
  return any ? out.str() : "0";
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
  return (a * b) * c - a * (b * c);
}

TraceNorm trace_norm(const AlgebraElement& a) {
  AlgebraElement ac = a.conj();
  return {a + ac, a * ac};
}

ConeMembership cone_membership(const AlgebraElement& a) {
  auto [t, n] = trace_norm(a);
  const bool sphere = t.is_zero() && n.is_real() && n.real_part() == 1;
  if (a.is_real()) return {true, sphere};
  const bool cone = t.is_real() && n.is_real() && 4 * n.real_part() > t.real_part() * t.real_part();
  return {cone, sphere};
}

Rational euclidean_inner(const AlgebraElement& a, const AlgebraElement& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<AlgebraElement> inverse_if_quadratic(const AlgebraElement& a) {
  AlgebraElement n = a * a.conj();
  if (!n.is_real() || sgn(n.real_part()) == 0) return std::nullopt;
  return a.conj() * Rational(1 / n.real_part());
}

// ---------------------------------------------------------------------------

Setting::Setting(AlgebraPtr alg, int m, int p) : alg_(std::move(alg)), m_(m), p_(p) {
  if (m < 1) throw DomainError("hypercomplex subspace needs m >= 1");
  if (m > alg_->generators()) {
    throw DomainError("m = " + std::to_string(m) + " exceeds the " + std::to_string(alg_->generators()) +
                      " available imaginary units of " + alg_->spec());
  }
  if (p < 0 || p >= m) throw DomainError("split requires 0 <= p < m");
  unit_index_.push_back(0);
  for (int s = 1; s <= m; ++s) unit_index_.push_back(alg_->generator_index(s));
}

Setting Setting::parse(std::string_view spec) {
  std::string head;
  auto fields = parse_fields(spec, head);
  AlgebraPtr alg;
  if (head == "octonion") {
    alg = Algebra::make(AlgebraKind::Octonion);
  } else if (head == "clifford") {
    auto it = fields.find("n");
    if (it == fields.end()) throw ParseError("clifford setting needs n=<generators>");
    alg = Algebra::make(AlgebraKind::Clifford, parse_int(it->second, std::string(spec)));
  } else {
    throw ParseError("unsupported algebra kind '" + head + "'");
  }
  int m = alg->generators(), p = 0;
  for (const auto& [key, value] : fields) {
    if (key == "m") m = parse_int(value, std::string(spec));
    else if (key == "p") p = parse_int(value, std::string(spec));
    else if (key != "n") throw ParseError("unknown setting field '" + key + "'");
  }
  return Setting(std::move(alg), m, p);
}

AlgebraElement Setting::v(int s) const { return AlgebraElement::basis(alg_, unit_index(s)); }

std::string Setting::spec() const {
  std::string out = alg_->kind() == AlgebraKind::Octonion ? "octonion" : "clifford:n=" + std::to_string(alg_->generators());
  return out + ",m=" + std::to_string(m_) + ",p=" + std::to_string(p_);
}

std::vector<std::string> hypercomplex_basis_violations(const Setting& setting) {
  std::vector<std::string> out;
  for (int s = 1; s <= setting.m(); ++s) {
    auto [t, n] = trace_norm(setting.v(s));
    if (!t.is_zero()) out.push_back("t(v_" + std::to_string(s) + ") != 0");
    if (!(n.is_real() && n.real_part() == 1)) out.push_back("n(v_" + std::to_string(s) + ") != 1");
    for (int u = 1; u <= setting.m(); ++u) {
      if (u == s) continue;
      AlgebraElement prod = setting.v(s) * setting.v(u).conj();
      if (!(prod + prod.conj()).is_zero())
        out.push_back("t(v_" + std::to_string(s) + " v_" + std::to_string(u) + "^c) != 0");
    }
  }
  return out;
}

AlgebraElement SpherePoint::element(const Setting& setting) const {
  if (static_cast<int>(omega.size()) != setting.q()) throw DomainError("sphere point dimension differs from q");
  AlgebraElement w = setting.zero();
  for (int s = 0; s < setting.q(); ++s) w[setting.unit_index(setting.p() + 1 + s)] += omega[s];
  return w;
}

SpherePoint sphere_point_from_params(std::span<const Rational> t) {
  Rational total = 0;
  for (const auto& x : t) total += x * x;
  SpherePoint out;
  for (const auto& x : t) out.omega.push_back(2 * x / (1 + total));
  out.omega.push_back((1 - total) / (1 + total));
  return out;
}

SpherePoint rational_sphere_point(const Setting& setting, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> t;
  for (int i = 0; i + 1 < setting.q(); ++i) t.push_back(rng.rational(4));
  SpherePoint pt = sphere_point_from_params(t);
  if (rng.coin()) pt.omega.back() = -pt.omega.back();
  return pt;
}

}  // namespace hyperck
