#pragma once

// Exact arithmetic in finite-dimensional real alternative *-algebras.
//
// Two families are supported: the negative-definite Clifford algebras
// R_{0,n} (basis blades indexed by bit masks, e_i e_j + e_j e_i = -2 delta_ij,
// Clifford conjugation as the *-involution) and the octonions (Cayley-Dickson
// doubling of the quaternions, standard conjugation).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperck/rational.hpp"

namespace hyperck {

enum class AlgebraKind { Clifford, Octonion };

struct BasisProduct {
  int sign;           // +1 or -1
  std::size_t index;  // basis index of the product
};

class Algebra {
 public:
  static constexpr int kMaxGenerators = 12;

  // clifford: n >= 1 generators, n <= kMaxGenerators; octonion ignores n.
  static std::shared_ptr<const Algebra> make(AlgebraKind kind, int n = 0);

  // "clifford:n=3" or "octonion".
  static std::shared_ptr<const Algebra> parse(std::string_view spec);

  AlgebraKind kind() const noexcept { return kind_; }
  int generators() const noexcept { return generators_; }
  std::size_t dim() const noexcept { return dim_; }
  bool associative() const noexcept { return kind_ == AlgebraKind::Clifford; }

  // e_i e_j = sign * e_k.
  BasisProduct product(std::size_t i, std::size_t j) const;
  int conj_sign(std::size_t i) const { return conj_sign_[i]; }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  // Basis index of the imaginary unit e_s, s = 1..generators().
  std::size_t generator_index(int s) const;

  std::string spec() const;

  bool operator==(const Algebra& other) const noexcept {
    return kind_ == other.kind_ && dim_ == other.dim_;
  }

 private:
  Algebra(AlgebraKind kind, int generators);

  AlgebraKind kind_;
  int generators_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<int> conj_sign_;
  std::vector<BasisProduct> table_;  // octonions only; Clifford products are computed from masks
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept;

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr alg);
  AlgebraElement(AlgebraPtr alg, std::vector<Rational> coeffs);

  static AlgebraElement scalar(AlgebraPtr alg, const Rational& value);
  static AlgebraElement basis(AlgebraPtr alg, std::size_t index, const Rational& value = 1);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  // True when every non-unity coefficient vanishes.
  bool is_real() const noexcept;
  const Rational& real_part() const { return coeffs_[0]; }

  AlgebraElement conj() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& s);
  // this += s * e_index * other (left basis multiple), the hot path of every
  // Dirac-type operator.
  void add_basis_left_product(std::size_t index, const AlgebraElement& other, const Rational& s = 1);
  void add_basis_right_product(const AlgebraElement& other, std::size_t index, const Rational& s = 1);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same(const AlgebraElement& other) const;

  AlgebraPtr alg_;
  std::vector<Rational> coeffs_;
};

// (ab)c - a(bc)
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

struct TraceNorm {
  AlgebraElement trace;  // t(a) = a + a^c
  AlgebraElement norm;   // n(a) = a a^c
};
TraceNorm trace_norm(const AlgebraElement& a);

struct ConeMembership {
  bool in_quadratic_cone;
  bool in_imaginary_sphere;
};
ConeMembership cone_membership(const AlgebraElement& a);

// Euclidean inner product of coefficient vectors in the blade basis.
Rational euclidean_inner(const AlgebraElement& a, const AlgebraElement& b);

// Inverse a^c / n(a) when n(a) is a nonzero real; nullopt otherwise.
std::optional<AlgebraElement> inverse_if_quadratic(const AlgebraElement& a);

// Hypercomplex subspace M = span(v_0 = 1, v_1..v_m) with a fixed (p, q) split.
class Setting {
 public:
  // Clifford: v_s = e_s, m <= n. Octonion: v_s = e_s, m <= 7. 0 <= p < m.
  Setting(AlgebraPtr alg, int m, int p);

  // "clifford:n=5,m=5,p=2" or "octonion,m=7,p=4". m defaults to the
  // generator count, p defaults to 0.
  static Setting parse(std::string_view spec);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  int m() const noexcept { return m_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return m_ - p_; }
  std::size_t ambient_vars() const noexcept { return static_cast<std::size_t>(m_) + 1; }
  std::size_t stem_vars() const noexcept { return static_cast<std::size_t>(p_) + 2; }

  std::size_t unit_index(int s) const { return unit_index_.at(static_cast<std::size_t>(s)); }
  AlgebraElement v(int s) const;
  AlgebraElement one() const { return AlgebraElement::scalar(alg_, 1); }
  AlgebraElement zero() const { return AlgebraElement(alg_); }

  std::string spec() const;

  bool operator==(const Setting& o) const noexcept {
    return same_algebra(alg_, o.alg_) && m_ == o.m_ && p_ == o.p_;
  }

 private:
  AlgebraPtr alg_;
  int m_;
  int p_;
  std::vector<std::size_t> unit_index_;
};

// The hypercomplex basis conditions t(v_s) = 0, n(v_s) = 1,
// t(v_s v_t^c) = 0 (s != t). Returns the list of violated conditions.
std::vector<std::string> hypercomplex_basis_violations(const Setting& setting);

// Rational unit vector in Q^q.
struct SpherePoint {
  std::vector<Rational> omega;

  // omega_1 v_{p+1} + ... + omega_q v_{p+q}
  AlgebraElement element(const Setting& setting) const;
};

// Inverse stereographic projection of t in Q^{q-1}:
// (2t_1, ..., 2t_{q-1}, 1 - T) / (1 + T), T = sum t_i^2.
SpherePoint sphere_point_from_params(std::span<const Rational> t);

// Deterministic in seed; parameters t_i drawn from the bounded rational
// distribution of the random module.
SpherePoint rational_sphere_point(const Setting& setting, std::uint64_t seed);

}  // namespace hyperck
