#pragma once

// Sparse multivariate polynomials with algebra-valued coefficients.
//
// Variables are positional (x_0, x_1, ...). Terms are kept in graded
// lexicographic order: total degree ascending, then exponent vectors in
// descending lexicographic order, so iteration and serialization are
// canonical. Zero coefficients are never stored.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hyperck/algebra.hpp"

namespace hyperck {

constexpr std::size_t kMaxVars = 16;

using Exponents = std::array<std::uint8_t, kMaxVars>;

unsigned total_degree(const Exponents& e) noexcept;

struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

// "x0^2*x3", or "1" for the empty monomial.
std::string monomial_string(const Exponents& e, std::size_t nvars);

class Poly {
 public:
  using Terms = std::map<Exponents, AlgebraElement, GradedLex>;

  Poly(AlgebraPtr alg, std::size_t nvars);

  static Poly constant(AlgebraPtr alg, std::size_t nvars, const AlgebraElement& c);
  static Poly constant(AlgebraPtr alg, std::size_t nvars, const Rational& c);
  static Poly variable(AlgebraPtr alg, std::size_t nvars, std::size_t i);
  static Poly monomial(AlgebraPtr alg, std::size_t nvars, const Exponents& e, const AlgebraElement& c);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  unsigned degree() const noexcept;
  // Highest exponent of x_i over all terms.
  unsigned degree_in(std::size_t i) const noexcept;
  // True when no term involves x_i for i >= first.
  bool uses_only_below(std::size_t first) const noexcept;
  // All coefficients are real multiples of unity.
  bool is_real() const noexcept;

  // Coefficient of a monomial (zero element when absent).
  AlgebraElement coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const AlgebraElement& c);
  void add_term(const Exponents& e, const AlgebraElement& c, const Rational& s);
  // this += s * e_index * c (resp. c * e_index) at monomial e.
  void add_left_basis_term(const Exponents& e, std::size_t index, const AlgebraElement& c, const Rational& s);
  void add_right_basis_term(const Exponents& e, const AlgebraElement& c, std::size_t index, const Rational& s);

  // this += s * e_index * f, coefficient-wise.
  void add_left_basis(std::size_t index, const Poly& f, const Rational& s = 1);
  void add_right_basis(const Poly& f, std::size_t index, const Rational& s = 1);

  // Same polynomial viewed in a different number of variables; the dropped
  // variables must be unused.
  Poly with_nvars(std::size_t nvars) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  // Binary product; coefficients multiply in the given order.
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_compatible(const Poly& other) const;

  AlgebraPtr alg_;
  std::size_t nvars_;
  Terms terms_;
};

Poly left_mul(const AlgebraElement& c, const Poly& f);
Poly right_mul(const Poly& f, const AlgebraElement& c);

// Multiplies by the monomial x^e.
Poly shift(const Poly& f, const Exponents& e);

Poly partial_derivative(const Poly& f, std::size_t i);

AlgebraElement evaluate(const Poly& f, std::span<const Rational> point);

// x_s -> -x_s for every s >= first.
Poly reflect(const Poly& f, std::size_t first);

// Binary parenthesization of k operands.
class AssocTree {
 public:
  static AssocTree leaf();
  static AssocTree node(AssocTree left, AssocTree right);
  // ((a1 a2) a3) ... ak
  static AssocTree left_comb(std::size_t k);
  // a1 (a2 (... ak))
  static AssocTree right_comb(std::size_t k);

  std::size_t leaves() const noexcept { return leaves_; }
  bool is_leaf() const noexcept { return !left_; }
  const AssocTree& left() const { return *left_; }
  const AssocTree& right() const { return *right_; }

 private:
  AssocTree() = default;
  std::shared_ptr<const AssocTree> left_, right_;
  std::size_t leaves_ = 1;
};

Poly assoc_product(std::span<const Poly> factors, const AssocTree& tree);

// rho^k = (x_first^2 + ... + x_last^2)^k with unit coefficients, as integer
// multinomial expansion keyed by exponents.
std::map<Exponents, Integer, GradedLex> sum_of_squares_power(std::size_t first, std::size_t last, unsigned k);

}  // namespace hyperck
