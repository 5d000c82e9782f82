#pragma once

// Independent reference products used only by the tests.

#include <algorithm>
#include <vector>

#include "hyperck/rational.hpp"

namespace oracle {

using hyperck::Rational;
using Vec = std::vector<Rational>;

inline Vec cd_conj(Vec a) {
  for (std::size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
  return a;
}

inline Vec cd_add(Vec a, const Vec& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// (a1, a2)(b1, b2) = (a1 b1 - b2^c a2, b2 a1 + a2 b1^c), recursively on halves.
inline Vec cd_mul(const Vec& a, const Vec& b) {
  if (a.size() == 1) return {a[0] * b[0]};
  const std::size_t h = a.size() / 2;
  Vec a1(a.begin(), a.begin() + h), a2(a.begin() + h, a.end());
  Vec b1(b.begin(), b.begin() + h), b2(b.begin() + h, b.end());
  Vec lo = cd_add(cd_mul(a1, b1), cd_mul(cd_conj(b2), a2), -1);
  Vec hi = cd_add(cd_mul(b2, a1), cd_mul(a2, cd_conj(b1)));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Product of Clifford blades given as ascending generator lists in R_{0,n}:
// concatenate, bubble sort counting swaps, cancel e_i e_i = -1.
struct Blade {
  int sign;
  std::vector<int> gens;
};

inline Blade clifford_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> w = a;
  w.insert(w.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i + 1 < w.size() && w[i] == w[i + 1]) {
      sign = -sign;
      ++i;
    } else {
      out.push_back(w[i]);
    }
  }
  return {sign, out};
}

}  // namespace oracle
