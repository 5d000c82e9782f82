#pragma once

// The Fueter-Sce map Delta^{(q-1)/2} on GPS-regular stems (odd q) and the
// three commutative-diagram identities relating it to CK, GCK and HGCK.

#include <string>
#include <vector>

#include "hyperck/poly.hpp"
#include "hyperck/stem.hpp"

namespace hyperck {

struct FSConstants {
  int q;
  std::vector<Rational> C;  // C_q(k), k = 0..(q+1)/2
  Rational gamma;
};

// C_q(k) = (q-1)(q-3)...(q-2k+1), empty product 1.
Rational fs_c(int q, int k);
// Throws DomainError for even or nonpositive q.
FSConstants fs_constants(int q);

// Stem of Delta^k f for f = materialize(s): C_q(k) radial_iterate(s, k).
// Throws CrViolation unless s is GPS-regular.
StemPair laplacian_power_stem(const Setting& setting, const StemPair& s, int k);

// (q-1)!! radial_iterate(s, (q-1)/2). Odd q only.
StemPair fueter_sce_map(const Setting& setting, const StemPair& s);

struct IdentityCheck {
  std::string name;
  bool holds;
  std::string detail;  // first differing polynomial term when the check fails
};

struct DiagramReport {
  std::string theorem;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

// Delta^{(q-1)/2} CK[f0] = gamma_q GCK[Delta_p^{(q-1)/2} f0].
DiagramReport verify_diagram_M(const Setting& setting, const Poly& f0);

// PE/PO parts of Delta^{(q-1)/2} CK[f0] against HGCK, plus their harmonicity.
DiagramReport verify_diagram_MH(const Setting& setting, const Poly& f0);

// D Delta^{(q-3)/2} CK[f0] = gamma_q HGCK[Delta_p^{(q-3)/2} D_p f0, 0], and
// D-bar of the left side equals gamma_q GCK[Delta_p^{(q-1)/2} f0]. q >= 3.
DiagramReport verify_diagram_H(const Setting& setting, const Poly& f0);

// Reports where two polynomials first differ, or "" when equal.
std::string first_difference(const Poly& a, const Poly& b);

}  // namespace hyperck
