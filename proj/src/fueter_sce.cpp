#include "hyperck/fueter_sce.hpp"

#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/operators.hpp"

namespace hyperck {

namespace {

void require_odd(int q) {
  if (q < 1 || q % 2 == 0) {
    throw DomainError("the Fueter-Sce map is defined here for odd q only (got q = " + std::to_string(q) + ")");
  }
}

Poly laplacian_power(const Poly& f, int k) {
  Poly out = f;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = laplacian(out);
  return out;
}

IdentityCheck compare(std::string name, const Poly& lhs, const Poly& rhs) {
  std::string diff = first_difference(lhs, rhs);
  return {std::move(name), diff.empty(), std::move(diff)};
}

}  // namespace

Rational fs_c(int q, int k) {
  Rational c = 1;
  for (int i = 1; i <= k; ++i) c *= q - 2 * i + 1;
  return c;
}

FSConstants fs_constants(int q) {
  require_odd(q);
  FSConstants out{q, {}, 0};
  for (int k = 0; k <= (q + 1) / 2; ++k) out.C.push_back(fs_c(q, k));
  out.gamma = Rational(double_factorial(q - 1)) / Rational(double_factorial(q - 2));
  if (((q - 1) / 2) % 2 == 1) out.gamma = -out.gamma;
  return out;
}

StemPair laplacian_power_stem(const Setting& setting, const StemPair& s, int k) {
  if (!cr_check(setting, s)) throw CrViolation("stem does not satisfy the generalized Cauchy-Riemann system");
  return fs_c(setting.q(), k) * radial_iterate(setting, s, k);
}

StemPair fueter_sce_map(const Setting& setting, const StemPair& s) {
  require_odd(setting.q());
  if (!cr_check(setting, s)) throw CrViolation("stem does not satisfy the generalized Cauchy-Riemann system");
  return Rational(double_factorial(setting.q() - 1)) * radial_iterate(setting, s, (setting.q() - 1) / 2);
}

bool DiagramReport::passed() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

std::string first_difference(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) return "variable counts differ";
  Poly d = a - b;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  return "at " + monomial_string(e, a.nvars()) + ": lhs " + a.coeff(e).to_string() + ", rhs " + b.coeff(e).to_string();
}

DiagramReport verify_diagram_M(const Setting& setting, const Poly& f0) {
  const int q = setting.q();
  const FSConstants fs = fs_constants(q);
  DiagramReport report{"diagram_M", {}};
  // Route 1: stem radial iterates of CK[f0].
  Poly lhs = materialize(setting, fueter_sce_map(setting, ck_extend(setting, f0)));
  // Route 2: GCK of the seed Laplacian.
  Poly seed = laplacian_p(setting, seed_to_stem(setting, f0), (q - 1) / 2).with_nvars(f0.nvars());
  Poly rhs = fs.gamma * gck_extend(setting, seed);
  report.checks.push_back(compare("fueter_sce(CK[f0]) = gamma_q GCK[Delta_p^((q-1)/2) f0]", lhs, rhs));
  return report;
}

DiagramReport verify_diagram_MH(const Setting& setting, const Poly& f0) {
  const int q = setting.q();
  const FSConstants fs = fs_constants(q);
  DiagramReport report{"diagram_MH", {}};
  // Left route entirely in the ambient space.
  Poly f = laplacian_power(materialize(setting, ck_extend(setting, f0)), (q - 1) / 2);
  EvenOdd parts = partial_even_odd(setting, f);

  const std::size_t nseed = f0.nvars();
  Poly lap_seed = laplacian_p(setting, seed_to_stem(setting, f0), (q - 1) / 2);
  Poly pe_seed = lap_seed.with_nvars(nseed);
  Poly po_seed = laplacian_p(setting, dirac_p(setting, seed_to_stem(setting, f0)), (q - 1) / 2).with_nvars(nseed);
  Poly zero(f0.algebra(), nseed);

  report.checks.push_back(compare("PE[Delta^((q-1)/2) CK[f0]] = gamma_q HGCK[Delta_p^((q-1)/2) f0, 0]", parts.even,
                                  fs.gamma * hgck_extend(setting, pe_seed, zero)));
  report.checks.push_back(compare("PO[Delta^((q-1)/2) CK[f0]] = gamma_q/q HGCK[0, Delta_p^((q-1)/2) D_p f0]",
                                  parts.odd, (fs.gamma / q) * hgck_extend(setting, zero, po_seed)));
  Poly none(f0.algebra(), setting.ambient_vars());
  report.checks.push_back(compare("Delta PE[Delta^((q-1)/2) CK[f0]] = 0", laplacian(parts.even), none));
  report.checks.push_back(compare("Delta PO[Delta^((q-1)/2) CK[f0]] = 0", laplacian(parts.odd), none));
  return report;
}

DiagramReport verify_diagram_H(const Setting& setting, const Poly& f0) {
  const int q = setting.q();
  if (q < 3) throw DomainError("diagram H needs q >= 3");
  const FSConstants fs = fs_constants(q);
  DiagramReport report{"diagram_H", {}};
  Poly lhs = dirac(setting, laplacian_power(materialize(setting, ck_extend(setting, f0)), (q - 3) / 2));

  const std::size_t nseed = f0.nvars();
  Poly seed = laplacian_p(setting, dirac_p(setting, seed_to_stem(setting, f0)), (q - 3) / 2).with_nvars(nseed);
  Poly rhs = fs.gamma * hgck_extend(setting, seed, Poly(f0.algebra(), nseed));
  report.checks.push_back(compare("D Delta^((q-3)/2) CK[f0] = gamma_q HGCK[Delta_p^((q-3)/2) D_p f0, 0]", lhs, rhs));

  Poly gseed = laplacian_p(setting, seed_to_stem(setting, f0), (q - 1) / 2).with_nvars(nseed);
  report.checks.push_back(compare("D-bar D Delta^((q-3)/2) CK[f0] = gamma_q GCK[Delta_p^((q-1)/2) f0]",
                                  dirac_bar(setting, lhs), fs.gamma * gck_extend(setting, gseed)));
  return report;
}

}  // namespace hyperck
