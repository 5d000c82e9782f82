// Runs the randomized suites at their full trial counts and prints one
// PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperck/verify.hpp"

using namespace hyperck;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::vector<int> qs;
  int trials;
  int degree;
  double limit_seconds;  // 0: no runtime bound
  std::vector<std::string> laws;
};

bool run(const Criterion& c) {
  VerifyOptions o;
  o.suite = c.suite;
  o.qs = c.qs;
  o.trials = c.trials;
  o.degree = c.degree;
  o.seed = 42;
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    SuiteReport r = run_suite(o);
    int trials = 0, failures = 0;
    for (const auto& law : r.results) {
      trials += law.trials;
      failures += static_cast<int>(law.failures.size());
      if (!law.failures.empty()) detail += " failing=" + law.theorem;
    }
    for (const auto& name : c.laws) {
      bool found = false;
      for (const auto& law : r.results) found = found || (law.theorem == name && law.trials > 0);
      if (!found) {
        ok = false;
        detail += " missing=" + name;
      }
    }
    ok = ok && failures == 0;
    detail = "trials=" + std::to_string(trials) + " failures=" + std::to_string(failures) + detail;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("error: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[96];
  if (c.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, " time=%.2fs limit=%.0fs", secs, c.limit_seconds);
    ok = ok && secs < c.limit_seconds;
  } else {
    std::snprintf(timing, sizeof timing, " time=%.2fs", secs);
  }
  std::printf("%s criterion %d: %s [%s%s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str(), timing);
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebra laws (R03, R05, octonions)", "algebra", {}, 500, 0, 10,
       {"algebra.associator_alternating", "algebra.artin_paravector", "algebra.artin_inverse", "algebra.moufang_left",
        "algebra.moufang_middle", "algebra.moufang_right", "algebra.anti_involution"}},
      {2, "hypercomplex basis conditions", "hypercomplex", {}, 0, 0, 0, {"hypercomplex.basis_conditions"}},
      {3, "CK extension", "ck", {}, 100, 5, 60,
       {"ck.cr_check", "ck.restriction", "ck.slice_dirac_vanishes"}},
      {4, "GCK extension", "gck", {1, 2, 3, 5}, 100, 5, 0,
       {"gck.monogenic", "gck.coefficient_recursion", "gck.q1_equals_ck"}},
      {5, "HGCK extension", "hgck", {}, 100, 5, 0,
       {"hgck.harmonic", "hgck.initial_value", "hgck.initial_slope", "hgck.split", "hgck.corollary_gck",
        "hgck.dbar_even", "hgck.dbar_odd"}},
      {6, "Fueter polynomials", "fueter", {}, 0, 4, 0,
       {"fueter.v_equals_p", "fueter.association_order_independent"}},
      {7, "Fueter-Sce map", "fueter-sce", {3, 5, 7}, 100, 5, 0,
       {"fueter_sce.vekua", "fueter_sce.monogenic", "fueter_sce.spot_value_laplacian_x_squared"}},
      {8, "commutative diagrams", "diagrams", {3, 5}, 50, 5, 300,
       {"diagrams.diagram_M", "diagrams.diagram_MH", "diagrams.diagram_H"}},
      {9, "kernels", "kernels", {}, 0, 4, 0,
       {"kernels.dirac_power_left", "kernels.dirac_power_right", "kernels.slice_cauchy_left",
        "kernels.slice_cauchy_right"}},
      {10, "operator algebra", "operators", {}, 200, 5, 0,
       {"operators.laplacian_routes", "operators.splitting_lemma.Dp_even", "operators.splitting_lemma.Dp_odd",
        "operators.splitting_lemma.Dq_even", "operators.splitting_lemma.Dq_odd",
        "operators.splitting_lemma.Dbar_p_even", "operators.splitting_lemma.Dbar_p_odd",
        "operators.splitting_lemma.Dbar_q_even", "operators.splitting_lemma.Dbar_q_odd", "operators.gamma_identity",
        "operators.dirac_minus_slice_dirac"}},
      {11, "representation formula", "representation", {}, 50, 0, 0, {"representation.formula"}},
  };
  bool all = true;
  for (const auto& c : criteria) all = run(c) && all;
  return all ? 0 : 1;
}
