// hyperck: command-line front end for the generalized partial-slice toolkit.
//
// Exit codes: 0 success (or property holds), 1 verification failures,
// 2 usage/input errors, 3 a checked property does not hold.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperck/errors.hpp"
#include "hyperck/extensions.hpp"
#include "hyperck/fueter_sce.hpp"
#include "hyperck/kernels.hpp"
#include "hyperck/operators.hpp"
#include "hyperck/serialize.hpp"
#include "hyperck/verify.hpp"

namespace {

using namespace hyperck;

Json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON input: ") + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output '" + path + "'");
  out << j.dump(2) << "\n";
}

Setting load_setting(const std::string& spec) {
  Setting s = Setting::parse(spec);
  if (const char* cap = std::getenv("HYPERCK_MAX_DIM")) {
    const unsigned long limit = std::strtoul(cap, nullptr, 10);
    if (limit > 0 && s.algebra()->dim() > limit) {
      throw DomainError("algebra dimension " + std::to_string(s.algebra()->dim()) + " exceeds HYPERCK_MAX_DIM=" +
                        std::to_string(limit));
    }
  }
  return s;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

Json labels_of(const Setting& s) {
  Json v = Json::array();
  for (int i = 0; i <= s.m(); ++i) v.push_back(s.algebra()->label(s.unit_index(i)));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with generalized partial-slice monogenic functions"};
  app.require_subcommand(1);

  std::string setting_spec = "clifford:n=3,m=3,p=0";
  std::string input, output;
  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--setting", setting_spec, "clifford:n=<n>[,m=<m>][,p=<p>] or octonion[,m=<m>][,p=<p>]");
    cmd->add_option("--output", output, "output path (default stdout)");
    if (with_input) cmd->add_option("--input", input, "input JSON path (default stdin)");
  };

  auto* info = app.add_subcommand("algebra-info", "describe an algebra and hypercomplex setting");
  add_common(info, false);

  auto* ck = app.add_subcommand("ck-extend", "CK-extension of a seed; prints the stem");
  add_common(ck, true);
  bool ck_materialize = false;
  ck->add_flag("--materialize", ck_materialize, "print the ambient polynomial instead of the stem");

  auto* gck = app.add_subcommand("gck-extend", "generalized CK-extension (monogenic)");
  add_common(gck, true);
  auto* hgck = app.add_subcommand("hgck-extend", "harmonic generalized CK-extension of {\"A0\", \"A1\"}");
  add_common(hgck, true);

  auto* fs = app.add_subcommand("fueter-sce", "Fueter-Sce map of a GPS-regular stem (odd q)");
  add_common(fs, true);

  auto* fp = app.add_subcommand("fueter-poly", "Fueter polynomial P_k");
  add_common(fp, false);
  std::string kspec;
  std::string comb = "left";
  fp->add_option("--k", kspec, "multi-index k_0,...,k_p")->required();
  fp->add_option("--comb", comb, "association order of products: left or right")
      ->check(CLI::IsMember({"left", "right"}));

  auto* kern = app.add_subcommand("kernel", "poly-monogenic kernel E^[k] and its Dirac powers");
  add_common(kern, false);
  int kernel_k = 1, dirac_power_n = -1;
  kern->add_option("--k", kernel_k, "kernel order k >= 1");
  kern->add_option("--check-dirac-power", dirac_power_n, "check D^n E^[k] = E^[k-n] (left and right)");

  auto* check = app.add_subcommand("check", "check a property of a polynomial or stem");
  add_common(check, true);
  std::string property;
  check->add_option("property", property, "monogenic | harmonic | gps-regular")
      ->required()
      ->check(CLI::IsMember({"monogenic", "harmonic", "gps-regular"}));

  auto* ver = app.add_subcommand("verify-theorems", "run randomized verification suites");
  VerifyOptions vopt;
  std::string qlist, vsetting;
  ver->add_option("--suite", vopt.suite, "suite name")->check(CLI::IsMember(suite_names()));
  ver->add_option("--setting", vsetting, "restrict to a single setting");
  ver->add_option("--q", qlist, "comma-separated q values");
  ver->add_option("--degree", vopt.degree, "degree bound");
  ver->add_option("--trials", vopt.trials, "trials per setting");
  ver->add_option("--seed", vopt.seed, "random seed");
  ver->add_option("--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      const Setting s = load_setting(setting_spec);
      const auto& alg = *s.algebra();
      Json labels = Json::array();
      for (std::size_t i = 0; i < alg.dim(); ++i) labels.push_back(alg.label(i));
      write_json(output, Json{{"algebra", alg.spec()},
                              {"dim", alg.dim()},
                              {"associative", alg.associative()},
                              {"blade_labels", labels},
                              {"m", s.m()},
                              {"p", s.p()},
                              {"q", s.q()},
                              {"basis", labels_of(s)},
                              {"hypercomplex_basis_violations", hypercomplex_basis_violations(s)}});
      return 0;
    }
    if (ck->parsed()) {
      const Setting s = load_setting(setting_spec);
      const StemPair st = ck_extend(s, seed_from_json(s, read_json(input)));
      write_json(output, ck_materialize ? poly_to_json(materialize(s, st)) : stem_to_json(st));
      return 0;
    }
    if (gck->parsed()) {
      const Setting s = load_setting(setting_spec);
      write_json(output, poly_to_json(gck_extend(s, seed_from_json(s, read_json(input)))));
      return 0;
    }
    if (hgck->parsed()) {
      const Setting s = load_setting(setting_spec);
      const Json j = read_json(input);
      if (!j.is_object() || !j.contains("A0") || !j.contains("A1")) {
        throw ParseError("hgck-extend input needs \"A0\" and \"A1\"");
      }
      write_json(output, poly_to_json(hgck_extend(s, seed_from_json(s, j.at("A0")), seed_from_json(s, j.at("A1")))));
      return 0;
    }
    if (fs->parsed()) {
      const Setting s = load_setting(setting_spec);
      write_json(output, stem_to_json(fueter_sce_map(s, stem_from_json(s, read_json(input)))));
      return 0;
    }
    if (fp->parsed()) {
      const Setting s = load_setting(setting_spec);
      write_json(output, poly_to_json(fueter_polynomial(s, parse_int_list(kspec), comb == "left" ? Comb::Left : Comb::Right)));
      return 0;
    }
    if (kern->parsed()) {
      const Setting s = load_setting(setting_spec);
      const KelvinFunction E = poly_kernel(s, kernel_k);
      Json report{{"setting", s.spec()}, {"k", kernel_k}, {"numerator", poly_to_json(E.numerator)}, {"rho_power", E.s}};
      bool ok = true;
      if (dirac_power_n >= 0) {
        if (dirac_power_n > kernel_k) throw DomainError("--check-dirac-power must not exceed --k");
        KelvinFunction left = E, right = E;
        for (int i = 0; i < dirac_power_n; ++i) {
          left = kelvin_dirac(s, left);
          right = kelvin_dirac_right(s, right);
        }
        const int rest = kernel_k - dirac_power_n;
        const bool lok = rest == 0 ? left.is_zero() : kelvin_equal(left, poly_kernel(s, rest));
        const bool rok = rest == 0 ? right.is_zero() : kelvin_equal(right, poly_kernel(s, rest));
        report["dirac_power"] = Json{{"n", dirac_power_n}, {"expected", rest == 0 ? "0" : "E^[" + std::to_string(rest) + "]"},
                                     {"left_holds", lok}, {"right_holds", rok}};
        ok = lok && rok;
      }
      write_json(output, report);
      return ok ? 0 : 3;
    }
    if (check->parsed()) {
      const Setting s = load_setting(setting_spec);
      const Json j = read_json(input);
      const bool is_stem = j.is_object() && j.contains("G1");
      bool holds = false;
      std::string reason;
      if (property == "gps-regular") {
        try {
          holds = cr_check(s, is_stem ? stem_from_json(s, j) : extract(s, ambient_from_json(s, j)));
        } catch (const NotSliceForm& e) {
          reason = e.what();
        }
      } else {
        const Poly f = is_stem ? materialize(s, stem_from_json(s, j)) : ambient_from_json(s, j);
        holds = property == "monogenic" ? dirac(s, f).is_zero() : laplacian(f).is_zero();
      }
      Json report{{"setting", s.spec()}, {"property", property}, {"holds", holds}};
      if (!reason.empty()) report["reason"] = reason;
      write_json(output, report);
      return holds ? 0 : 3;
    }
    if (ver->parsed()) {
      if (!qlist.empty()) vopt.qs = parse_int_list(qlist);
      if (!vsetting.empty()) vopt.setting = vsetting;
      const SuiteReport report = run_suite(vopt);
      write_json(output, report.to_json());
      return report.passed() ? 0 : 1;
    }
  } catch (const hyperck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
