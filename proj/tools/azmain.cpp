// Command-line front end: list the identity cases, verify them at chosen
// precision/tolerance, run exact generating-function checks, and audit the
// printed constants.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "appellzeta/cases.hpp"
#include "appellzeta/report.hpp"
#include "appellzeta/series.hpp"

namespace {

using namespace appellzeta;

struct VerifyOptions {
  std::vector<std::string> ids;
  std::vector<std::string> sets;
  unsigned precision = 50;
  double tolerance = -1;  // negative means per-case default
  long max_diagonals = 400;
  bool override_domain = false;
  std::string format = "text";
};

int run_list() {
  for (const auto& c : case_registry()) {
    std::cout << c.id << "\n";
    std::cout << "  checks:    " << c.description << "\n";
    std::cout << "  domain:    " << c.domain_doc << "\n";
    std::cout << "  defaults:  " << format_params(c.defaults) << "\n";
    std::cout << "  tolerance: " << format_tolerance(c.default_tolerance) << "\n";
  }
  return 0;
}

int run_verify(const VerifyOptions& vo) {
  std::vector<const IdentityCase*> selected;
  if (vo.ids.empty()) {
    for (const auto& c : case_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : vo.ids) {
      const IdentityCase* c = find_case(id);
      if (!c) {
        std::cerr << "error: unknown case id '" << id << "' (see `list`)\n";
        return 2;
      }
      selected.push_back(c);
    }
  }

  Params overrides;
  for (const auto& kv : vo.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
      return 2;
    }
    try {
      set_param(overrides, kv.substr(0, eq), kv.substr(eq + 1));
    } catch (const ContractError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  EvalOptions opts;
  opts.precision = vo.precision;
  if (vo.tolerance >= 0) opts.tolerance = vo.tolerance;
  opts.max_diagonals = vo.max_diagonals;
  opts.override_domain = vo.override_domain;

  const bool records = vo.format == "records";
  bool all_pass = true;
  for (const IdentityCase* c : selected) {
    try {
      const VerificationReport rep = evaluate_case(*c, opts, overrides);
      all_pass = all_pass && rep.pass;
      std::cout << (records ? report_json_line(rep) : report_text_line(rep)) << "\n";
    } catch (const ContractError& e) {
      std::cerr << "error: " << c->id << ": " << e.what() << "\n";
      return 2;
    } catch (const AZError& e) {
      all_pass = false;
      std::cout << "[FAIL] " << c->id << " error: " << e.what() << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int run_gf_check(long order, long trials, std::uint64_t seed) {
  if (order < 2) {
    std::cerr << "error: --order must be at least 2\n";
    return 2;
  }
  if (trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return 2;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  const GFKind kinds[] = {GFKind::bernoulli_plain, GFKind::euler_plain,
                          GFKind::bernoulli_appell, GFKind::euler_appell};
  bool all_equal = true;
  for (long t = 0; t < trials; ++t) {
    const Rational x(num(rng), den(rng));
    const Rational y(num(rng), den(rng));
    for (const GFKind kind : kinds) {
      const GFReport rep = gf_check(kind, x, y, order);
      all_equal = all_equal && rep.equal;
      std::cout << (rep.equal ? "[PASS] " : "[FAIL] ") << gf_kind_name(kind)
                << " x=" << format_rational(rep.x) << " y=" << format_rational(rep.y)
                << " order=" << rep.order;
      if (!rep.equal) std::cout << " first mismatch at z^" << rep.first_mismatch;
      std::cout << "\n";
    }
  }
  return all_equal ? 0 : 1;
}

int run_paper_constants(unsigned prec) {
  bool all_pass = true;
  for (const auto& chk : paper_constants_check(prec)) {
    all_pass = all_pass && chk.pass;
    std::cout << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name << ": " << chk.detail
              << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arbitrary-precision verification of bilateral Bernoulli/Euler double-sum "
      "identities"};
  app.require_subcommand(1);

  app.add_subcommand("list", "describe every registered case");

  VerifyOptions vo;
  auto* verify =
      app.add_subcommand("verify", "evaluate cases and compare both sides");
  verify->add_option("--case", vo.ids, "case ids to run (default: all)");
  verify->add_option("--prec", vo.precision, "working precision in decimal digits")
      ->capture_default_str();
  verify->add_option("--tol", vo.tolerance,
                     "relative tolerance (default: per-case)");
  verify->add_option("--set", vo.sets, "parameter override key=value");
  verify->add_option("--max-diagonals", vo.max_diagonals,
                     "anti-diagonal budget for the sums")
      ->capture_default_str();
  verify->add_flag("--override-domain", vo.override_domain,
                   "skip domain checks (divergence detection still applies)");
  verify->add_option("--format", vo.format, "output format: text or records")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  long order = 16, trials = 4;
  std::uint64_t seed = 20260815;
  auto* gf = app.add_subcommand(
      "gf-check", "exact generating-function checks on random rational points");
  gf->add_option("--order", order, "number of series coefficients compared")
      ->capture_default_str();
  gf->add_option("--trials", trials, "random (x, y) pairs per kind")
      ->capture_default_str();
  gf->add_option("--seed", seed, "random seed (fixed default for reproducibility)")
      ->capture_default_str();

  unsigned const_prec = 60;
  auto* pc = app.add_subcommand("paper-constants",
                                "audit the printed constants behind the fixed instances");
  pc->add_option("--prec", const_prec, "working precision in decimal digits")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) return run_list();
    if (app.got_subcommand("verify")) return run_verify(vo);
    if (app.got_subcommand("gf-check")) return run_gf_check(order, trials, seed);
    if (app.got_subcommand("paper-constants")) return run_paper_constants(const_prec);
  } catch (const AZError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
