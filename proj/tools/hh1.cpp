// hh1: build algebras, compute HH^1 as a restricted Lie algebra, and run the check suite.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hh1/suite.hpp"

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, invalid_input = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraFlags {
  std::string kind = "smash";
  std::uint32_t p = 3;
  unsigned n = 1, r = 1;
  std::vector<unsigned> exps{1};
  std::string quiver = "tkr";
  std::string file;
};

void add_algebra_flags(CLI::App* cmd, AlgebraFlags& f) {
  cmd->add_option("--kind", f.kind, "smash | trunc | quiver | trivext | u0borel | json")
      ->check(CLI::IsMember({"smash", "trunc", "quiver", "trivext", "u0borel", "json"}));
  cmd->add_option("--p", f.p, "characteristic (odd prime)");
  cmd->add_option("--n", f.n, "smash: x^(p^n) = 0; u0borel: rank");
  cmd->add_option("--r", f.r, "smash: p^r idempotents");
  cmd->add_option("--exps", f.exps, "trunc: exponents a_i of X_i^(p^a_i) = 0")->delimiter(',');
  cmd->add_option("--quiver", f.quiver, "quiver: tkr | kronecker")->check(CLI::IsMember({"tkr", "kronecker"}));
  cmd->add_option("--file", f.file, "json: Algebra JSON file");
}

void require_prime(std::uint32_t p) {
  if (p < 3 || !hh1::is_prime(p)) throw UsageError("--p must be an odd prime (p >= 3), got " + std::to_string(p));
}

hh1::Algebra load_json_file(const std::string& path) {
  if (path.empty()) throw UsageError("--kind json needs --file");
  std::ifstream in(path);
  if (!in) throw hh1::InputError("cannot open " + path);
  hh1::json j;
  try {
    in >> j;
  } catch (const hh1::json::exception& e) {
    throw hh1::InputError(std::string("malformed JSON: ") + e.what());
  }
  return hh1::algebra_from_json(j);
}

// The algebra plus, for smash products, the named complement.
struct Built {
  hh1::Algebra algebra;
  std::optional<hh1::SmashAlgebra> smash;
};

Built build_algebra(const AlgebraFlags& f) {
  if (f.kind == "json") return {load_json_file(f.file), std::nullopt};
  require_prime(f.p);
  if (f.kind == "smash") {
    if (f.n < 1 || f.r < 1) throw UsageError("--n and --r must be >= 1");
    auto s = hh1::smash_product(f.p, f.n, f.r);
    return {s.algebra, s};
  }
  if (f.kind == "trunc") {
    if (f.exps.empty()) throw UsageError("--exps needs at least one exponent");
    for (auto e : f.exps)
      if (e < 1) throw UsageError("--exps entries must be >= 1");
    return {hh1::truncated_polynomial(f.p, f.exps), std::nullopt};
  }
  if (f.kind == "quiver") {
    if (f.quiver == "kronecker") return {hh1::kronecker_algebra(f.p), std::nullopt};
    return {hh1::quiver_algebra(f.p, hh1::trivial_extension_kronecker_quiver(f.p), "T(Kr)"), std::nullopt};
  }
  if (f.kind == "trivext") return {hh1::trivial_extension(hh1::kronecker_algebra(f.p)), std::nullopt};
  if (f.n < 1) throw UsageError("--n must be >= 1");
  return {hh1::u0_borel(f.p, f.n), std::nullopt};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology HH^1 of finite-dimensional algebras over GF(p)"};
  app.require_subcommand(1);

  AlgebraFlags build_flags, hh1_flags;
  std::string build_json, hh1_json;
  std::uint64_t hh1_seed = 1;
  auto* build = app.add_subcommand("build", "emit the canonical Algebra JSON");
  add_algebra_flags(build, build_flags);
  build->add_option("--json", build_json, "also write the JSON to this file");

  auto* hh1cmd = app.add_subcommand("hh1", "compute HH^1, its restricted Lie structure and fingerprint");
  add_algebra_flags(hh1cmd, hh1_flags);
  hh1cmd->add_option("--seed", hh1_seed, "seed for randomized steps");
  hh1cmd->add_option("--json", hh1_json, "also write the report to this file");

  hh1::SuiteOptions suite_opts;
  std::string suite_json, suite_md;
  std::vector<std::string> only;
  auto* repro = app.add_subcommand("reproduce-paper", "run every registered check");
  repro->add_option("--p", suite_opts.p, "characteristic")->check(CLI::IsMember({3u, 5u}));
  repro->add_option("--seed", suite_opts.seed, "seed for randomized steps");
  repro->add_option("--json", suite_json, "write the CheckResult array to this file");
  repro->add_option("--md", suite_md, "write the markdown table to this file");
  repro->add_option("--only", only, "run only these check ids")->delimiter(',');
  repro->add_flag("--inject-fault", suite_opts.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? ok : usage;
  }

  try {
    if (*build) {
      const std::string out = hh1::to_json(build_algebra(build_flags).algebra).dump();
      std::cout << out << "\n";
      if (!build_json.empty()) write_file(build_json, out + "\n");
      return ok;
    }
    if (*hh1cmd) {
      const Built b = build_algebra(hh1_flags);
      const hh1::HH1Presentation h =
          b.smash ? hh1::first_cohomology_smash(*b.smash, hh1_seed) : hh1::first_cohomology(b.algebra, hh1_seed);
      const hh1::RestrictedLie L = hh1::from_hh1(h);
      hh1::json report;
      report["hochschild"] = hh1::to_json(h);
      report["lie"] = hh1::to_json(L);
      report["fingerprint"] = hh1::to_json(hh1::fingerprint(L, hh1_seed));
      const std::string out = report.dump();
      std::cout << out << "\n";
      if (!hh1_json.empty()) write_file(hh1_json, out + "\n");
      return ok;
    }
    for (const auto& id : only) {
      const auto& cs = hh1::registered_checks();
      if (std::none_of(cs.begin(), cs.end(), [&](const hh1::CheckSpec& c) { return c.id == id; }))
        throw UsageError("unknown check id " + id);
    }
    const auto results = hh1::run_suite(suite_opts, only);
    const std::string md = hh1::markdown_table(results, suite_opts.p);
    std::cout << md;
    if (!suite_md.empty()) write_file(suite_md, md);
    if (!suite_json.empty()) write_file(suite_json, hh1::to_json(results).dump() + "\n");
    return hh1::all_passed(results) ? ok : check_failed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const hh1::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return check_failed;
  }
}
