// fixerlab: batch reproduction of fixer and derangement checks.
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fixerlab/report.hpp"

using namespace fixerlab;

namespace {

// "4,5,7" or "37-61" ranges; non prime powers are dropped by the commands.
std::vector<uint32_t> parse_list(const std::string &s) {
  std::vector<uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) {
      out.push_back(uint32_t(std::stoul(tok)));
    } else {
      uint32_t lo = uint32_t(std::stoul(tok.substr(0, dash))), hi = uint32_t(std::stoul(tok.substr(dash + 1)));
      for (uint32_t x = lo; x <= hi; ++x)
        if (is_prime_power(x)) out.push_back(x);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"fixers and derangements of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", fixtures, q_table, q_gamma, q_rho, q_spiga, n_arg = "5-10", outer, scope_arg = "exhaustive", kinds = "abcd";
  std::string write_fixture;
  int threads = 0;
  std::vector<std::string> rows;
  bool no_brute = false;

  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  app.add_option("--fixtures", fixtures, "fixture directory (default $FIXERLAB_DATA/fixtures)");

  auto *table = app.add_subcommand("table-psl2", "large fixers for every primitive G with socle PSL2(q)");
  table->add_option("--q", q_table, "q list, e.g. 4,5,7 or 37-61")->required();
  table->add_option("--outer", outer, "generators of O, e.g. phi^2,delta (default: all G)");
  table->add_option("--scope", scope_arg)->check(CLI::IsMember({"exhaustive", "targeted"}));
  table->add_option("--write-fixture", write_fixture, "write the exhaustive scan as a fixture file");

  auto *gamma = app.add_subcommand("verify-gamma", "closed-form conjugacy in AGammaL1(q) against the class oracle");
  gamma->add_option("--q", q_gamma)->default_val("4,8,9,16,25,27,32,64");

  auto *rho = app.add_subcommand("rho", "exact rho0 bounds, and the rho1 equality for A5 on cosets of S3");
  rho->add_option("--q", q_rho, "q list (default: only the A5 certificate)");
  rho->add_option("--scope", scope_arg)->check(CLI::IsMember({"exhaustive", "targeted"}));

  auto *spiga = app.add_subcommand("spiga", "permutation character certificates for equal derangement sets");
  spiga->add_option("--q", q_spiga)->default_val("8,16,32");
  spiga->add_option("--kinds", kinds, "subset of abcd");

  auto *alt = app.add_subcommand("alt-scan", "derangement containment among maximal subgroups of S_n, A_n");
  alt->add_option("--n", n_arg, "range lo-hi");
  alt->add_flag("--type-only", no_brute, "skip the element-level cross-check");

  auto *spor = app.add_subcommand("sporadic", "containment rows for the shipped sporadic groups");
  spor->add_option("rows", rows, "G:H:K, e.g. M11:GL2(3):M9.2 (default: all rows)");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  const auto t0 = std::chrono::steady_clock::now();
  Report R;
  try {
    if (*table) {
      auto qs = parse_list(q_table);
      Scope scope = parse_scope(scope_arg);
      if (!write_fixture.empty()) {
        Json fx = build_table1_fixture(qs);
        std::ofstream(write_fixture) << fx.dump(1) << "\n";
        std::cerr << "wrote " << fx["cases"].size() << " cases to " << write_fixture << "\n";
        return 0;
      }
      std::optional<Json> fx;
      if (scope == Scope::exhaustive) fx = load_fixture(fixtures_dir(fixtures), "table1_psl2.json");
      R = cmd_table_psl2(qs, outer, scope, fx);
    } else if (*gamma) {
      R = cmd_verify_gamma(parse_list(q_gamma));
    } else if (*rho) {
      R = cmd_rho(parse_list(q_rho), parse_scope(scope_arg));
    } else if (*spiga) {
      R = cmd_spiga(parse_list(q_spiga), kinds);
    } else if (*alt) {
      uint32_t lo = 5, hi = 10;
      auto dash = n_arg.find('-');
      if (dash == std::string::npos) {
        lo = hi = uint32_t(std::stoul(n_arg));
      } else {
        lo = uint32_t(std::stoul(n_arg.substr(0, dash)));
        hi = uint32_t(std::stoul(n_arg.substr(dash + 1)));
      }
      R = cmd_alt_scan(lo, hi, !no_brute);
    } else if (*spor) {
      R = cmd_sporadic(rows);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << (format == "json" ? R.dump_json() : R.dump_text());
  // timing stays out of the report body so reports compare byte for byte
  std::cerr << "timing: " << R.command << " " << secs << " s\n";
  return R.ok() ? 0 : 1;
}
