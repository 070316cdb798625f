// One PASS/FAIL line per acceptance criterion. All comparisons are exact;
// each criterion also has a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixerlab/fixer.hpp"
#include "fixerlab/properties.hpp"
#include "fixerlab/report.hpp"

using namespace fixerlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string &title, double budget_s, const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = o.pass && s <= budget_s;
  failures += !pass;
  std::printf("[%s] %d %s: %s [%.1f s / %.0f s]\n", pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), s,
              budget_s);
  std::fflush(stdout);
}

const std::vector<uint32_t> kTableQ{4, 5, 7, 8, 9, 11, 13, 16, 19, 23, 25, 27, 29, 31};
const std::vector<uint32_t> kTargetedQ{37, 41, 43, 47, 49, 53, 59, 61};

std::string failed_checks(const Report &R, size_t limit = 3) {
  std::string s;
  size_t n = 0;
  for (const auto &v : R.verdicts)
    if (!v.pass && n++ < limit) s += (s.empty() ? "" : "; ") + v.check;
  return s;
}

}  // namespace

int main() {
  Report table;

  run(1, "Table 1 reproduction", 3600, [&] {
    auto fx = load_fixture(fixtures_dir(), "table1_psl2.json");
    if (!fx) return Outcome{false, "fixture table1_psl2.json not found"};
    table = cmd_table_psl2(kTableQ, "", Scope::exhaustive, fx);
    size_t match = 0, predicate = 0, corrections = 0;
    for (const auto &v : table.verdicts) {
      match += v.evidence["fixture"] == "match";
      predicate += v.evidence["predicate_ok"].get<bool>();
      corrections += v.evidence["correction_used"].get<bool>();
    }
    const size_t n = table.verdicts.size();
    std::ostringstream d;
    d << match << "/" << n << " (G,H) equal the fixture, table predicate holds on " << predicate << "/" << n
      << ", flagged correction rows used: " << corrections;
    if (match != n || predicate != n) d << " (first: " << failed_checks(table) << ")";
    return Outcome{n > 0 && match == n && predicate == n && table.notices.empty(), d.str()};
  });

  run(2, "closed-form conjugacy oracles", 600, [] {
    auto R = cmd_verify_gamma({4, 8, 9, 16, 25, 27, 32, 64});
    uint64_t checked = 0;
    for (const auto &v : R.verdicts) checked += v.evidence["checked"].get<uint64_t>();
    std::ostringstream d;
    d << R.verdicts.size() << " checks over 8 fields, " << checked << " cases";
    if (!R.ok()) d << "; failing: " << failed_checks(R);
    return Outcome{R.ok() && R.notices.empty() && R.verdicts.size() == 32, d.str()};
  });

  run(3, "witness chains at q = 64, 128", 600, [] {
    uint64_t elements = 0, verified = 0, families = 0;
    std::string failure;
    auto tally = [&](const FamilyWitnessReport &r) {
      ++families;
      elements += r.elements;
      verified += r.verified;
      if (failure.empty() && !r.failures.empty()) failure = r.failures.front();
    };
    auto L = PSL2::get(64);
    for (uint32_t k : {0u, 3u, 2u, 1u}) tally(verify_family(*L, k ? field_spec(64, k) : socle_spec(64), FamilyKind::L_I, 3));
    for (uint32_t k : {0u, 2u})
      for (auto kind : {FamilyKind::case_a, FamilyKind::case_c})
        tally(verify_family(*L, k ? field_spec(64, k) : socle_spec(64), kind));
    auto L128 = PSL2::get(128);
    for (uint32_t k : {0u, 1u}) tally(verify_family(*L128, k ? field_spec(128, k) : socle_spec(128), FamilyKind::case_a));
    std::ostringstream d;
    d << verified << "/" << elements << " elements conjugated into H over " << families << " families";
    if (!failure.empty()) d << "; " << failure;
    return Outcome{elements > 0 && verified == elements && failure.empty(), d.str()};
  });

  run(4, "rho bounds", 3600, [&] {
    size_t below = 0;
    for (const auto &v : table.verdicts) below += v.evidence["rho"]["below_inverse_sqrt2"].get<bool>();
    auto R = cmd_rho(kTargetedQ, Scope::targeted);
    const auto &a5 = R.verdicts.back();
    size_t targeted_below = 0;
    for (size_t i = 0; i + 1 < R.verdicts.size(); ++i) targeted_below += R.verdicts[i].pass;
    std::ostringstream d;
    d << "2|K|^2 < |G||H| on " << below << "/" << table.verdicts.size() << " exhaustive and " << targeted_below << "/"
      << R.verdicts.size() - 1 << " targeted instances; A5/S3: 5|K|^2 = " << a5.evidence["five_K_squared"]
      << ", 2|H|^2|Omega| = " << a5.evidence["two_H_squared_omega"];
    if (!R.ok()) d << "; failing: " << failed_checks(R);
    return Outcome{!table.verdicts.empty() && below == table.verdicts.size() && R.ok() && R.notices.empty() &&
                       R.verdicts.size() > 1,
                   d.str()};
  });

  run(5, "permutation character certificates", 300, [] {
    auto A = cmd_spiga({8, 16, 32}, "a");
    bool a_ok = A.ok() && A.verdicts.size() == 3;
    for (const auto &v : A.verdicts)
      a_ok = a_ok && v.evidence["pi_delta_pi_delta"] == "2" && v.evidence["pi_omega_pi_delta"] == "2" &&
             v.evidence["pi_omega_one"] == "1" && v.evidence["verdict"] == "character-difference";
    std::vector<uint32_t> qs;
    for (uint32_t q = 2; q <= 61; ++q)
      if (is_prime_power(q)) qs.push_back(q);
    auto B = cmd_spiga(qs, "bcd");
    bool b_ok = B.ok() && !B.verdicts.empty();
    for (const auto &v : B.verdicts) b_ok = b_ok && v.evidence["verdict"] == "equal";
    std::ostringstream d;
    d << "(2,2,1) character-difference at q = 8, 16, 32: " << (a_ok ? "yes" : "no") << "; equal on "
      << B.verdicts.size() << " cases of kinds b-d with q <= 61: " << (b_ok ? "yes" : "no");
    if (!a_ok || !b_ok) d << "; failing: " << failed_checks(A) << " " << failed_checks(B);
    return Outcome{a_ok && b_ok, d.str()};
  });

  run(6, "alternating scan 5 <= n <= 10", 900, [] {
    auto R = cmd_alt_scan(5, 10, true);
    std::ostringstream d;
    d << "hits " << R.verdicts[0].evidence["hits"].dump() << ", type/element disagreements "
      << R.verdicts[1].evidence["disagreements"] << " over " << R.verdicts[1].evidence["pairs"] << " pairs";
    return Outcome{R.ok(), d.str()};
  });

  run(7, "sporadic containment rows", 1800, [] {
    auto R = cmd_sporadic({});
    size_t pos = 0, pos_ok = 0, neg = 0, neg_ok = 0;
    for (const auto &v : R.verdicts) {
      bool expected = v.evidence.value("expected", true);
      (expected ? pos : neg)++;
      (expected ? pos_ok : neg_ok) += v.pass;
    }
    std::ostringstream d;
    d << "positive rows true: " << pos_ok << "/" << pos << ", negative controls false: " << neg_ok << "/" << neg;
    if (!R.ok()) d << "; failing: " << failed_checks(R);
    return Outcome{R.ok() && neg > 0, d.str()};
  });

  run(8, "property suites", 1800, [] {
    auto suites = all_property_suites();
    bool ok = true;
    std::string d;
    for (const auto &s : suites) {
      ok = ok && s.ok();
      d += (d.empty() ? "" : ", ") + s.name + " " + std::to_string(s.checked - s.failed) + "/" +
           std::to_string(s.checked);
      if (!s.ok()) d += " (" + s.first_failure + ")";
    }
    return Outcome{ok, d};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures ? 1 : 0;
}
