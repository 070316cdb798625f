#include <doctest.h>

#include "fixerlab/properties.hpp"
#include "fixerlab/report.hpp"

using namespace fixerlab;

namespace {

void require_ok(const PropertyResult &r) {
  CAPTURE(r.name);
  CAPTURE(r.first_failure);
  CHECK(r.checked > 0);
  CHECK(r.failed == 0);
}

}  // namespace

TEST_CASE("properties: wreath types, split rule, trace laws") {
  require_ok(wreath_suite());
  require_ok(split_rule_suite());
  require_ok(trace_suite());
}

TEST_CASE("properties: class equation, Jordan, prefilter") {
  require_ok(class_equation_suite());
  require_ok(jordan_suite());
  require_ok(prefilter_suite());
}

TEST_CASE("properties: reports do not depend on the thread count") { require_ok(determinism_suite()); }

TEST_CASE("report: outer specs") {
  CHECK(parse_outer(9, "").empty());
  auto g = parse_outer(9, "phi, delta");
  REQUIRE(g.size() == 2);
  CHECK(g[0].k == 1);
  CHECK(g[1].e == 1);
  CHECK(same_outer(9, g, pgammal_spec(9)));
  CHECK_FALSE(same_outer(9, parse_outer(9, "delta*phi"), pgammal_spec(9)));
  CHECK(same_outer(8, parse_outer(8, "delta"), socle_spec(8)));
  CHECK(same_outer(64, parse_outer(64, "phi^4"), field_spec(64, 2)));
  CHECK_THROWS_AS(parse_outer(9, "psi"), ReportError);
  CHECK_THROWS_AS(parse_outer(9, "phi2"), ReportError);
}

TEST_CASE("report: json body and exit status") {
  auto R = cmd_rho({}, Scope::exhaustive);
  REQUIRE(R.verdicts.size() == 1);
  CHECK(R.ok());
  auto j = R.to_json();
  CHECK(j["command"] == "rho");
  CHECK(j["verdicts"][0]["evidence"]["five_K_squared"] == 720);
  CHECK(j["verdicts"][0]["evidence"]["two_H_squared_omega"] == 720);
  CHECK(R.dump_text().find("ALL PASS") != std::string::npos);

  auto S = cmd_sporadic({"M11:GL2(3):M9.2", "M11:nope:M10"});
  REQUIRE(S.verdicts.size() == 2);
  CHECK(S.verdicts[0].pass);
  CHECK_FALSE(S.verdicts[1].pass);
  CHECK_FALSE(S.ok());
}

TEST_CASE("report: table fixture comparison") {
  std::vector<uint32_t> qs{4, 5};
  Json fx = build_table1_fixture(qs);
  auto R = cmd_table_psl2(qs, "", Scope::exhaustive, fx);
  CHECK(R.ok());
  fx["cases"][0]["large"] = Json::array();
  auto bad = cmd_table_psl2(qs, "", Scope::exhaustive, fx);
  CHECK_FALSE(bad.ok());
  CHECK(bad.verdicts[0].evidence["fixture"] == "mismatch");
  auto none = cmd_table_psl2(qs, "", Scope::exhaustive, std::nullopt);
  CHECK_FALSE(none.ok());
  auto socle = cmd_table_psl2({5}, "1", Scope::exhaustive, build_table1_fixture({5}));
  for (const auto &v : socle.verdicts) CHECK(v.check.find("PSL2(5)") != std::string::npos);
  auto skipped = cmd_table_psl2({6, 37}, "", Scope::exhaustive, std::nullopt);
  CHECK(skipped.verdicts.empty());
  CHECK(skipped.notices.size() == 2);
}
