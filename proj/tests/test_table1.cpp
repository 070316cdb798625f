#include <doctest.h>

#include "fixerlab/table1.hpp"

using namespace fixerlab;

TEST_CASE("table1: small q agree with the table") {
  for (uint32_t q : {4u, 5u, 7u, 8u, 11u}) {
    for (const auto &c : table1_cases(q)) {
      CAPTURE(c.group);
      CAPTURE(type_name(c.h_type));
      CHECK(c.h_type != MaxType::Unknown);
      CHECK(c.predicate_ok);
    }
  }
}

TEST_CASE("table1: SL2(8) and PGammaL2(8) on the cosets of GL1(8) wr S2") {
  auto cs = table1_cases(8);
  int seen = 0;
  for (const auto &c : cs) {
    if (c.h_type != MaxType::GL1wrS2) continue;
    ++seen;
    auto maximal = std::count_if(c.large.begin(), c.large.end(), [](auto &s) { return s.maximal; });
    CHECK(maximal == 1);
    CHECK(c.maximal_l0 == std::vector<uint64_t>{56});
  }
  CHECK(seen == 2);
}

TEST_CASE("table1: rows") {
  auto L16 = PSL2::get(16);
  auto rows = table1_rows(*L16, socle_spec(16), MaxType::GL1wrS2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].l0_order == 240);
  CHECK(rows[1].l0_order == 60);
  CHECK(table1_rows(*L16, field_spec(16, 2), MaxType::GL2sub, 4).empty());
  CHECK(table1_rows(*L16, socle_spec(16), MaxType::GL2sub, 4).at(0).l0_order == 80);
  auto L27 = PSL2::get(27);
  auto r27 = table1_rows(*L27, socle_spec(27), MaxType::GL2sub, 3);
  REQUIRE(r27.size() == 1);
  CHECK(r27[0].correction);
  CHECK(table1_rows(*L27, pgammal_spec(27), MaxType::GL2sub, 3).empty());
}
