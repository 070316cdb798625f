#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixerlab/fixer.hpp"
#include "fixerlab/permchar.hpp"
#include "fixerlab/psl2.hpp"
#include "fixerlab/spiga.hpp"

using namespace fixerlab;

namespace {

Perm cyc(size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

PermGroup alt5() {
  PermGroup G(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 3}}), cyc(5, {{0, 1, 4}})});
  G.enumerate();
  return G;
}

}  // namespace

TEST_CASE("permchar: A5 on five points") {
  auto G = alt5();
  auto nat = ActionView::natural(G);
  auto pi = perm_character(nat);
  const auto &cls = G.classes();
  REQUIRE(cls.count() == 5);
  for (size_t c = 0; c < cls.count(); ++c) {
    uint32_t o = G.elem_order(cls.rep[c]);
    Rational want = o == 1 ? 5 : o == 2 ? 1 : o == 3 ? 2 : 0;
    CHECK(pi[uint32_t(c)] == want);
  }
  CHECK(inner_product(pi, pi) == 2);
  CHECK(inner_product(pi, trivial_character(G)) == 1);
  // the class formula gives the same function
  auto A4 = subgroup_of(G, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 3}})});
  CHECK(perm_character(G, A4) == pi);
  auto reg = perm_character(G, subgroup_of(G, {}));
  CHECK(reg[0] == 60);
  for (size_t c = 1; c < cls.count(); ++c) CHECK(reg[uint32_t(c)] == 0);
}

TEST_CASE("permchar: Burnside against direct orbit counts") {
  auto G = alt5();
  auto subs = subgroups_up_to_conjugacy(G);
  auto one = trivial_character(G);
  for (const auto &H : subs) {
    auto A = coset_action(G, H);
    auto pi = perm_character(G, H);
    CHECK(pi == perm_character(ActionView::on_cosets(G, A)));
    CHECK(pi[0] == Rational(A.index()));
    CHECK(inner_product(pi, one) == 1);
    std::vector<Perm> gens;
    for (auto g : G.generator_indices()) gens.push_back(A.perm_of(G, g));
    CHECK(inner_product(pi, pi) == Rational(count_pair_orbits(A.index(), gens)));
    for (const auto &K : subs) {
      auto pK = perm_character(G, K);
      auto AK = coset_action(G, K);
      std::vector<Perm> hk;
      for (auto h : small_generating_set(G, H)) hk.push_back(AK.perm_of(G, h));
      CHECK(inner_product(pi, pK) == Rational(count_orbits(AK.index(), hk)));
    }
  }
}

TEST_CASE("permchar: mismatched tables are rejected") {
  auto G = alt5();
  auto I = build_instance(socle_spec(8));
  CHECK_THROWS_AS(inner_product(trivial_character(G), trivial_character(I.G)), PermcharError);
}

TEST_CASE("permchar: certificate for 2-subsets against the projective line") {
  for (uint32_t q : {8u, 16u}) {
    CAPTURE(q);
    auto I = build_instance(socle_spec(q));
    auto H = maximal_subgroup(I, MaxType::GL1wrS2);
    auto K = maximal_subgroup(I, MaxType::P1);
    auto C = spiga_certificate(I.G, H, K);
    CHECK(C.derangements_equal);
    CHECK(C.verdict == SpigaVerdict::character_difference);
    CHECK(C.dd == 2);
    CHECK(C.od == 2);
    CHECK(C.o1 == 1);
    CHECK(C.burnside_consistent);
    CHECK(C.h_orbits_delta == 2);
    CHECK(C.delta == q + 1);
    CHECK(C.omega == q * (q + 1) / 2);
  }
}

TEST_CASE("permchar: the two A5 classes of PSL2(11) give equal characters") {
  auto I = build_instance(socle_spec(11));
  auto v = small_overgroups(I, 60);
  REQUIRE(v.size() == 2);
  auto C = spiga_certificate(I.G, v[0], v[1]);
  CHECK(C.verdict == SpigaVerdict::equal);
  CHECK(C.burnside_consistent);
  CHECK(spiga_certificate(I.G, v[0], v[0]).verdict == SpigaVerdict::equal);
}

TEST_CASE("permchar: differing derangement sets fail with a witness") {
  auto I = build_instance(socle_spec(8));
  auto H = maximal_subgroup(I, MaxType::GL1q2);
  auto K = maximal_subgroup(I, MaxType::P1);
  auto C = spiga_certificate(I.G, H, K);
  CHECK(C.verdict == SpigaVerdict::fail);
  REQUIRE(C.witness);
  CHECK(I.G.elem_order(*C.witness) > 1);
}

TEST_CASE("permchar: certificate cases for q <= 32") {
  for (uint32_t q : {8u, 16u, 32u}) {
    auto c = spiga_case(q, 'a');
    CAPTURE(c.group);
    CHECK(c.ok());
    CHECK(c.cert.dd == 2);
    CHECK(c.cert.od == 2);
    CHECK(c.cert.o1 == 1);
  }
  CHECK(spiga_kinds(7) == std::vector<char>{'b'});
  CHECK(spiga_kinds(31) == std::vector<char>{'b', 'c'});
  CHECK(spiga_kinds(49) == std::vector<char>{'d'});
  CHECK(spiga_kinds(9).empty());
  for (const auto &c : spiga_cases(32, "bcd")) {
    CAPTURE(c.group);
    CAPTURE(c.kind);
    CHECK(c.ok());
    CHECK(c.cert.verdict == SpigaVerdict::equal);
    CHECK(c.distinct_classes);
    CHECK(c.cert.burnside_consistent);
  }
  CHECK_THROWS_AS(spiga_case(9, 'c'), Psl2Error);
}
