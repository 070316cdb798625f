#include <doctest.h>

#include <numeric>

#include "fixerlab/fixer.hpp"

using namespace fixerlab;

namespace {

Perm cyc(size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

PermGroup alt5() {
  PermGroup G(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 3}}), cyc(5, {{0, 1, 4}})});
  G.enumerate();
  return G;
}

PermGroup sym(size_t n) {
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point(0));
  PermGroup G(n, {cyc(n, {{0, 1}}), cyc(n, {cycle})});
  G.enumerate();
  return G;
}

// Fixer test straight from the definition: every x in K lies in some H^g.
bool fixer_brute(const PermGroup &G, const Subgroup &H, const Subgroup &K) {
  for (auto x : K.elems) {
    bool found = false;
    for (uint32_t g = 0; g < G.order() && !found; ++g) found = H.contains(G.conj(x, g));
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fixer: A4 on the cosets of S3 in A5") {
  auto G = alt5();
  auto H = subgroup_of(G, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}, {3, 4}})});
  REQUIRE(H.order() == 6);
  FixerContext C(G, H);
  CHECK(C.degree() == 10);
  auto A4 = subgroup_of(G, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 3}})});
  auto v = is_fixer(C, A4);
  CHECK(v.is_fixer);
  CHECK_FALSE(v.is_stable);
  CHECK(v.is_strictly_large);
  auto D10 = subgroup_of(G, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})});
  auto w = is_fixer(C, D10);
  CHECK_FALSE(w.is_fixer);
  REQUIRE(w.witness);
  CHECK(G.elem_order(*w.witness) == 5);

  auto large = classify_large_fixers(C);
  REQUIRE(large.size() == 1);
  CHECK(large[0].K.order() == 12);
  CHECK(large[0].maximal);
  auto e = ekr_predicates(large, H.order());
  CHECK_FALSE(e.weak_ekr);
  CHECK_FALSE(e.strict_weak_ekr);
  // 5 |K|^2 = 2 |H|^2 |Omega|: rho1 sits exactly on sqrt(2/5)
  CHECK(compare_rho(12, 6, 10, 2, 5) == 0);
  auto r1 = rho1(C, maximal_subgroups(G));
  CHECK(r1.best_order == 12);
}

TEST_CASE("fixer: SL2(8) on the cosets of D14") {
  auto I = build_instance(socle_spec(8));
  auto H = maximal_subgroup(I, MaxType::GL1wrS2);
  REQUIRE(H.order() == 14);
  FixerContext C(I.G, H);
  auto r = rho0(C);
  CHECK(r.best_order == 56);
  CHECK(to_string_u128(r.lhs) == "6272");
  CHECK(to_string_u128(r.rhs) == "7056");
  CHECK(r.below_inverse_sqrt2);
}

TEST_CASE("fixer: S3 on three points has no large fixer") {
  auto G = sym(3);
  auto H = subgroup_of(G, {cyc(3, {{1, 2}})});
  FixerContext C(G, H);
  CHECK(classify_large_fixers(C).empty());
  auto e = ekr_predicates({}, H.order());
  CHECK(e.weak_ekr);
  CHECK(e.strict_weak_ekr);
}

TEST_CASE("fixer: Jordan and agreement with the definition") {
  std::vector<PermGroup> groups;
  groups.push_back(alt5());
  groups.push_back(sym(4));
  groups.push_back(sym(5));
  for (const auto &G : groups) {
    auto subs = subgroups_up_to_conjugacy(G);
    for (const auto &H : subs) {
      if (H.order() == G.order()) continue;
      // a transitive action of degree > 1 has a derangement
      CHECK_FALSE(derangement_set(G, H).empty());
      FixerContext C(G, H);
      for (const auto &K : subs) REQUIRE(is_fixer(C, K, false).is_fixer == fixer_brute(G, H, K));
    }
  }
}

TEST_CASE("fixer: prefilter rejections are sound") {
  std::vector<PermGroup> groups;
  groups.push_back(sym(5));
  groups.push_back(build_instance(pgl_spec(7)).G);
  groups.push_back(build_instance(pgammal_spec(8)).G);
  size_t rejects = 0;
  for (const auto &G : groups) {
    auto subs = subgroups_up_to_conjugacy(G);
    auto nat = ActionView::natural(G);
    for (const auto &H : subs) {
      if (H.order() == G.order()) continue;
      FixerContext C(G, H);
      for (const auto &K : subs) {
        auto pf = prefilter(C, K, &nat);
        if (pf.reject) {
          ++rejects;
          REQUIRE_MESSAGE(!is_fixer(C, K, false).is_fixer, pf.reason);
        }
      }
    }
  }
  CHECK(rejects > 0);
}

TEST_CASE("fixer: witness chains for the even-characteristic families") {
  auto L = PSL2::get(64);
  for (uint32_t k : {0u, 3u, 2u, 1u}) {
    GroupSpec s = k == 0 ? socle_spec(64) : field_spec(64, k);
    auto rep = verify_family(*L, s, FamilyKind::L_I, 3);
    CAPTURE(s.label());
    CHECK(rep.failures.empty());
    CHECK(rep.verified == rep.elements);
  }
  for (uint32_t k : {0u, 2u}) {
    GroupSpec s = k == 0 ? socle_spec(64) : field_spec(64, k);
    CAPTURE(s.label());
    for (auto kind : {FamilyKind::case_a, FamilyKind::case_c}) {
      auto rep = verify_family(*L, s, kind);
      CHECK(rep.failures.empty());
      CHECK(rep.verified == rep.elements);
    }
  }
  auto L128 = PSL2::get(128);
  for (uint32_t k : {0u, 1u}) {
    GroupSpec s = k == 0 ? socle_spec(128) : field_spec(128, k);
    auto rep = verify_family(*L128, s, FamilyKind::case_a);
    CAPTURE(s.label());
    CHECK(rep.failures.empty());
    CHECK(rep.verified == rep.elements);
    CHECK(rep.elements == 128 * 127 * (k == 0 ? 1 : 7));
  }
}

TEST_CASE("fixer: witness chains are checked, not trusted") {
  auto L = PSL2::get(64);
  // u(1) phi lies outside SL2(64)
  auto W = witness_chain(*L, socle_spec(64), FamilyKind::case_a, 0, L->mul(L->u(1), L->phi()));
  CHECK_FALSE(W.verified);
  CHECK_FALSE(W.failure.empty());
}

TEST_CASE("fixer: Sylow 3-subgroup of PSL2(27) on the cosets of A4") {
  auto I = build_instance(socle_spec(27));
  uint32_t q0 = 0;
  auto H = subfield_subgroup(I, 3);
  REQUIRE(H.order() == 12);
  REQUIRE(identify_type(I, H, &q0) == MaxType::GL2sub);
  auto Q = subgroup_Q(I);
  REQUIRE(Q.order() == 27);
  // straight from the action on the 819 cosets
  auto A = coset_action(I.G, H);
  CHECK(A.index() == 819);
  for (auto x : Q.elems) REQUIRE(A.fixed_points(I.G, x) > 0);
  CHECK_FALSE(conjugate_into(I.G, Q, H));
}
