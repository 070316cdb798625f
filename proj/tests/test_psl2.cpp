#include <doctest.h>

#include <random>

#include "fixerlab/psl2.hpp"

using namespace fixerlab;

TEST_CASE("psl2: group orders") {
  auto I5 = build_instance(socle_spec(5));
  CHECK(I5.G.order() == 60);
  CHECK(I5.G.degree() == 6);
  CHECK(build_instance(pgammal_spec(8)).G.order() == 1512);
  CHECK(build_instance(pgl_spec(7)).G.order() == 336);
  CHECK(build_instance(pgammal_spec(9)).G.order() == 1440);
}

TEST_CASE("psl2: group specs") {
  size_t total = 0;
  for (uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 19u, 23u, 25u, 27u, 29u, 31u}) {
    auto specs = all_group_specs(q);
    total += specs.size();
    std::set<std::string> labels;
    for (const auto &s : specs) labels.insert(s.label());
    CHECK(labels.size() == specs.size());
  }
  CHECK(total == 37);
  auto s9 = all_group_specs(9);
  std::set<std::string> l9;
  for (auto &s : s9) l9.insert(s.label());
  CHECK(l9 == std::set<std::string>{"PSL2(9)", "PGL2(9)", "PSigmaL2(9)", "PSL2(9).<delta*phi>", "PGammaL2(9)"});
  // the five groups over GF(9) have the expected orders
  for (auto &s : s9) {
    auto I = build_instance(s);
    CHECK(I.G.order() == 360 * I.L->outer_group(s).size());
  }
}

TEST_CASE("psl2: semilinear arithmetic matches permutations") {
  std::mt19937_64 rng(3);
  for (uint32_t q : {4u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    auto L = PSL2::get(q);
    auto gens = L->group_generators(pgammal_spec(q));
    std::uniform_int_distribution<size_t> U(0, gens.size() - 1);
    auto rnd = [&] {
      SemilinearElem x = L->identity();
      for (int k = 0; k < 12; ++k) x = L->mul(x, gens[U(rng)]);
      return x;
    };
    for (int t = 0; t < 300; ++t) {
      SemilinearElem x = rnd(), y = rnd();
      REQUIRE(L->perm(L->mul(x, y)) == L->perm(x) * L->perm(y));
      REQUIRE(L->perm(L->inv(x)) == L->perm(x).inverse());
      REQUIRE(L->from_perm(L->perm(x)) == x);
      REQUIRE(L->outer_part(L->mul(x, y)).k == (L->outer_part(x).k + L->outer_part(y).k) % L->f());
    }
  }
}

TEST_CASE("psl2: rho is an isomorphism onto Gamma") {
  for (uint32_t q : {4u, 8u, 9u, 16u}) {
    auto L = PSL2::get(q);
    const Gamma &G = L->gamma();
    const uint32_t n = uint32_t(G.size());
    std::vector<SemilinearElem> xs(n);
    for (uint32_t a = 0; a < n; ++a) {
      xs[a] = L->rho_inv(G.element(a));
      REQUIRE(L->normalizes_Q(xs[a]));
      REQUIRE(L->rho(xs[a]) == G.element(a));
    }
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        REQUIRE(L->rho(L->mul(xs[a], xs[b])) == G.mul(G.element(a), G.element(b)));
  }
  std::mt19937_64 rng(11);
  for (uint32_t q : {25u, 27u, 32u, 64u}) {
    auto L = PSL2::get(q);
    const Gamma &G = L->gamma();
    std::uniform_int_distribution<uint32_t> U(0, uint32_t(G.size() - 1));
    for (int t = 0; t < 10000; ++t) {
      GammaElem a = G.element(U(rng)), b = G.element(U(rng));
      REQUIRE(L->perm(L->rho_inv(G.mul(a, b))) == L->perm(L->rho_inv(a)) * L->perm(L->rho_inv(b)));
    }
  }
  auto L = PSL2::get(27);
  const FieldCtx &F = L->F();
  uint32_t a = 5, l = 7, m = 11;
  CHECK(L->rho(L->u(a)) == GammaElem{a, 1, 0});
  CHECK(L->rho(L->diag(l, m)) == GammaElem{0, F.div(m, l), 0});
  CHECK(L->rho(L->phi()) == GammaElem{0, 1, 1});
  CHECK_THROWS_AS(L->rho(L->w()), Psl2Error);
}

TEST_CASE("psl2: natural action is 2-transitive") {
  for (uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u}) {
    auto I = build_instance(socle_spec(q));
    auto P = set_stabilizer(I.G, {0});
    std::set<Point> orbit;
    for (auto x : P.elems) orbit.insert(I.G.row(x)[1]);
    CHECK(orbit.size() == q);
  }
}

TEST_CASE("psl2: named subgroups") {
  {
    auto I = build_instance(socle_spec(8));
    CHECK(subgroup_Q(I).order() == 8);
    CHECK(subgroup_D(I).order() == 7);
    CHECK(maximal_subgroup(I, MaxType::GL1q2).order() == 18);
    CHECK_THROWS_AS(subfield_subgroup(I, 2), Psl2Error);
  }
  {
    auto I = build_instance(socle_spec(9));
    auto Q = subgroup_Q(I);
    CHECK(Q.order() == 9);
    for (auto x : Q.elems) CHECK((x == 0 || I.G.elem_order(x) == 3));
    CHECK(maximal_subgroup(I, MaxType::GL1wrS2).order() == 8);
    CHECK(subfield_subgroup(I, 3).order() == 24);
  }
  {
    auto I = build_instance(socle_spec(7));
    CHECK(maximal_subgroup(I, MaxType::P1).order() == 21);
    CHECK(small_overgroups(I, 24).size() == 2);
  }
  {
    auto I = build_instance(socle_spec(11));
    CHECK(small_overgroups(I, 60).size() == 2);
    // fused in PGL2(11); the normaliser is A5 itself
    auto v = small_overgroups(build_instance(pgl_spec(11)), 60);
    REQUIRE(v.size() == 1);
    CHECK(v[0].order() == 60);
  }
}

TEST_CASE("psl2: SL2(64) subgroups and fixer families") {
  auto I = build_instance(socle_spec(64));
  const PSL2 &L = *I.L;
  CHECK(set_stabilizer(I.G, {0}).order() == 64 * 63);
  CHECK(subfield_subgroup(I, 4).order() == 60);
  CHECK(subfield_subgroup(I, 8).order() == 504);
  auto LI = fixer_family(L, I.spec, FamilyKind::L_I, 3);
  CHECK(LI.order() == 192);
  CHECK(realize(I, LI.generators(L)).order() == 192);
  auto ca = fixer_family(L, I.spec, FamilyKind::case_a);
  CHECK(ca.order() == 64 * 63);
  auto cc = fixer_family(L, I.spec, FamilyKind::case_c);
  CHECK(cc.order() == 64 * 9);
  CHECK(realize(I, cc.generators(L)).order() == 576);
  CHECK_THROWS_AS(fixer_family(L, I.spec, FamilyKind::L_II, 3), Psl2Error);
  CHECK_THROWS_AS(fixer_family(L, I.spec, FamilyKind::L_I, 2), Psl2Error);
}

TEST_CASE("psl2: family orders without enumeration") {
  auto L16 = PSL2::get(16);
  CHECK(fixer_family(*L16, socle_spec(16), FamilyKind::case_c).order() == 80);
  auto L = PSL2::get(3125);
  auto M = fixer_family(*L, socle_spec(3125), FamilyKind::M, 5);
  CHECK(M.order() == 625);
  CHECK(M.unipotent_basis.size() == 4);
  CHECK(fixer_family(*L, socle_spec(3125), FamilyKind::L_III, 5).order() == 1250);
  auto LII = fixer_family(*L, pgammal_spec(3125), FamilyKind::L_II, 5);
  CHECK(LII.order() == 3125 * 4);
  for (const auto &g : LII.generators(*L)) CHECK(LII.contains(*L, g));
}

TEST_CASE("psl2: type identification of constructed maximals") {
  auto I = build_instance(pgammal_spec(25));
  uint32_t q0 = 0;
  CHECK(identify_type(I, maximal_subgroup(I, MaxType::P1), &q0) == MaxType::P1);
  CHECK(identify_type(I, maximal_subgroup(I, MaxType::GL1wrS2)) == MaxType::GL1wrS2);
  CHECK(identify_type(I, maximal_subgroup(I, MaxType::GL1q2)) == MaxType::GL1q2);
  CHECK(identify_type(I, maximal_subgroup(I, MaxType::GL2sub, 2), &q0) == MaxType::GL2sub);
  CHECK(q0 == 5);
  auto I13 = build_instance(socle_spec(13));
  CHECK(identify_type(I13, maximal_subgroup(I13, MaxType::Extraspecial)) == MaxType::Extraspecial);
  auto I11 = build_instance(socle_spec(11));
  CHECK(identify_type(I11, maximal_subgroup(I11, MaxType::A5)) == MaxType::A5);
}
