#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "fixerlab/group.hpp"

using namespace fixerlab;

namespace {

Perm cyc(size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

PermGroup sym(size_t n) {
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point(0));
  PermGroup G(n, {cyc(n, {{0, 1}}), cyc(n, {cycle})});
  G.enumerate();
  return G;
}

PermGroup alt(size_t n) {
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(cyc(n, {{0, 1, i}}));
  PermGroup G(n, gens);
  G.enumerate();
  return G;
}

PermGroup psl27() {
  // PSL(2,7) on the 7 points of the Fano plane.
  PermGroup G(7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}}), cyc(7, {{0, 1}, {3, 6}})});
  G.enumerate();
  return G;
}

// Subgroups by brute force: every closure of at most two elements, which
// covers every subgroup of the small groups used here (all 2-generated).
std::set<std::vector<uint32_t>> all_subgroups(const PermGroup &G) {
  std::set<std::vector<uint32_t>> out;
  for (uint32_t a = 0; a < G.order(); ++a)
    for (uint32_t b = a; b < G.order(); ++b) out.insert(closure(G, {a, b})->elems);
  return out;
}

size_t classes_of_subgroups(const PermGroup &G) {
  auto subs = all_subgroups(G);
  std::set<std::vector<uint32_t>> seen;
  size_t count = 0;
  for (const auto &s : subs) {
    if (seen.count(s)) continue;
    ++count;
    for (uint32_t g = 0; g < G.order(); ++g) {
      std::vector<uint32_t> c;
      for (auto x : s) c.push_back(G.conj(x, g));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return count;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto a = cyc(4, {{0, 1}});
  auto b = cyc(4, {{1, 2}});
  // left-to-right: 0 -> 1 -> 2
  CHECK((a * b)[0] == 2);
  CHECK((a * b).order() == 3);
  CHECK(a.conj(b) == cyc(4, {{0, 2}}));
  CHECK(cyc(6, {{0, 1, 2}, {3, 4}}).cycle_type() == std::vector<uint32_t>{3, 2, 1});
  CHECK(cyc(6, {{0, 1, 2}, {3, 4}}).pow(-1) == cyc(6, {{0, 2, 1}, {3, 4}}));
  CHECK_THROWS(Perm(std::vector<Point>{0, 0}));
  CHECK_THROWS(cyc(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("enumeration and class tables") {
  auto S3 = sym(3);
  CHECK(S3.order() == 6);
  CHECK(S3.element(0).is_identity());
  std::multiset<uint64_t> s3sizes(S3.classes().size.begin(), S3.classes().size.end());
  CHECK(s3sizes == std::multiset<uint64_t>{1, 2, 3});

  auto A5 = alt(5);
  CHECK(A5.order() == 60);
  std::multiset<uint64_t> a5sizes(A5.classes().size.begin(), A5.classes().size.end());
  CHECK(a5sizes == std::multiset<uint64_t>{1, 12, 12, 15, 20});
  CHECK(alt(4).classes().count() == 4);
  CHECK(sym(6).classes().count() == 11);

  // tau witnesses and class equation
  for (const PermGroup *G : {&S3, &A5}) {
    const auto &ct = G->classes();
    uint64_t total = 0;
    for (size_t c = 0; c < ct.count(); ++c) {
      total += ct.size[c];
      CHECK(G->order() % ct.size[c] == 0);
      CHECK(ct.size[c] * G->rep_centralizer(static_cast<uint32_t>(c)).size() == G->order());
    }
    CHECK(total == G->order());
    for (uint32_t x = 0; x < G->order(); ++x) CHECK(G->conj(ct.rep[ct.class_of[x]], ct.tau[x]) == x);
  }
}

TEST_CASE("serial and parallel classes agree") {
  auto G = sym(6);
  auto a = compute_classes(G, false);
  auto b = compute_classes(G, true);
  CHECK(a.class_of == b.class_of);
  CHECK(a.rep == b.rep);
  CHECK(a.tau == b.tau);
}

TEST_CASE("subgroup lattice matches brute force") {
  CHECK(subgroups_up_to_conjugacy(sym(3)).size() == 4);
  CHECK(subgroups_up_to_conjugacy(alt(4)).size() == 5);
  CHECK(subgroups_up_to_conjugacy(alt(5)).size() == 9);
  CHECK(subgroups_up_to_conjugacy(sym(4)).size() == 11);
  for (auto *mk : {+[] { return sym(4); }, +[] { return alt(5); }, +[] { return psl27(); }}) {
    auto G = mk();
    auto lat = subgroups_up_to_conjugacy(G);
    CHECK(lat.size() == classes_of_subgroups(G));
    for (const auto &S : lat) CHECK(is_subgroup_set(G, S.elems));
  }
  CHECK(subgroups_up_to_conjugacy(psl27()).size() == 15);
}

TEST_CASE("normalizers, centralizers, conjugacy") {
  auto G = psl27();
  CHECK(G.order() == 168);
  auto P = subgroup_of(G, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}})});
  CHECK(normalizer(G, P).order() == 21);
  CHECK(spectrum(G) == std::set<uint64_t>{1, 2, 3, 4, 7});

  auto S4 = sym(4);
  auto V = subgroup_of(S4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(normalizer(S4, V).order() == 24);
  auto T1 = subgroup_of(S4, {cyc(4, {{0, 1}})});
  auto T2 = subgroup_of(S4, {cyc(4, {{2, 3}})});
  auto T3 = subgroup_of(S4, {cyc(4, {{0, 1}, {2, 3}})});
  auto g = conjugating_element(S4, T1, T2);
  REQUIRE(g);
  CHECK(conjugate(S4, T1, *g).elems == T2.elems);
  CHECK_FALSE(conjugating_element(S4, T1, T3));
  CHECK(conjugate_into(S4, T3, V));
  CHECK_FALSE(conjugate_into(S4, T1, V));
  CHECK(centralizer(S4, S4.index_of(cyc(4, {{0, 1}}))).order() == 4);
}

TEST_CASE("closure honours the allowed set and cap") {
  auto G = sym(4);
  Bitset allowed(G.order());
  auto A4 = subgroup_of(G, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  for (auto x : A4.elems) allowed.set(x);
  CHECK(closure(G, {G.index_of(cyc(4, {{0, 1, 2}}))}, &allowed));
  CHECK_FALSE(closure(G, {G.index_of(cyc(4, {{0, 1}}))}, &allowed));
  CHECK_FALSE(closure(G, G.generator_indices(), nullptr, 10));
}

TEST_CASE("coset actions and fixed-point ratios") {
  auto G = alt(5);
  auto H = subgroup_of(G, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}, {3, 4}})});
  CHECK(H.order() == 6);
  auto A = coset_action(G, H);
  CHECK(A.index() == 10);
  A.image.enumerate();
  CHECK(A.image.order() == 60);
  auto v = ActionView::on_cosets(G, A);
  for (uint32_t x = 0; x < G.order(); ++x) {
    auto st = action_stats(v, x, &H);
    CHECK(st.fpr_num * st.cls_den == st.cls_num * st.fpr_den);
  }
  // involutions fix 2 of the 10 cosets
  CHECK(minimal_degree(v) == 8);

  std::vector<Perm> Hel;
  for (auto x : H.elems) Hel.push_back(G.element(x));
  auto I = implicit_coset_action(G.generators(), Hel);
  CHECK(I.index == 10);
  std::sort(Hel.begin(), Hel.end());
  for (uint32_t x = 0; x < G.order(); ++x) CHECK(I.fixed_points(G.element(x), Hel) == A.fixed_points(G, x));
  CHECK(order_by_point_stabilizer(5, G.generators()) == 60);
  CHECK(enumerate_elements(5, G.generators()).size() == 60);
}

TEST_CASE("enumeration bound") {
  PermGroup G(9, {Perm::from_cycles(9, {{0, 1}}), Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})});
  CHECK_THROWS_AS(G.enumerate(1000), TooLargeError);
}
