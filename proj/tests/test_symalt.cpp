#include <doctest.h>

#include <map>

#include "fixerlab/fixer.hpp"
#include "fixerlab/symalt.hpp"

using namespace fixerlab;

namespace {

std::set<CycleType> types_brute(uint32_t n, const std::vector<Perm> &gens) {
  PermGroup G(n, gens);
  G.enumerate();
  std::set<CycleType> out;
  for (uint32_t i = 0; i < G.order(); ++i) out.insert(G.element(i).cycle_type());
  return out;
}

PermGroup full(uint32_t n, SymOrAlt g) {
  PermGroup G(n, descriptor_generators(n, g, SubgroupDesc::intransitive(n - 1)));
  // S_{n-1} fixes a point; add an n-cycle (or a 3-cycle for Alt)
  std::vector<Perm> gens = G.generators();
  std::vector<Point> c(n);
  for (uint32_t i = 0; i < n; ++i) c[i] = Point(i);
  if (g == SymOrAlt::Sym) gens.push_back(Perm::from_cycles(n, {c}));
  else gens.push_back(Perm::from_cycles(n, {{0, 1, Point(n - 1)}}));
  PermGroup X(n, gens);
  X.enumerate();
  return X;
}

}  // namespace

TEST_CASE("symalt: partitions and class sizes") {
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(10).size() == 42);
  for (uint32_t n = 1; n <= 9; ++n) {
    BigInt total = 0;
    for (const auto &t : partitions(n)) total += sym_class_size(t);
    CHECK(total == factorial(n));
  }
  CHECK(type_str({3, 1, 1}) == "[3,1^2]");
  CHECK(is_even({3, 1, 1}));
  CHECK_FALSE(is_even({2, 1}));
}

TEST_CASE("symalt: wreath cycle types equal the element scan") {
  for (uint32_t a = 1; a <= 8; ++a)
    for (uint32_t b = 1; a * b <= 8; ++b) {
      if (a == 1 || b == 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      const uint32_t n = a * b;
      CHECK(wreath_cycle_types(a, b) ==
            types_brute(n, descriptor_generators(n, SymOrAlt::Sym, SubgroupDesc::imprimitive(a, b))));
    }
  for (auto [a, b] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 3}, {2, 4}, {4, 2}, {5, 2}}) {
    const uint32_t n = a * b;
    CHECK(wreath_cycle_types(a, b) ==
          types_brute(n, descriptor_generators(n, SymOrAlt::Sym, SubgroupDesc::imprimitive(a, b))));
  }
  // (a, 1) is S_a
  for (uint32_t a = 1; a <= 6; ++a) {
    auto p = partitions(a);
    CHECK(wreath_cycle_types(a, 1) == std::set<CycleType>(p.begin(), p.end()));
  }
  CHECK(wreath_cycle_types(2, 2) == std::set<CycleType>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {4}});
  CHECK_FALSE(wreath_cycle_types(3, 2).count({5, 1}));
}

TEST_CASE("symalt: intransitive cycle types") {
  auto t1 = intransitive_cycle_types(1, 6);
  for (const auto &t : partitions(6)) CHECK(t1.count(t) == (t.back() == 1));
  auto t2 = intransitive_cycle_types(2, 5);
  CHECK(t2.count({3, 2}));
  CHECK_FALSE(t2.count({5}));
  CHECK(intransitive_cycle_types(3, 8).count({5, 3}));
}

TEST_CASE("symalt: split-class rule against A_n classes") {
  for (uint32_t n = 3; n <= 9; ++n) {
    CAPTURE(n);
    PermGroup A = full(n, SymOrAlt::Alt);
    const auto &cls = A.classes();
    // S_n-types met by each A_n-class, and the labels each class carries
    std::map<CycleType, std::set<uint32_t>> per_type;
    std::map<uint32_t, std::set<AnClassLabel>> labels;
    for (uint32_t i = 0; i < A.order(); ++i) {
      Perm x = A.element(i);
      per_type[x.cycle_type()].insert(cls.class_of[i]);
      labels[cls.class_of[i]].insert(an_class_label(x));
    }
    for (const auto &[t, ids] : per_type) {
      CAPTURE(type_str(t));
      CHECK(ids.size() == (splits_in_alt(t) ? 2u : 1u));
      if (splits_in_alt(t)) {
        // equal halves
        BigInt half = sym_class_size(t) / 2;
        for (auto c : ids) CHECK(BigInt(cls.size[c]) == half);
      }
    }
    // the label is a class invariant and tells the halves apart
    std::set<AnClassLabel> seen;
    for (const auto &[c, ls] : labels) {
      REQUIRE(ls.size() == 1);
      CHECK(seen.insert(*ls.begin()).second);
    }
  }
}

TEST_CASE("symalt: type level agrees with element level") {
  for (uint32_t n = 5; n <= 8; ++n)
    for (SymOrAlt g : {SymOrAlt::Sym, SymOrAlt::Alt}) {
      for (const auto &d : maximal_descriptors(n, g)) {
        CAPTURE(d.str(n, g));
        CHECK(class_labels(n, g, d) == class_labels_brute(n, g, d));
        PermGroup X(n, descriptor_generators(n, g, d));
        X.enumerate();
        CHECK(descriptor_order(n, g, d) == BigInt(X.order()));
      }
    }
}

TEST_CASE("symalt: containment agrees with the coset action test") {
  for (uint32_t n = 5; n <= 7; ++n)
    for (SymOrAlt g : {SymOrAlt::Sym, SymOrAlt::Alt}) {
      PermGroup G = full(n, g);
      auto descs = maximal_descriptors(n, g);
      std::vector<Subgroup> subs;
      for (const auto &d : descs) subs.push_back(subgroup_of(G, descriptor_generators(n, g, d)));
      for (size_t h = 0; h < descs.size(); ++h)
        for (size_t k = 0; k < descs.size(); ++k) {
          CAPTURE(descs[h].str(n, g));
          CAPTURE(descs[k].str(n, g));
          CHECK(sn_containment(n, g, descs[h], descs[k]).contained == derangement_containment(G, subs[h], subs[k]));
        }
    }
}

TEST_CASE("symalt: containment examples") {
  using D = SubgroupDesc;
  CHECK(sn_containment(6, SymOrAlt::Sym, D::intransitive(2), D::intransitive(2)).contained);
  // A4 is the point stabiliser of A5; S3 the stabiliser of a 2-set
  CHECK(sn_containment(5, SymOrAlt::Alt, D::intransitive(2), D::intransitive(1)).contained);
  auto r = sn_containment(8, SymOrAlt::Sym, D::imprimitive(4, 2), D::intransitive(1));
  CHECK_FALSE(r.contained);
  REQUIRE(r.witness);
  CHECK_THROWS_AS(descriptor_generators(6, SymOrAlt::Sym, D::imprimitive(4, 2)), SymAltError);
}

TEST_CASE("symalt: primitive data") {
  std::map<std::pair<uint32_t, bool>, std::vector<uint64_t>> want = {
      {{5, true}, {20}},      {{5, false}, {10}},         {{6, true}, {120}},   {{6, false}, {60}},
      {{7, true}, {42}},      {{7, false}, {168, 168}},   {{8, true}, {336}},   {{8, false}, {1344, 1344}},
      {{9, true}, {432}},     {{9, false}, {1512, 1512, 216}}, {{10, true}, {1440}}, {{10, false}, {720}}};
  for (auto &[key, orders] : want) {
    auto [n, sym] = key;
    SymOrAlt g = sym ? SymOrAlt::Sym : SymOrAlt::Alt;
    std::vector<uint64_t> got;
    for (const auto &d : maximal_descriptors(n, g))
      if (d.kind == SubgroupDesc::Kind::Explicit) {
        PermGroup X(n, d.gens);
        X.enumerate();
        got.push_back(X.order());
        // transitive, and even when inside A_n
        std::set<Point> orbit{0};
        for (uint32_t i = 0; i < X.order(); ++i) orbit.insert(X.row(i)[0]);
        CHECK(orbit.size() == n);
        if (!sym)
          for (const auto &p : d.gens) CHECK(is_even(p.cycle_type()));
      }
    CAPTURE(n);
    CHECK(got == orders);
  }
}

TEST_CASE("symalt: isomorphism test") {
  using D = SubgroupDesc;
  auto grp = [](uint32_t n, SymOrAlt g, const D &d) {
    PermGroup X(n, descriptor_generators(n, g, d));
    X.enumerate();
    return X;
  };
  auto S5 = grp(6, SymOrAlt::Sym, D::intransitive(1));
  auto P = grp(6, SymOrAlt::Sym, maximal_descriptors(6, SymOrAlt::Sym).back());
  CHECK(are_isomorphic(S5, P));
  auto S4xS2 = grp(6, SymOrAlt::Sym, D::intransitive(2));
  auto W = grp(6, SymOrAlt::Sym, D::imprimitive(2, 3));
  CHECK(are_isomorphic(S4xS2, W));
  // Q8 and D8: same order, different element orders
  auto D8 = grp(4, SymOrAlt::Sym, D::imprimitive(2, 2));
  PermGroup Q8(8, {Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
  Q8.enumerate();
  REQUIRE(Q8.order() == 8);
  CHECK_FALSE(are_isomorphic(D8, Q8));
  PermGroup C2cubed(6, {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{2, 3}}), Perm::from_cycles(6, {{4, 5}})});
  C2cubed.enumerate();
  CHECK_FALSE(are_isomorphic(C2cubed, D8));
  CHECK(are_isomorphic(D8, D8));
}

TEST_CASE("symalt: alternating scan for 5 <= n <= 10") {
  auto rep = theorem_alt_scan(5, 10, true);
  CHECK(rep.disagreements == 0);
  REQUIRE(rep.hits.size() == 1);
  const auto &t = rep.hits[0];
  CHECK(t.n == 5);
  CHECK(t.g == SymOrAlt::Alt);
  CHECK(t.H.kind == SubgroupDesc::Kind::Intransitive);
  CHECK(t.H.k == 2);
  CHECK(t.K.kind == SubgroupDesc::Kind::Intransitive);
  CHECK(t.K.k == 1);
  CHECK(rep.pairs > 100);
  CHECK(rep.notes.empty());
}

TEST_CASE("symalt: type-level scan beyond brute force") {
  auto rep = theorem_alt_scan(11, 14, false);
  CHECK(rep.hits.empty());
  CHECK(rep.notes.size() == 8);  // primitive K not covered below 25
  auto r = sn_containment(30, SymOrAlt::Sym, SubgroupDesc::intransitive(14), SubgroupDesc::imprimitive(15, 2));
  CHECK_FALSE(r.contained);
}

TEST_CASE("symalt: imprimitive order bounds") {
  for (uint32_t n = 25; n <= 60; ++n) {
    CAPTURE(n);
    for (const auto &r : imprim_order_bounds(n)) {
      CHECK(r.at_least_2n);
      CHECK(r.below_two_halves);
      CHECK(r.below_three_thirds);
    }
  }
  // S13 wr S2 attains the upper bound
  auto rows = imprim_order_bounds(26);
  auto it = std::find_if(rows.begin(), rows.end(), [](auto &r) { return r.b == 2; });
  REQUIRE(it != rows.end());
  CHECK(it->order == 2 * factorial(13) * factorial(13));
}
