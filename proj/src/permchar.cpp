#include "fixerlab/permchar.hpp"

#include <numeric>

namespace fixerlab {

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  uint64_t sets;
  explicit UnionFind(size_t n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --sets;
    }
  }
};

}  // namespace

ClassFunction trivial_character(const PermGroup &G) {
  return {&G, std::vector<Rational>(G.classes().count(), Rational(1))};
}

ClassFunction perm_character(const ActionView &v) {
  const auto &cls = v.group->classes();
  ClassFunction f{v.group, std::vector<Rational>(cls.count())};
#pragma omp parallel for schedule(dynamic)
  for (size_t c = 0; c < cls.count(); ++c) f.values[c] = v.fix(cls.rep[c]);
  return f;
}

ClassFunction perm_character(const PermGroup &G, const Subgroup &H) {
  const auto &cls = G.classes();
  auto hist = class_histogram(G, H);
  ClassFunction f{&G, std::vector<Rational>(cls.count())};
  for (size_t c = 0; c < cls.count(); ++c) {
    Rational v(boost::multiprecision::cpp_int(G.order()) * hist[c],
               boost::multiprecision::cpp_int(cls.size[c]) * H.order());
    if (denominator(v) != 1) throw PermcharError("perm_character: non-integral value, H is not a subgroup");
    f.values[c] = v;
  }
  return f;
}

Rational inner_product(const ClassFunction &a, const ClassFunction &b) {
  if (!a.group || a.group != b.group || a.values.size() != b.values.size())
    throw PermcharError("inner_product: class functions on different class tables");
  const auto &cls = a.group->classes();
  Rational s = 0;
  for (size_t c = 0; c < cls.count(); ++c) s += Rational(cls.size[c]) * a.values[c] * b.values[c];
  return s / Rational(a.group->order());
}

uint64_t count_orbits(size_t n, const std::vector<Perm> &gens) {
  UnionFind uf(n);
  for (const auto &g : gens)
    for (size_t i = 0; i < n; ++i) uf.unite(uint32_t(i), g[i]);
  return uf.sets;
}

uint64_t count_pair_orbits(size_t n, const std::vector<Perm> &gens) {
  UnionFind uf(n * n);
  for (const auto &g : gens)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) uf.unite(uint32_t(i * n + j), uint32_t(size_t(g[i]) * n + g[j]));
  return uf.sets;
}

std::string verdict_name(SpigaVerdict v) {
  switch (v) {
    case SpigaVerdict::character_difference: return "character-difference";
    case SpigaVerdict::equal: return "equal";
    default: return "fail";
  }
}

SpigaCertificate spiga_certificate(const PermGroup &G, const Subgroup &H, const Subgroup &K, uint64_t direct_limit) {
  SpigaCertificate C;
  C.omega = G.order() / H.order();
  C.delta = G.order() / K.order();

  // D(G,X) is the complement of the classes X meets.
  auto hH = class_histogram(G, H), hK = class_histogram(G, K);
  C.derangements_equal = true;
  for (size_t c = 0; c < hH.size(); ++c)
    if ((hH[c] > 0) != (hK[c] > 0)) {
      C.derangements_equal = false;
      C.witness = G.classes().rep[c];
      break;
    }
  if (!C.derangements_equal) {
    C.reason = "derangement sets differ";
    return C;
  }

  auto pO = perm_character(G, H), pD = perm_character(G, K), one = trivial_character(G);
  C.dd = inner_product(pD, pD);
  C.od = inner_product(pO, pD);
  C.o1 = inner_product(pO, one);

  if (C.omega <= direct_limit && C.delta <= direct_limit) {
    auto AO = coset_action(G, H), AD = coset_action(G, K);
    std::vector<Perm> gO, gD, hD;
    for (auto g : G.generator_indices()) {
      gO.push_back(AO.perm_of(G, g));
      gD.push_back(AD.perm_of(G, g));
    }
    auto hgens = H.gens.empty() ? small_generating_set(G, H) : H.gens;
    for (auto h : hgens) hD.push_back(AD.perm_of(G, h));
    C.g_orbits_omega = count_orbits(C.omega, gO);
    C.h_orbits_delta = count_orbits(C.delta, hD);
    if (C.delta <= 2048) C.g_pair_orbits_delta = count_pair_orbits(C.delta, gD);
    C.burnside_consistent = C.o1 == Rational(C.g_orbits_omega) && C.od == Rational(C.h_orbits_delta) &&
                            (C.g_pair_orbits_delta == 0 || C.dd == Rational(C.g_pair_orbits_delta));
  }

  if (pO == pD) {
    C.verdict = SpigaVerdict::equal;
    C.reason = "permutation characters coincide";
  } else if (C.dd == 2 && C.od == 2 && C.o1 == 1) {
    // pi_D = 1 + chi with chi irreducible, and both constituents occur in pi_O
    C.verdict = SpigaVerdict::character_difference;
    C.reason = "pi_Delta = 1 + chi, both constituents in pi_Omega";
  } else {
    C.reason = "inner products do not certify the difference";
  }
  return C;
}

}  // namespace fixerlab
