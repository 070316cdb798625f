#include "fixerlab/spiga.hpp"

#include <algorithm>

#include "fixerlab/ffield.hpp"

namespace fixerlab {

std::vector<char> spiga_kinds(uint32_t q) {
  auto [p, f] = prime_power(q);
  std::vector<char> out;
  if (p == 2 && q > 4) out.push_back('a');
  if (f == 1 && (p % 8 == 1 || p % 8 == 7)) out.push_back('b');
  if (f == 1 && (p % 10 == 1 || p % 10 == 9)) out.push_back('c');
  if (f == 2 && p != 3 && (p % 10 == 3 || p % 10 == 7)) out.push_back('d');
  return out;
}

Subgroup delta_conjugate(const Psl2Instance &I, const Subgroup &S) {
  Perm d = I.L->perm(I.L->delta());
  Perm di = d.inverse();
  std::vector<uint32_t> elems;
  elems.reserve(S.elems.size());
  for (auto x : S.elems) elems.push_back(I.G.index_of(di * I.G.element(x) * d));
  std::sort(elems.begin(), elems.end());
  return subgroup_from_elements(I.G, std::move(elems));
}

SpigaCase spiga_case(uint32_t q, char kind) {
  auto kinds = spiga_kinds(q);
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw Psl2Error(std::string("spiga case ") + kind + " does not apply to q = " + std::to_string(q));
  Psl2Instance I = build_instance(socle_spec(q));
  SpigaCase c;
  c.kind = kind;
  c.q = q;
  c.group = I.label();
  Subgroup H, K;
  if (kind == 'a') {
    H = maximal_subgroup(I, MaxType::GL1wrS2);
    K = maximal_subgroup(I, MaxType::P1);
    c.expected = SpigaVerdict::character_difference;
  } else {
    H = maximal_subgroup(I, kind == 'b' ? MaxType::Extraspecial : MaxType::A5);
    K = delta_conjugate(I, H);
    c.expected = SpigaVerdict::equal;
  }
  c.h_order = H.order();
  c.k_order = K.order();
  c.distinct_classes = H.order() != K.order() || !conjugating_element(I.G, H, K);
  c.cert = spiga_certificate(I.G, H, K);
  return c;
}

std::vector<SpigaCase> spiga_cases(uint32_t q_max, const std::string &kinds) {
  std::vector<SpigaCase> out;
  for (uint32_t q = 5; q <= q_max; ++q) {
    try {
      prime_power(q);
    } catch (const std::exception &) {
      continue;
    }
    for (char k : spiga_kinds(q))
      if (kinds.find(k) != std::string::npos) out.push_back(spiga_case(q, k));
  }
  return out;
}

}  // namespace fixerlab
