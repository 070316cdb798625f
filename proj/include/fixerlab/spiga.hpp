#pragma once

#include <string>
#include <vector>

#include "fixerlab/permchar.hpp"
#include "fixerlab/psl2.hpp"

namespace fixerlab {

// Pairs (H, K) of maximal subgroups of G = PSL2(q) with D(G,H) = D(G,K):
//   a: q even, H of type GL1(q) wr S2, K of type P1;
//   b: q = p = +-1 mod 8, H of type 2^(1+2).O2-(2), K = H^delta;
//   c: q = p = +-1 mod 10, H = A5, K = H^delta;
//   d: q = p^2, 3 != p = +-3 mod 10, H = A5, K = H^delta.
struct SpigaCase {
  char kind = 'a';
  uint32_t q = 0;
  std::string group;
  uint64_t h_order = 0, k_order = 0;
  SpigaVerdict expected = SpigaVerdict::character_difference;
  bool distinct_classes = false;  // H and K not conjugate in G
  SpigaCertificate cert;
  bool ok() const { return cert.verdict == expected && cert.derangements_equal && distinct_classes; }
};

// The kinds that apply to q (none when q is not of the right shape).
std::vector<char> spiga_kinds(uint32_t q);
SpigaCase spiga_case(uint32_t q, char kind);
// Every case with q <= q_max of the given kinds.
std::vector<SpigaCase> spiga_cases(uint32_t q_max, const std::string &kinds);

// S^delta for a subgroup S of G0 (delta induces an automorphism of G0).
Subgroup delta_conjugate(const Psl2Instance &I, const Subgroup &S);

}  // namespace fixerlab
