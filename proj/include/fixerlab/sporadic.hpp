#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixerlab/groupio.hpp"

namespace fixerlab {

// (G, H, K) with subgroups named as in the registry ("M11/GL2(3)").
struct SporadicRow {
  std::string group, H, K;
  bool expected = false;    // containment D(G,H) in D(G,K) claimed
  bool published = false;   // listed in the table of sporadic large fixers
  std::string note;
  std::string str() const { return group + ":" + H + ":" + K; }
};

// Positive rows followed by one negative control per group.
const std::vector<SporadicRow> &sporadic_rows();
// "M11:GL2(3):M9.2" style; subgroup tokens match names or file stems.
std::optional<SporadicRow> find_sporadic_row(const Registry &R, const std::string &spec);

struct ImplicitContainment {
  bool contained = false;
  uint64_t index = 0;             // |G:H|
  uint64_t k_classes = 0;         // classes of K checked
  std::optional<Perm> witness;    // element of K fixing no coset of H
};
// K is a fixer on [G:H] iff every element of K fixes a right coset of H.
// G is given by generators only; H and K are enumerated.
ImplicitContainment implicit_containment(const std::vector<Perm> &G_gens, const std::vector<Perm> &H_gens,
                                         const std::vector<Perm> &K_gens);

struct SporadicResult {
  SporadicRow row;
  bool contained = false;
  uint64_t g_order = 0, h_order = 0, k_order = 0, index = 0;
  std::optional<Perm> witness;
  bool matches() const { return contained == row.expected; }
};
SporadicResult check_sporadic_row(const Registry &R, const SporadicRow &row);

}  // namespace fixerlab
