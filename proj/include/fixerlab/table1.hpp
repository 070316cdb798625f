#pragma once

#include <string>
#include <vector>

#include "fixerlab/fixer.hpp"
#include "fixerlab/psl2.hpp"

namespace fixerlab {

// A row of the classification of maximal non-stable fixers for socle PSL2(q)
// whose conditions hold for the given (G, type of H).
struct Table1Row {
  MaxType h_type = MaxType::Unknown;
  std::string l0;         // structure of L cap G0
  uint64_t l0_order = 0;
  std::string condition;  // the condition that fired
  bool correction = false;  // not in the published table; see table1_rows
};
std::vector<Table1Row> table1_rows(const PSL2 &L, const GroupSpec &spec, MaxType t, uint32_t q0 = 0);

// Invariants of one conjugacy class of subgroups, enough to tell the classes
// found here apart.
struct FixerClassSummary {
  uint64_t order = 0;
  uint64_t socle_order = 0;  // |K cap G0|
  bool maximal = false;      // among large fixers
  std::vector<uint64_t> order_histogram;  // (element order, count) flattened
  bool operator==(const FixerClassSummary &) const = default;
  auto operator<=>(const FixerClassSummary &) const = default;
};

struct Table1Case {
  std::string group;
  uint64_t group_order = 0;
  MaxType h_type = MaxType::Unknown;
  uint32_t q0 = 0;
  uint64_t h_order = 0;
  std::vector<FixerClassSummary> large;  // |K| >= |H|, sorted
  std::vector<uint64_t> maximal_l0;      // |K cap G0| over maximal large fixers, sorted, deduplicated
  std::vector<Table1Row> predicted;
  bool predicate_ok = false;             // maximal_l0 equals the predicted L0 orders
  RhoResult rho;                         // rho0: best K is H or the largest large fixer
};

// Every primitive action of every G with socle PSL2(q): H runs over the
// core-free maximal subgroups found by the exhaustive lattice.
std::vector<Table1Case> table1_cases(uint32_t q, bool parallel = true);

// Targeted scope: H runs over the named constructions (P1, GL1(q) wr S2,
// GL1(q^2), subfield, A4/S4/A5 normalisers) that are maximal in G, up to
// conjugacy; rho0 is exact, from the lattice inside the fixer set.
struct RhoCase {
  std::string group;
  uint64_t group_order = 0;
  MaxType h_type = MaxType::Unknown;
  uint32_t q0 = 0;
  uint64_t h_order = 0;
  RhoResult rho;
};
std::vector<RhoCase> rho_cases(uint32_t q, bool parallel = true);

FixerClassSummary summarize(const PermGroup &G, const Subgroup &K, const Subgroup &socle_part, bool maximal);

}  // namespace fixerlab
