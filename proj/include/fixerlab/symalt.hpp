#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixerlab/group.hpp"

namespace fixerlab {

using BigInt = boost::multiprecision::cpp_int;

// Parts in descending order, summing to n.
using CycleType = std::vector<uint32_t>;

std::vector<CycleType> partitions(uint32_t n);
bool is_even(const CycleType &t);
// An S_n-class splits in A_n iff its parts are odd and pairwise distinct.
bool splits_in_alt(const CycleType &t);
BigInt sym_class_size(const CycleType &t);
BigInt factorial(uint32_t n);
std::string type_str(const CycleType &t);  // e.g. "[3,1^2]"

enum class SplitTag { none, plus, minus };

struct AnClassLabel {
  CycleType type;
  SplitTag tag = SplitTag::none;
  auto operator<=>(const AnClassLabel &) const = default;
  std::string str() const;
};
// For split types the tag is the parity of a conjugator from the canonical
// representative (cycles on consecutive points, longest first).
AnClassLabel an_class_label(const Perm &x);

// Cycle types realised by S_a wr S_b in its imprimitive action on ab points.
std::set<CycleType> wreath_cycle_types(uint32_t a, uint32_t b);
// S_k x S_{n-k}.
std::set<CycleType> intransitive_cycle_types(uint32_t k, uint32_t n);

enum class SymOrAlt { Sym, Alt };
std::string group_name(SymOrAlt g, uint32_t n);

// A subgroup of S_n or A_n. For Alt the subgroup is the intersection of the
// described subgroup of S_n with A_n; explicit generators are taken as given.
struct SubgroupDesc {
  enum class Kind { Intransitive, Imprimitive, Explicit };
  Kind kind = Kind::Explicit;
  uint32_t k = 0;     // intransitive: orbit sizes k, n-k
  uint32_t a = 0, b = 0;  // imprimitive: b blocks of size a
  std::vector<Perm> gens;
  std::string name;

  static SubgroupDesc intransitive(uint32_t k);
  static SubgroupDesc imprimitive(uint32_t a, uint32_t b);
  static SubgroupDesc explicit_gens(std::string name, std::vector<Perm> gens);
  std::string str(uint32_t n, SymOrAlt g) const;
};

struct SymAltError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators of the subgroup inside G (for Alt: of the intersection with A_n).
std::vector<Perm> descriptor_generators(uint32_t n, SymOrAlt g, const SubgroupDesc &d);
BigInt descriptor_order(uint32_t n, SymOrAlt g, const SubgroupDesc &d);

// G-class labels met by the subgroup. Type level for intransitive and
// imprimitive descriptors (these contain odd permutations, so they meet both
// halves of any split type they meet); explicit ones are enumerated.
std::set<AnClassLabel> class_labels(uint32_t n, SymOrAlt g, const SubgroupDesc &d);
// Element-level: enumerate the subgroup and label every element.
std::set<AnClassLabel> class_labels_brute(uint32_t n, SymOrAlt g, const SubgroupDesc &d);

struct ContainmentResult {
  bool contained = false;                 // D(G,H) subset of D(G,K)
  std::optional<AnClassLabel> witness;    // class meeting K but not H
};
ContainmentResult sn_containment(uint32_t n, SymOrAlt g, const SubgroupDesc &H, const SubgroupDesc &K);
ContainmentResult sn_containment_brute(uint32_t n, SymOrAlt g, const SubgroupDesc &H, const SubgroupDesc &K);

// Core-free maximal subgroups of S_n / A_n up to conjugacy: the intransitive and
// imprimitive ones for every n >= 5, plus the primitive ones for 5 <= n <= 10.
std::vector<SubgroupDesc> maximal_descriptors(uint32_t n, SymOrAlt g);
bool has_primitive_data(uint32_t n);

struct AltTriple {
  uint32_t n = 0;
  SymOrAlt g = SymOrAlt::Sym;
  SubgroupDesc H, K;
  std::string str() const;
};

struct AltScanReport {
  std::vector<AltTriple> hits;           // containment true, |K| >= |H|, K not isomorphic to H
  uint64_t pairs = 0;                    // (H,K) pairs with |K| >= |H|, K != H
  uint64_t isomorphic_skipped = 0;
  uint64_t disagreements = 0;            // type level vs element level
  std::vector<std::string> notes;
};
// H intransitive or imprimitive maximal, K any core-free maximal subgroup.
// brute: element-level labels alongside the type-level ones (needs n <= 10).
AltScanReport theorem_alt_scan(uint32_t n_lo, uint32_t n_hi, bool brute);

struct ImprimBoundRow {
  uint32_t a = 0, b = 0;
  BigInt order;           // (a!)^b b!
  bool at_least_2n = false;
  bool below_two_halves = false;   // <= 2 (ceil(n/2)!)^2
  bool below_three_thirds = true;  // <= 6 (ceil(n/3)!)^3, checked when b >= 3
};
std::vector<ImprimBoundRow> imprim_order_bounds(uint32_t n);

// Exact isomorphism test for small enumerated groups (backtracking over
// generator images).
bool are_isomorphic(const PermGroup &A, const PermGroup &B);

}  // namespace fixerlab
