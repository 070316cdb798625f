#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixerlab/group.hpp"
#include "fixerlab/psl2.hpp"

namespace fixerlab {

// G acting on [G:H]. Caches which G-classes meet H.
class FixerContext {
 public:
  FixerContext(const PermGroup &G, Subgroup H);

  const PermGroup &group() const { return *G_; }
  const Subgroup &H() const { return H_; }
  // Element-level: x fixes a point of [G:H].
  bool fixes_point(uint32_t x) const { return fix_.test(x); }
  bool class_meets_H(uint32_t cls) const { return hcls_[cls] != 0; }
  // Union of the G-classes meeting H.
  const Bitset &fixer_set() const { return fix_; }
  uint64_t degree() const { return G_->order() / H_.order(); }

 private:
  const PermGroup *G_;
  Subgroup H_;
  std::vector<char> hcls_;
  Bitset fix_;
};

struct FixerVerdict {
  bool is_fixer = false;
  std::optional<uint32_t> witness;        // element of K with x^G cap H empty
  std::optional<uint32_t> witness_class;
  bool is_stable = false;
  std::optional<uint32_t> conjugator;     // K^g <= H
  bool is_large = false;                  // non-stable fixer with |K| >= |H|
  bool is_strictly_large = false;         // ... and |K| > |H|
};
FixerVerdict is_fixer(const FixerContext &C, const Subgroup &K, bool decide_stability = true);

// G-classes consisting of derangements on [G:H].
std::vector<uint32_t> derangement_set(const PermGroup &G, const Subgroup &H);
// D(G,H) subset of D(G,K), i.e. K is a fixer on [G:H].
bool derangement_containment(const PermGroup &G, const Subgroup &H, const Subgroup &K);

struct PrefilterResult {
  bool reject = false;
  std::string reason;  // "spectrum", "primes", "transitive", "fpr"
};
// Necessary conditions only; a rejection proves K is not a fixer. `aux` is an
// optional second action of G used for the fixed-point-ratio test.
PrefilterResult prefilter(const FixerContext &C, const Subgroup &K, const ActionView *aux = nullptr);

// ---- rho invariants, exact integers ----

struct RhoResult {
  uint64_t best_order = 0;  // |K_best|
  std::string achieved_by;
  unsigned __int128 lhs = 0;  // 2 |K|^2
  unsigned __int128 rhs = 0;  // |G| |H|
  bool below_inverse_sqrt2 = false;  // lhs < rhs
  double value = 0;  // |K| / (|H| sqrt|Omega|), for display only
};
RhoResult make_rho(uint64_t K, uint64_t H, uint64_t G, std::string by = {});
// sign of den*|K|^2 - num*|H|^2*|Omega|: compares rho with sqrt(num/den)
int compare_rho(uint64_t K, uint64_t H, uint64_t Omega, uint64_t num, uint64_t den);
std::string to_string_u128(unsigned __int128 v);

// Exhaustive: all fixers via the subgroup lattice restricted to the fixer set.
// The restriction keeps the lattice small, so |G| may exceed kSubgroupBound.
RhoResult rho0(const FixerContext &C, bool parallel = true, uint64_t bound = kEnumerationBound);
// Over a supplied list of candidate subgroups (targeted scope).
RhoResult rho0_candidates(const FixerContext &C, const std::vector<std::pair<std::string, Subgroup>> &cands);
// Maximal subgroups of G that are fixers.
RhoResult rho1(const FixerContext &C, const std::vector<Subgroup> &maximals);
// H < G maximal: <H, g> = G for one g per nontrivial (H,H) double coset.
bool is_maximal(const PermGroup &G, const Subgroup &H);
// Maximal subgroups of an enumerated group, up to conjugacy (full lattice).
std::vector<Subgroup> maximal_subgroups(const PermGroup &G, bool parallel = true);

// ---- large fixers ----

struct LargeFixer {
  Subgroup K;
  bool maximal = false;  // not conjugate into a larger large fixer
};
// Non-stable fixers of order >= min_order up to conjugacy; `maximal` is relative
// to this list.
std::vector<LargeFixer> classify_non_stable_fixers(const FixerContext &C, uint64_t min_order, bool parallel = true);
inline std::vector<LargeFixer> classify_large_fixers(const FixerContext &C, bool parallel = true) {
  return classify_non_stable_fixers(C, C.H().order(), parallel);
}

struct EkrVerdict {
  bool weak_ekr = true;         // no strictly large fixer
  bool strict_weak_ekr = true;  // no large fixer
};
EkrVerdict ekr_predicates(const std::vector<LargeFixer> &large, uint64_t H_order);

// ---- constructive witnesses for affine fixer families ----

struct WitnessStep {
  std::string rule;
  SemilinearElem conjugator;
  SemilinearElem result;
};
struct WitnessChain {
  SemilinearElem start;
  std::vector<WitnessStep> steps;
  SemilinearElem total;   // start^total = image
  SemilinearElem image;
  bool verified = false;
  std::string failure;
};
// Conjugates x (an element of the family) into H = Stab_G(overgroup set),
// following the family's proof route; every step is checked by multiplication.
WitnessChain witness_chain(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r, const SemilinearElem &x);

struct FamilyWitnessReport {
  uint64_t elements = 0;
  uint64_t verified = 0;
  std::vector<std::string> failures;  // first few
  std::map<std::string, uint64_t> routes;  // rule sequence -> count
};
FamilyWitnessReport verify_family(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r = 0,
                                  bool parallel = true);

}  // namespace fixerlab
