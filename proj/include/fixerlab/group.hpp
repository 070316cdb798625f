#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "fixerlab/perm.hpp"

namespace fixerlab {

struct TooLargeError : PermError {
  TooLargeError(const std::string &what, uint64_t lower_bound)
      : PermError(what), order_lower_bound(lower_bound) {}
  uint64_t order_lower_bound;
};

inline constexpr uint64_t kEnumerationBound = 3'000'000;
inline constexpr uint64_t kSubgroupBound = 100'000;
inline constexpr uint32_t kNone = 0xffffffffu;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t n) : w_((n + 63) / 64, 0), n_(n) {}
  void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  size_t size() const { return n_; }

 private:
  std::vector<uint64_t> w_;
  size_t n_ = 0;
};

struct ClassTable {
  std::vector<uint32_t> class_of;  // element -> class id
  std::vector<uint32_t> rep;       // class id -> least element
  std::vector<uint64_t> size;
  std::vector<uint32_t> tau;       // element x -> g with rep^g = x
  size_t count() const { return rep.size(); }
};

// A finitely generated permutation group, optionally with its full element
// table in canonical (lexicographic) order. Element 0 is the identity.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(size_t degree, std::vector<Perm> gens);

  size_t degree() const { return n_; }
  const std::vector<Perm> &generators() const { return gens_; }

  // Breadth-first closure; throws TooLargeError beyond `bound`.
  void enumerate(uint64_t bound = kEnumerationBound, bool parallel = true);
  bool enumerated() const { return order_ > 0; }
  uint64_t order() const;

  const Point *row(uint32_t i) const { return &data_[size_t(i) * n_]; }
  Perm element(uint32_t i) const;
  uint32_t find(const Point *img) const;  // kNone if absent
  uint32_t index_of(const Perm &p) const;  // throws if absent
  bool contains(const Perm &p) const { return find(p.data()) != kNone; }

  uint32_t identity() const { return 0; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t conj(uint32_t x, uint32_t g) const;  // g^-1 x g
  uint32_t pow(uint32_t x, int64_t k) const;
  uint32_t elem_order(uint32_t x) const;
  uint32_t fixed_points(uint32_t x) const;
  std::vector<uint32_t> generator_indices() const;

  const ClassTable &classes() const;
  // x^g = y witness; nullopt when not conjugate.
  std::optional<uint32_t> conjugator(uint32_t x, uint32_t y) const;
  // Centralizer of a class representative, cached.
  const std::vector<uint32_t> &rep_centralizer(uint32_t cls) const;

 private:
  void build_index();
  void classes_impl(bool parallel) const;

  size_t n_ = 0;
  std::vector<Perm> gens_;
  uint64_t order_ = 0;
  std::vector<Point> data_;
  std::vector<uint32_t> slots_;
  size_t mask_ = 0;
  mutable std::vector<uint32_t> inv_;
  mutable std::vector<uint8_t> ord_;  // 0 = unknown, else order if < 255
  mutable std::unique_ptr<std::once_flag> inv_once_ = std::make_unique<std::once_flag>();
  mutable std::unique_ptr<std::once_flag> cls_once_ = std::make_unique<std::once_flag>();
  mutable ClassTable cls_;
  mutable std::unique_ptr<std::mutex> cent_mu_ = std::make_unique<std::mutex>();
  mutable std::vector<std::shared_ptr<std::vector<uint32_t>>> cent_;

};

// Class computation with and without worker threads (identical output).
ClassTable compute_classes(const PermGroup &G, bool parallel);

// Subgroup of an enumerated group, as sorted element indices.
struct Subgroup {
  std::vector<uint32_t> elems;
  std::vector<uint32_t> gens;
  uint64_t order() const { return elems.size(); }
  bool contains(uint32_t x) const;
  Bitset bits(size_t group_order) const;
};

// Dimino closure of <gens> inside G. If `allowed` is given, the closure aborts
// (returns nullopt) as soon as an element outside it appears; likewise when
// the size exceeds `cap`.
std::optional<Subgroup> closure(const PermGroup &G, std::vector<uint32_t> gens,
                                const Bitset *allowed = nullptr, uint64_t cap = UINT64_MAX);
std::optional<Subgroup> join(const PermGroup &G, const Subgroup &S, uint32_t x,
                             const Bitset *allowed = nullptr, uint64_t cap = UINT64_MAX);
Subgroup subgroup_of(const PermGroup &G, const std::vector<Perm> &gens);
Subgroup whole_group(const PermGroup &G);
bool is_subgroup_set(const PermGroup &G, const std::vector<uint32_t> &elems);
std::vector<uint32_t> small_generating_set(const PermGroup &G, const Subgroup &S);
// Wraps a known subgroup element set (not checked) and picks generators.
Subgroup subgroup_from_elements(const PermGroup &G, std::vector<uint32_t> elems);

Subgroup centralizer(const PermGroup &G, uint32_t x);
Subgroup normalizer(const PermGroup &G, const Subgroup &S);
// g with S^g = T, if any.
std::optional<uint32_t> conjugating_element(const PermGroup &G, const Subgroup &S, const Subgroup &T);
// g with K^g <= L, if any.
std::optional<uint32_t> conjugate_into(const PermGroup &G, const Subgroup &K, const Subgroup &L);
Subgroup conjugate(const PermGroup &G, const Subgroup &S, uint32_t g);
// Per-class element counts of S.
std::vector<uint32_t> class_histogram(const PermGroup &G, const Subgroup &S);

std::set<uint64_t> spectrum(const PermGroup &G);
std::set<uint64_t> spectrum(const PermGroup &G, const Subgroup &S);
std::set<uint64_t> prime_set(uint64_t order);

struct CosetAction {
  PermGroup image;                   // G acting on right cosets Hg
  std::vector<uint32_t> coset_of;    // element -> coset id
  std::vector<uint32_t> coset_rep;   // coset id -> least element
  uint64_t index() const { return coset_rep.size(); }
  Perm perm_of(const PermGroup &G, uint32_t x) const;
  uint32_t fixed_points(const PermGroup &G, uint32_t x) const;
};
CosetAction coset_action(const PermGroup &G, const Subgroup &H);

// Coset action built from generators only: H is given as an enumerated set of
// permutations; G need not be enumerated. Cosets are keyed by their least
// element. Returns the action generators and the index.
struct ImplicitCosetAction {
  size_t index = 0;
  std::vector<Perm> gen_images;  // images of the G generators
  std::vector<Perm> coset_reps;
  // Fixed points of an arbitrary element of G on the cosets.
  uint32_t fixed_points(const Perm &x, const std::vector<Perm> &H_elems_sorted) const;
};
ImplicitCosetAction implicit_coset_action(const std::vector<Perm> &gens, const std::vector<Perm> &H_elems,
                                          uint64_t max_index = 100000);
// All elements of <gens> (no index); for subgroups of non-enumerated groups.
std::vector<Perm> enumerate_elements(size_t degree, const std::vector<Perm> &gens,
                                     uint64_t bound = kEnumerationBound);
// |G| via one orbit-stabilizer step (Schreier generators of a point
// stabilizer, enumerated). Used for groups just beyond the enumeration bound.
uint64_t order_by_point_stabilizer(size_t degree, const std::vector<Perm> &gens, uint64_t bound = kEnumerationBound);

// Base and strong generating set (deterministic Schreier-Sims). Order and
// membership without enumerating the group.
class StabChain {
 public:
  StabChain(size_t degree, const std::vector<Perm> &gens);
  uint64_t order() const;
  bool contains(const Perm &g) const;
  const std::vector<Point> &base() const { return base_; }

 private:
  struct Level {
    std::vector<Perm> gens;                  // added at this level
    std::vector<int32_t> trans;              // point -> index into reps, -1 outside the orbit
    std::vector<Perm> reps;                  // reps[k] maps the base point to orbit[k]
    std::vector<Point> orbit;
  };
  // (residue, level where sifting stopped)
  std::pair<Perm, size_t> sift(Perm g, size_t from) const;
  void rebuild_orbit(size_t i);
  size_t n_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

// Fixed-point counts for a chosen action of an enumerated group.
struct ActionView {
  const PermGroup *group = nullptr;
  uint64_t points = 0;
  std::function<uint32_t(uint32_t)> fix;
  static ActionView natural(const PermGroup &G);
  static ActionView on_cosets(const PermGroup &G, const CosetAction &A);
};

struct ActionStat {
  uint32_t fixed = 0;
  uint64_t fpr_num = 0, fpr_den = 1;  // direct count / |points|
  uint64_t cls_num = 0, cls_den = 1;  // |x^G cap H| / |x^G|
};
// The class formula needs the point stabilizer H of a transitive action.
ActionStat action_stats(const ActionView &v, uint32_t x, const Subgroup *stabilizer = nullptr);
uint64_t minimal_degree(const ActionView &v);

struct LatticeOptions {
  uint64_t min_order = 1;
  uint64_t bound = kSubgroupBound;
  const Bitset *allowed = nullptr;  // restrict to subgroups inside this set
  bool parallel = true;
};
// Conjugacy class representatives of subgroups, ordered by (order, elements).
std::vector<Subgroup> subgroups_up_to_conjugacy(const PermGroup &G, const LatticeOptions &opt = {});

}  // namespace fixerlab
