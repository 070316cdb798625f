#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "fixerlab/ffield.hpp"
#include "fixerlab/gamma.hpp"
#include "fixerlab/group.hpp"

namespace fixerlab {

struct Psl2Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row vectors; x -> (x^(phi^frob)) * m. Matrix scaled so its first nonzero
// entry (row-major) is 1.
struct SemilinearElem {
  std::array<uint32_t, 4> m{1, 0, 0, 1};
  uint32_t frob = 0;
  bool operator==(const SemilinearElem &o) const { return m == o.m && frob == o.frob; }
  bool operator!=(const SemilinearElem &o) const { return !(*this == o); }
  bool operator<(const SemilinearElem &o) const { return frob != o.frob ? frob < o.frob : m < o.m; }
};

// delta^e phi^k modulo PSL2(q); e in {0,1} (always 0 for even q), k mod f.
struct OuterElem {
  uint32_t e = 0, k = 0;
  bool operator==(const OuterElem &o) const { return e == o.e && k == o.k; }
  bool operator<(const OuterElem &o) const { return e != o.e ? e < o.e : k < o.k; }
};

// G = PSL2(q).O with O <= Out = <delta> x <phi>, given by generators.
struct GroupSpec {
  uint32_t q = 0;
  std::vector<OuterElem> outer;
  std::string label() const;
};

class PSL2 {
 public:
  explicit PSL2(uint32_t q);
  static std::shared_ptr<const PSL2> get(uint32_t q);

  const FieldCtx &F() const { return *F_; }
  FieldPtr field() const { return F_; }
  uint32_t q() const { return F_->q(); }
  uint32_t p() const { return F_->p(); }
  uint32_t f() const { return F_->f(); }
  size_t degree() const { return q() + 1; }
  Point infinity() const { return Point(q()); }
  // (2, q-1)
  uint32_t d() const { return p() == 2 ? 1 : 2; }
  uint64_t socle_order() const { return uint64_t(q()) * (uint64_t(q()) * q() - 1) / d(); }

  SemilinearElem make(uint32_t a, uint32_t b, uint32_t c, uint32_t dd, int64_t frob = 0) const;
  SemilinearElem identity() const { return {}; }
  SemilinearElem mul(const SemilinearElem &x, const SemilinearElem &y) const;
  SemilinearElem inv(const SemilinearElem &x) const;
  SemilinearElem pow(const SemilinearElem &x, int64_t k) const;
  SemilinearElem conj(const SemilinearElem &x, const SemilinearElem &g) const;  // g^-1 x g
  uint64_t order(const SemilinearElem &x) const { return perm(x).order(); }

  Point apply(const SemilinearElem &x, Point pt) const;
  Perm perm(const SemilinearElem &x) const;
  SemilinearElem from_perm(const Perm &g) const;  // throws if not in PGammaL2(q)

  SemilinearElem u(uint32_t a) const { return make(1, a, 0, 1); }
  SemilinearElem diag(uint32_t l, uint32_t m) const { return make(l, 0, 0, m); }
  SemilinearElem phi(int64_t k = 1) const { return make(1, 0, 0, 1, k); }
  SemilinearElem delta() const { return diag(F_->primitive().code(), 1); }
  SemilinearElem z() const { return make(0, 1, 1, 0); }
  SemilinearElem w() const { return make(0, 1, F_->neg(1), 0); }

  OuterElem outer_part(const SemilinearElem &x) const;
  SemilinearElem outer_rep(const OuterElem &o) const;
  // All elements of O (closure of the spec generators in Out).
  std::vector<OuterElem> outer_group(const GroupSpec &spec) const;
  bool in_group(const SemilinearElem &x, const GroupSpec &spec) const;
  bool in_socle(const SemilinearElem &x) const { return outer_part(x) == OuterElem{}; }

  std::vector<SemilinearElem> socle_generators() const;
  std::vector<SemilinearElem> group_generators(const GroupSpec &spec) const;
  std::vector<Perm> perms(const std::vector<SemilinearElem> &xs) const;
  uint64_t group_order(const GroupSpec &spec) const { return socle_order() * outer_group(spec).size(); }

  // The affine group Gamma and the isomorphism from N(Q) = stabiliser of point 0.
  const Gamma &gamma() const { return *gamma_; }
  bool normalizes_Q(const SemilinearElem &x) const { return x.m[2] == 0; }
  GammaElem rho(const SemilinearElem &x) const;
  SemilinearElem rho_inv(const GammaElem &g) const;

  // Points of the projective line over the subfield of degree f0 (a Baer
  // subline when f = 2 f0).
  std::vector<Point> subline(uint32_t f0) const;
  // The norm-one circle {x : x^(q0+1) = 1} for q = q0^2: a subline stable under
  // the order q0+1 subgroup of D, z and phi.
  std::vector<Point> unit_circle() const;
  bool stabilizes(const SemilinearElem &x, const std::vector<Point> &sorted_set) const;

  std::string str(const SemilinearElem &x) const;

 private:
  FieldPtr F_;
  std::unique_ptr<Gamma> gamma_;
  SemilinearElem canon(std::array<uint32_t, 4> m, int64_t frob) const;
};

using Psl2Ptr = std::shared_ptr<const PSL2>;

// Every G with PSL2(q) <= G <= PGammaL2(q), one per subgroup of Out.
std::vector<GroupSpec> all_group_specs(uint32_t q);
GroupSpec socle_spec(uint32_t q);
GroupSpec pgl_spec(uint32_t q);
GroupSpec pgammal_spec(uint32_t q);
// G0.<phi^k>
GroupSpec field_spec(uint32_t q, uint32_t k);
bool is_pgl_contained(const PSL2 &L, const GroupSpec &spec);  // delta in O
bool is_psigmal_contained(const PSL2 &L, const GroupSpec &spec);  // O <= <phi>

// ---- subgroups given by generators (no enumeration of G needed) ----

// A subgroup U:T of N(Q) with U unipotent, T an explicit list of elements of
// D:<phi> closed under multiplication.
struct AffineFamily {
  std::string name;
  std::vector<uint32_t> unipotent;        // a-parts, sorted; a GF(p)-subspace
  std::vector<uint32_t> unipotent_basis;
  std::vector<GammaElem> complement;      // rho-images (0, l) phi^i, sorted
  uint64_t order() const { return unipotent.size() * complement.size(); }
  std::vector<SemilinearElem> generators(const PSL2 &L) const;
  // Membership for elements of N(Q).
  bool contains(const PSL2 &L, const SemilinearElem &x) const;
};

enum class FamilyKind { L_I, L_II, L_III, M, case_a, case_c, Q, P1 };
std::string family_name(FamilyKind k);
// The overgroup H that the family is measured against:
//   L_I/L_II/L_III/M: the subline over GF(q0) with q = q0^r;
//   case_a: {0, inf};  case_c: the unit circle.
// r is the subfield index for the first four kinds and ignored otherwise.
AffineFamily fixer_family(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r = 0);
std::vector<Point> family_overgroup_set(const PSL2 &L, FamilyKind kind, uint32_t r = 0);

// ---- enumerated groups ----

enum class MaxType { P1, GL1wrS2, GL1q2, GL2sub, Extraspecial, A5, Unknown };
std::string type_name(MaxType t);

struct Psl2Instance {
  Psl2Ptr L;
  GroupSpec spec;
  PermGroup G;
  Subgroup G0;
  Bitset G0bits;
  std::string label() const { return spec.label(); }
  uint32_t index_of(const SemilinearElem &x) const { return G.index_of(L->perm(x)); }
  SemilinearElem elem(uint32_t i) const { return L->from_perm(G.element(i)); }
  Subgroup socle_part(const Subgroup &K) const;
};
Psl2Instance build_instance(const GroupSpec &spec, uint64_t bound = kEnumerationBound, bool parallel = true);

Subgroup set_stabilizer(const PermGroup &G, const std::vector<Point> &sorted_set);
Subgroup realize(const Psl2Instance &I, const std::vector<SemilinearElem> &gens);

// Named maximal-type subgroups of an enumerated G.
Subgroup subgroup_Q(const Psl2Instance &I);
Subgroup subgroup_D(const Psl2Instance &I);  // D cap G
Subgroup maximal_subgroup(const Psl2Instance &I, MaxType t, uint32_t r = 0);
Subgroup subfield_subgroup(const Psl2Instance &I, uint32_t q0);
// Classes (under G) of subgroups N_G(K0) with K0 <= G0 isomorphic to A4, S4
// or A5 (order 12, 24, 60).
std::vector<Subgroup> small_overgroups(const Psl2Instance &I, uint32_t k0_order);

// Type of a maximal (core-free) subgroup; see the implementation for the tests.
MaxType identify_type(const Psl2Instance &I, const Subgroup &H, uint32_t *subfield_q0 = nullptr);

}  // namespace fixerlab
