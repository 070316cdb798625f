#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixerlab/ffield.hpp"

namespace fixerlab {

// (a, lambda) phi^i in AGammaL_1(q); field elements as codes.
struct GammaElem {
  uint32_t a = 0;
  uint32_t lam = 1;
  uint32_t i = 0;
  bool operator==(const GammaElem &o) const { return a == o.a && lam == o.lam && i == o.i; }
  bool operator!=(const GammaElem &o) const { return !(*this == o); }
  bool operator<(const GammaElem &o) const {
    return i != o.i ? i < o.i : lam != o.lam ? lam < o.lam : a < o.a;
  }
};

struct GammaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (a,l)phi^i (b,m)phi^j = (a + l^-1 b^(phi^-i), l m^(phi^-i)) phi^(i+j)
class Gamma {
 public:
  explicit Gamma(FieldPtr F);

  const FieldCtx &field() const { return *F_; }
  FieldPtr field_ptr() const { return F_; }
  uint32_t q() const { return F_->q(); }
  uint32_t f() const { return F_->f(); }
  uint64_t size() const { return uint64_t(q()) * (q() - 1) * f(); }

  GammaElem make(uint32_t a, uint32_t lam, int64_t i = 0) const;
  GammaElem identity() const { return {0, 1, 0}; }
  GammaElem mul(const GammaElem &x, const GammaElem &y) const;
  GammaElem inv(const GammaElem &x) const;
  GammaElem pow(const GammaElem &x, int64_t k) const;
  GammaElem conj(const GammaElem &x, const GammaElem &g) const;  // g^-1 x g
  uint64_t order(const GammaElem &x) const;
  // |phi^i| and the fixed field exponent f/s
  uint32_t frob_order(uint32_t i) const;

  // Dense index in [0, size()) and back.
  uint32_t index(const GammaElem &x) const;
  GammaElem element(uint32_t idx) const;

  std::string str(const GammaElem &x) const;

 private:
  FieldPtr F_;
};

// Conjugacy classes of Gamma by orbit search over generators.
struct GammaClasses {
  std::vector<uint32_t> class_of;  // by Gamma::index
  uint32_t count = 0;
  // conj[x] = some g with rep^g = x
  std::vector<uint32_t> tau;
  std::vector<uint32_t> rep;
};
GammaClasses gamma_classes(const Gamma &G, uint64_t bound = 1'000'000);

// (a,1)phi ~ (b,1)phi iff their absolute traces are both zero or both nonzero.
bool conj_shirt(const Gamma &G, uint32_t a, uint32_t b);

// Conjugacy of (a,1)phi^i and (b,1)phi^i by trace to the fixed field q1 of phi^i:
// equal traces give a translation, nonzero traces a translation times F_q1^x
// scaling, and one zero trace forces different orders.
enum class TraceCase { Equal, BothNonzero, OneZero };
struct L33Result {
  TraceCase mode;
  std::optional<GammaElem> conjugator;  // (a,1)phi^i ^ g = (b,1)phi^i
  uint64_t order_a = 0, order_b = 0;
};
TraceCase trace_case(const Gamma &G, uint32_t a, uint32_t b, uint32_t i);
// Throws GammaError when the requested case's trace hypothesis fails.
L33Result conj_l33(const Gamma &G, uint32_t a, uint32_t b, uint32_t i, TraceCase mode);
// Picks the applicable case.
L33Result conj_l33(const Gamma &G, uint32_t a, uint32_t b, uint32_t i);

// Subfield reduction: b in GF(q0) and g in F_q^+:F_q^x with ((a,1)phi^i)^g = (b,1)phi^i.
// f0 is the degree of GF(q0); f/f0 must be prime.
struct SubfieldReduction {
  uint32_t b;
  GammaElem conjugator;
};
SubfieldReduction subfield_reduce(const Gamma &G, uint32_t a, uint32_t i, uint32_t f0);

// Torus reduction: for x with <x> cap F_q^+ = 1, returns c such that x^(c,1) lies in
// F_q^x:<phi>. The translation subgroup lies in every admissible X, so the
// conjugator is in X.
GammaElem reduce_to_torus(const Gamma &G, const GammaElem &x);
// <x> cap F_q^+ = 1
bool meets_translations_trivially(const Gamma &G, const GammaElem &x);

// Solve the GF(p)-linear equation T(c) = target over GF(q); nullopt when
// target is outside the image.
std::optional<uint32_t> solve_additive(const FieldCtx &F, const std::function<uint32_t(uint32_t)> &T,
                                       uint32_t target);

}  // namespace fixerlab
