#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fixerlab/group.hpp"

namespace fixerlab {

using Rational = boost::multiprecision::cpp_rational;

struct PermcharError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values per class of G's class table.
struct ClassFunction {
  const PermGroup *group = nullptr;
  std::vector<Rational> values;
  const Rational &operator[](uint32_t cls) const { return values[cls]; }
  bool operator==(const ClassFunction &o) const { return group == o.group && values == o.values; }
};

ClassFunction trivial_character(const PermGroup &G);
// Fixed points of each class representative under the action.
ClassFunction perm_character(const ActionView &v);
// 1_H induced to G: |C_G(x)| |x^G cap H| / |H|. Agrees with
// perm_character(ActionView::on_cosets(...)) without building the action.
ClassFunction perm_character(const PermGroup &G, const Subgroup &H);
Rational inner_product(const ClassFunction &a, const ClassFunction &b);

// Orbits of <gens> on {0..n-1}, and on ordered pairs.
uint64_t count_orbits(size_t n, const std::vector<Perm> &gens);
uint64_t count_pair_orbits(size_t n, const std::vector<Perm> &gens);

enum class SpigaVerdict { character_difference, equal, fail };
std::string verdict_name(SpigaVerdict v);

// Omega = [G:H], Delta = [G:K].
struct SpigaCertificate {
  SpigaVerdict verdict = SpigaVerdict::fail;
  std::string reason;
  bool derangements_equal = false;
  std::optional<uint32_t> witness;  // element in a class met by exactly one of H, K
  uint64_t omega = 0, delta = 0;
  Rational dd, od, o1;              // <pi_D,pi_D>, <pi_O,pi_D>, <pi_O,1>
  // Direct counts on the realized actions (0 when skipped).
  uint64_t g_orbits_omega = 0, h_orbits_delta = 0, g_pair_orbits_delta = 0;
  bool burnside_consistent = false;
};
// direct_limit: build the coset actions for the Burnside cross-checks only
// when both indices are at most this.
SpigaCertificate spiga_certificate(const PermGroup &G, const Subgroup &H, const Subgroup &K,
                                   uint64_t direct_limit = 4096);

}  // namespace fixerlab
