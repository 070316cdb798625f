#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fixerlab {

// Invariant suites with brute-force oracles; each counts checks and failures.
struct PropertyResult {
  std::string name;
  uint64_t checked = 0;
  uint64_t failed = 0;
  std::string first_failure;
  explicit PropertyResult(std::string n) : name(std::move(n)) {}
  bool ok() const { return failed == 0 && checked > 0; }
  void check(bool good, const std::string &what) {
    ++checked;
    if (!good && !failed++) first_failure = what;
  }
};

// sum of class sizes, sizes times centralizers, conjugator witnesses
PropertyResult class_equation_suite();
// transitive actions of degree > 1 have derangements; fixer test vs definition
PropertyResult jordan_suite();
// every prefilter rejection is a non-fixer
PropertyResult prefilter_suite();
// S_a wr S_b cycle types against enumeration, ab <= 8
PropertyResult wreath_suite();
// S_n-types splitting in A_n against A_n classes, n <= 9
PropertyResult split_rule_suite();
// relative traces onto every subfield and the image of a maximal subfield, q <= 729
PropertyResult trace_suite();
// report bytes under 1, 2 and 4 threads and a repeated run
PropertyResult determinism_suite();

std::vector<PropertyResult> all_property_suites();

}  // namespace fixerlab
