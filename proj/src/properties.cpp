#include "fixerlab/properties.hpp"

#include <omp.h>

#include <map>
#include <numeric>
#include <set>

#include "fixerlab/fixer.hpp"
#include "fixerlab/report.hpp"
#include "fixerlab/symalt.hpp"

namespace fixerlab {

namespace {

PermGroup enumerated(uint32_t n, std::vector<Perm> gens) {
  PermGroup G(n, std::move(gens));
  G.enumerate();
  return G;
}

PermGroup full(uint32_t n, SymOrAlt g) {
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point(0));
  if (g == SymOrAlt::Sym) return enumerated(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {c})});
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return enumerated(n, gens);
}

std::set<CycleType> types_brute(uint32_t n, const std::vector<Perm> &gens) {
  PermGroup G = enumerated(n, gens);
  std::set<CycleType> out;
  for (uint32_t i = 0; i < G.order(); ++i) out.insert(G.element(i).cycle_type());
  return out;
}

bool fixer_brute(const PermGroup &G, const Subgroup &H, const Subgroup &K) {
  for (auto x : K.elems) {
    bool found = false;
    for (uint32_t g = 0; g < G.order() && !found; ++g) found = H.contains(G.conj(x, g));
    if (!found) return false;
  }
  return true;
}

}  // namespace

PropertyResult class_equation_suite() {
  PropertyResult R("class equation");
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (uint32_t n = 3; n <= 7; ++n) {
    groups.emplace_back("S" + std::to_string(n), full(n, SymOrAlt::Sym));
    groups.emplace_back("A" + std::to_string(n), full(n, SymOrAlt::Alt));
  }
  for (uint32_t q : {7u, 8u, 9u, 16u})
    for (const auto &s : all_group_specs(q)) groups.emplace_back(s.label(), build_instance(s).G);
  for (const auto &[name, G] : groups) {
    const auto &ct = G.classes();
    uint64_t total = 0;
    for (uint32_t c = 0; c < ct.count(); ++c) {
      total += ct.size[c];
      R.check(ct.size[c] * G.rep_centralizer(c).size() == G.order(), name + " centralizer of class " + std::to_string(c));
    }
    R.check(total == G.order(), name + " class sizes sum");
    for (uint32_t x = 0; x < G.order(); ++x)
      if (G.conj(ct.rep[ct.class_of[x]], ct.tau[x]) != x) {
        R.check(false, name + " conjugator for element " + std::to_string(x));
        break;
      }
  }
  return R;
}

PropertyResult jordan_suite() {
  PropertyResult R("Jordan derangement existence");
  std::vector<std::pair<std::string, PermGroup>> groups;
  groups.emplace_back("A5", full(5, SymOrAlt::Alt));
  groups.emplace_back("S4", full(4, SymOrAlt::Sym));
  groups.emplace_back("S5", full(5, SymOrAlt::Sym));
  groups.emplace_back("PSL2(7)", build_instance(socle_spec(7)).G);
  for (const auto &[name, G] : groups) {
    auto subs = subgroups_up_to_conjugacy(G);
    for (const auto &H : subs) {
      if (H.order() == G.order()) continue;
      const std::string at = name + " on cosets of a subgroup of order " + std::to_string(H.order());
      R.check(!derangement_set(G, H).empty(), at + ": no derangement");
      FixerContext C(G, H);
      for (const auto &K : subs)
        R.check(is_fixer(C, K, false).is_fixer == fixer_brute(G, H, K), at + ": fixer test disagrees");
    }
  }
  return R;
}

PropertyResult prefilter_suite() {
  PropertyResult R("prefilter soundness");
  std::vector<std::pair<std::string, PermGroup>> groups;
  groups.emplace_back("S5", full(5, SymOrAlt::Sym));
  groups.emplace_back("PGL2(7)", build_instance(pgl_spec(7)).G);
  groups.emplace_back("PGammaL2(8)", build_instance(pgammal_spec(8)).G);
  uint64_t rejects = 0;
  for (const auto &[name, G] : groups) {
    auto subs = subgroups_up_to_conjugacy(G);
    auto nat = ActionView::natural(G);
    for (const auto &H : subs) {
      if (H.order() == G.order()) continue;
      FixerContext C(G, H);
      for (const auto &K : subs) {
        auto pf = prefilter(C, K, &nat);
        if (!pf.reject) continue;
        ++rejects;
        R.check(!is_fixer(C, K, false).is_fixer, name + ": rejection by " + pf.reason + " of a fixer");
      }
    }
  }
  R.check(rejects > 0, "no rejections exercised");
  return R;
}

PropertyResult wreath_suite() {
  PropertyResult R("wreath cycle types");
  for (uint32_t a = 1; a <= 8; ++a)
    for (uint32_t b = 1; a * b <= 8; ++b) {
      const uint32_t n = a * b;
      std::set<CycleType> want;
      if (a == 1 || b == 1) {
        auto p = partitions(n);
        want.insert(p.begin(), p.end());
      } else {
        want = types_brute(n, descriptor_generators(n, SymOrAlt::Sym, SubgroupDesc::imprimitive(a, b)));
      }
      R.check(wreath_cycle_types(a, b) == want, "S" + std::to_string(a) + " wr S" + std::to_string(b));
    }
  return R;
}

PropertyResult split_rule_suite() {
  PropertyResult R("split-class rule");
  for (uint32_t n = 3; n <= 9; ++n) {
    PermGroup A = full(n, SymOrAlt::Alt);
    const auto &cls = A.classes();
    std::map<CycleType, std::set<uint32_t>> per_type;
    std::map<uint32_t, std::set<AnClassLabel>> labels;
    for (uint32_t i = 0; i < A.order(); ++i) {
      Perm x = A.element(i);
      per_type[x.cycle_type()].insert(cls.class_of[i]);
      labels[cls.class_of[i]].insert(an_class_label(x));
    }
    for (const auto &[t, ids] : per_type) {
      const std::string at = "A" + std::to_string(n) + " " + type_str(t);
      R.check(ids.size() == (splits_in_alt(t) ? 2u : 1u), at + ": class count");
      if (splits_in_alt(t))
        for (auto c : ids) R.check(BigInt(cls.size[c]) == sym_class_size(t) / 2, at + ": unequal halves");
    }
    std::set<AnClassLabel> seen;
    for (const auto &[c, ls] : labels)
      R.check(ls.size() == 1 && seen.insert(*ls.begin()).second, "A" + std::to_string(n) + ": labels");
  }
  return R;
}

PropertyResult trace_suite() {
  PropertyResult R("relative trace laws");
  for (uint32_t q = 4; q <= 729; ++q) {
    std::pair<uint32_t, uint32_t> pf;
    try {
      pf = prime_power(q);
    } catch (const std::exception &) {
      continue;
    }
    auto [p, f] = pf;
    auto F = FieldCtx::get(q);
    for (uint32_t f1 = 1; f1 <= f; ++f1) {
      if (f % f1) continue;
      const std::string at = "q=" + std::to_string(q) + " f1=" + std::to_string(f1);
      // surjective with equal fibres
      std::vector<uint32_t> hit(q, 0);
      for (uint32_t a = 0; a < q; ++a) hit[F->rel_trace(F->elem(a), f1).code()]++;
      auto sub = F->subfield(f1);
      bool fibres = true;
      for (auto s : sub) fibres = fibres && hit[s] == q / sub.size();
      R.check(fibres, at + ": trace fibres");
      // image of GF(q0), q = q0^r with r prime
      for (uint64_t r : prime_factors(f)) {
        const uint32_t f0 = f / uint32_t(r);
        std::set<uint32_t> image, want;
        for (auto a : F->subfield(f0)) image.insert(F->rel_trace(F->elem(a), f1).code());
        if (f0 % f1 == 0 && r == p) {
          want = {F->zero().code()};
        } else {
          auto s = F->subfield(std::gcd(f0, f1));
          want.insert(s.begin(), s.end());
        }
        R.check(image == want, at + " r=" + std::to_string(r) + ": image");
      }
    }
  }
  return R;
}

PropertyResult determinism_suite() {
  PropertyResult R("thread-count determinism");
  auto render = [] {
    std::string s;
    s += cmd_table_psl2({4, 5, 7, 8}, "", Scope::exhaustive, std::nullopt).dump_json();
    s += cmd_rho({9}, Scope::targeted).dump_json();
    s += cmd_verify_gamma({8, 9}).dump_json();
    s += cmd_spiga({8, 16}, "a").dump_json();
    s += cmd_alt_scan(5, 7, true).dump_json();
    return s;
  };
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string base = render();
  for (int t : {2, 4, 1}) {
    omp_set_num_threads(t);
    R.check(render() == base, "report differs with " + std::to_string(t) + " threads");
  }
  omp_set_num_threads(saved);
  return R;
}

std::vector<PropertyResult> all_property_suites() {
  return {class_equation_suite(), jordan_suite(),  prefilter_suite(),   wreath_suite(),
          split_rule_suite(),     trace_suite(),   determinism_suite()};
}

}  // namespace fixerlab
