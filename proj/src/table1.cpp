#include "fixerlab/table1.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fixerlab {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<Table1Row> table1_rows(const PSL2 &L, const GroupSpec &spec, MaxType t, uint32_t q0) {
  const uint32_t q = L.q(), p = L.p(), f = L.f();
  const uint64_t index = L.outer_group(spec).size();  // |G:G0|
  const bool simple = index == 1;
  const uint64_t d = L.d();
  std::vector<Table1Row> rows;
  auto add = [&](std::string l0, uint64_t order, std::string cond) {
    rows.push_back({t, std::move(l0), order, std::move(cond)});
  };
  switch (t) {
    case MaxType::GL2sub: {
      uint32_t r = 0;
      for (uint32_t k = 1; k <= f; ++k)
        if (ipow(q0, k) == q) r = k;
      if (r == 0) break;
      if (r % 2 == 1 && is_prime(r) && r != p) add("p^f:(q0-1)/(2,q-1)", uint64_t(q) * (q0 - 1) / d, "r odd, r != p (L^I)");
      if (r == p && p != 2 && q != 27) add("p^f:(q0-1)/(2,q-1)", uint64_t(q) * (q0 - 1) / d, "q = q0^p, p odd, q != 27 (L^II)");
      // The table excludes q = 27 because |L^II| < |H| there, but that only holds
      // once G contains phi: without it |L^II| = 27 > 12 = |H cap G0|.
      if (q == 27 && index % 3 != 0)
        rows.push_back({t, "3^3:1", 27, "q = 27, 3 does not divide |G:G0| (L^II)", true});
      if (r == p && p > 3 && index % p == 0)
        add("p^(f-f/p):(q0-1)/2", ipow(p, f - f / p) * (q0 - 1) / 2, "q = q0^p, p > 3, p | |G:G0| (L^III)");
      if (p == 2 && r == 2 && index % 2 == 1) add("2^f:(2^(f/2)+1)", uint64_t(q) * (q0 + 1), "p = 2, q = q0^2, |G:G0| odd");
      break;
    }
    case MaxType::GL1wrS2:
      if (p == 2) add("2^f:(2^f-1)", uint64_t(q) * (q - 1), "p = 2, |L:L0| odd");
      if (p == 2 && f % 2 == 0 && f > 2) {
        uint64_t s = ipow(2, f / 2);
        add("SL2(q^(1/2))", s * (s * s - 1), "p = 2, f even");
      }
      if (q == 13 || (q == 7 && index == 2 && is_pgl_contained(L, spec))) add("A4", 12, "q = 13 or G = PGL2(7)");
      if (q == 25 && is_psigmal_contained(L, spec)) add("S4", 24, "q = 25, G <= PSigmaL2(q)");
      if (q == 31 || ((q == 16 || q == 61) && simple)) add("A5", 60, "q = 31, or q in {16,61} and G = G0");
      break;
    case MaxType::GL1q2:
      if (q == 11 || (q == 5 && simple)) add("A4", 12, "q = 11 or G = PSL2(5)");
      // PGL2(5) is PGammaL2(4); its row is the GL1(4) wr S2 one.
      if (q == 5 && !simple) add("2^f:(2^f-1) at q = 4", 12, "G = PGL2(5) = PGammaL2(4)");
      if (q == 23 && simple) add("S4", 24, "G = PSL2(23)");
      if (q == 29 || (q == 59 && simple)) add("A5", 60, "q = 29 or G = PSL2(59)");
      break;
    case MaxType::Extraspecial:
      if (simple && f == 1 && (q % 8 == 1 || q % 8 == 7)) add("S4", 24, "G = G0, q = p = +-1 mod 8");
      break;
    case MaxType::A5:
      if (simple && f == 1 && (q % 10 == 1 || q % 10 == 9)) add("A5", 60, "G = G0, q = p = +-1 mod 10");
      if (simple && f == 2 && p != 3 && (p % 10 == 3 || p % 10 == 7)) add("A5", 60, "G = G0, q = p^2, 3 != p = +-3 mod 10");
      break;
    default:
      break;
  }
  return rows;
}

FixerClassSummary summarize(const PermGroup &G, const Subgroup &K, const Subgroup &socle_part, bool maximal) {
  FixerClassSummary s;
  s.order = K.order();
  s.socle_order = socle_part.order();
  s.maximal = maximal;
  std::map<uint64_t, uint64_t> h;
  for (auto x : K.elems) ++h[G.elem_order(x)];
  for (auto [o, c] : h) {
    s.order_histogram.push_back(o);
    s.order_histogram.push_back(c);
  }
  return s;
}

std::vector<Table1Case> table1_cases(uint32_t q, bool parallel) {
  std::vector<Table1Case> out;
  for (const auto &spec : all_group_specs(q)) {
    Psl2Instance I = build_instance(spec, kEnumerationBound, parallel);
    const uint64_t g0 = I.G0.order();
    for (const auto &H : maximal_subgroups(I.G, parallel)) {
      if (I.socle_part(H).order() == g0) continue;  // not core-free
      Table1Case c;
      c.group = spec.label();
      c.group_order = I.G.order();
      c.h_order = H.order();
      c.h_type = identify_type(I, H, &c.q0);
      FixerContext C(I.G, H);
      std::set<uint64_t> l0;
      uint64_t best = H.order();
      for (const auto &k : classify_large_fixers(C, parallel)) {
        best = std::max(best, k.K.order());
        auto s = summarize(I.G, k.K, I.socle_part(k.K), k.maximal);
        if (k.maximal) l0.insert(s.socle_order);
        c.large.push_back(std::move(s));
      }
      std::sort(c.large.begin(), c.large.end());
      c.maximal_l0.assign(l0.begin(), l0.end());
      c.predicted = table1_rows(*I.L, spec, c.h_type, c.q0);
      std::set<uint64_t> want;
      for (const auto &r : c.predicted) want.insert(r.l0_order);
      c.predicate_ok = want == l0;
      c.rho = make_rho(best, H.order(), I.G.order());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<RhoCase> rho_cases(uint32_t q, bool parallel) {
  std::vector<RhoCase> out;
  for (const auto &spec : all_group_specs(q)) {
    Psl2Instance I = build_instance(spec, kEnumerationBound, parallel);
    const PSL2 &L = *I.L;
    std::vector<Subgroup> cand;
    auto add = [&](auto make) {
      try {
        cand.push_back(make());
      } catch (const Psl2Error &) {
      }
    };
    for (MaxType t : {MaxType::P1, MaxType::GL1wrS2, MaxType::GL1q2}) add([&] { return maximal_subgroup(I, t); });
    for (uint32_t r = 2; r <= L.f(); ++r)
      if (L.f() % r == 0 && is_prime(r)) add([&] { return maximal_subgroup(I, MaxType::GL2sub, r); });
    for (uint32_t k : {12u, 24u, 60u})
      for (auto &S : small_overgroups(I, k)) cand.push_back(std::move(S));
    std::vector<Subgroup> maximal;
    for (auto &H : cand) {
      if (I.socle_part(H).order() == I.G0.order() || !is_maximal(I.G, H)) continue;
      bool dup = false;
      for (const auto &M : maximal)
        if (M.order() == H.order() && conjugating_element(I.G, H, M)) dup = true;
      if (!dup) maximal.push_back(std::move(H));
    }
    for (const auto &H : maximal) {
      RhoCase c;
      c.group = spec.label();
      c.group_order = I.G.order();
      c.h_order = H.order();
      c.h_type = identify_type(I, H, &c.q0);
      FixerContext C(I.G, H);
      c.rho = rho0(C, parallel);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace fixerlab
