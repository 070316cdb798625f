#include "fixerlab/fixer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace fixerlab {

FixerContext::FixerContext(const PermGroup &G, Subgroup H) : G_(&G), H_(std::move(H)) {
  const auto &cls = G.classes();
  hcls_.assign(cls.count(), 0);
  for (auto x : H_.elems) hcls_[cls.class_of[x]] = 1;
  fix_ = Bitset(G.order());
  for (uint32_t x = 0; x < G.order(); ++x)
    if (hcls_[cls.class_of[x]]) fix_.set(x);
}

FixerVerdict is_fixer(const FixerContext &C, const Subgroup &K, bool decide_stability) {
  FixerVerdict v;
  const auto &cls = C.group().classes();
  v.is_fixer = true;
  for (auto x : K.elems)
    if (!C.fixes_point(x)) {
      v.is_fixer = false;
      v.witness = x;
      v.witness_class = cls.class_of[x];
      break;
    }
  if (v.is_fixer && decide_stability) {
    v.conjugator = conjugate_into(C.group(), K, C.H());
    v.is_stable = v.conjugator.has_value();
    v.is_large = !v.is_stable && K.order() >= C.H().order();
    v.is_strictly_large = v.is_large && K.order() > C.H().order();
  }
  return v;
}

std::vector<uint32_t> derangement_set(const PermGroup &G, const Subgroup &H) {
  FixerContext C(G, H);
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < G.classes().count(); ++c)
    if (!C.class_meets_H(c)) out.push_back(c);
  return out;
}

bool derangement_containment(const PermGroup &G, const Subgroup &H, const Subgroup &K) {
  FixerContext C(G, H);
  return is_fixer(C, K, false).is_fixer;
}

PrefilterResult prefilter(const FixerContext &C, const Subgroup &K, const ActionView *aux) {
  const PermGroup &G = C.group();
  const Subgroup &H = C.H();
  auto pk = prime_set(K.order()), ph = prime_set(H.order());
  if (!std::includes(ph.begin(), ph.end(), pk.begin(), pk.end())) return {true, "primes"};
  auto sk = spectrum(G, K), sh = spectrum(G, H);
  if (!std::includes(sh.begin(), sh.end(), sk.begin(), sk.end())) return {true, "spectrum"};
  uint64_t meet = 0;
  for (auto x : K.elems)
    if (H.contains(x)) ++meet;
  if (K.order() / meet * H.order() == G.order()) return {true, "transitive"};
  if (aux) {
    std::set<uint32_t> hf;
    for (auto y : H.elems) hf.insert(aux->fix(y));
    for (auto x : K.elems)
      if (!hf.count(aux->fix(x))) return {true, "fpr"};
  }
  return {};
}

// ---------------------------------------------------------------------------

std::string to_string_u128(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

RhoResult make_rho(uint64_t K, uint64_t H, uint64_t G, std::string by) {
  RhoResult r;
  r.best_order = K;
  r.achieved_by = std::move(by);
  r.lhs = (unsigned __int128)2 * K * K;
  r.rhs = (unsigned __int128)G * H;
  r.below_inverse_sqrt2 = r.lhs < r.rhs;
  r.value = double(K) / (double(H) * std::sqrt(double(G) / double(H)));
  return r;
}

int compare_rho(uint64_t K, uint64_t H, uint64_t Omega, uint64_t num, uint64_t den) {
  unsigned __int128 a = (unsigned __int128)den * K * K;
  unsigned __int128 b = (unsigned __int128)num * H * H * Omega;
  return a < b ? -1 : a > b ? 1 : 0;
}

RhoResult rho0(const FixerContext &C, bool parallel, uint64_t bound) {
  LatticeOptions opt;
  opt.bound = bound;
  opt.allowed = &C.fixer_set();
  opt.parallel = parallel;
  opt.min_order = C.H().order();
  auto subs = subgroups_up_to_conjugacy(C.group(), opt);
  if (subs.empty()) throw PermError("rho0: empty scope");
  const auto &K = subs.back();
  return make_rho(K.order(), C.H().order(), C.group().order(), "fixer of order " + std::to_string(K.order()));
}

RhoResult rho0_candidates(const FixerContext &C, const std::vector<std::pair<std::string, Subgroup>> &cands) {
  uint64_t best = C.H().order();
  std::string by = "H";
  for (const auto &[name, K] : cands) {
    if (K.order() <= best) continue;
    if (is_fixer(C, K, false).is_fixer) {
      best = K.order();
      by = name;
    }
  }
  return make_rho(best, C.H().order(), C.group().order(), by);
}

RhoResult rho1(const FixerContext &C, const std::vector<Subgroup> &maximals) {
  uint64_t best = 0;
  std::string by;
  for (const auto &M : maximals)
    if (M.order() > best && is_fixer(C, M, false).is_fixer) {
      best = M.order();
      by = "maximal subgroup of order " + std::to_string(M.order());
    }
  if (best == 0) throw PermError("rho1: no maximal fixer");
  return make_rho(best, C.H().order(), C.group().order(), by);
}

bool is_maximal(const PermGroup &G, const Subgroup &H) {
  if (H.order() == G.order()) return false;
  auto A = coset_action(G, H);
  std::vector<uint32_t> hg = H.gens.empty() ? small_generating_set(G, H) : H.gens;
  std::vector<int> seen(A.index(), 0);
  seen[A.coset_of[G.identity()]] = 1;
  for (uint32_t c = 0; c < A.index(); ++c) {
    if (seen[c]) continue;
    // orbit of H on cosets = one double coset
    std::vector<uint32_t> orb{c};
    seen[c] = 1;
    for (size_t k = 0; k < orb.size(); ++k)
      for (auto h : hg) {
        uint32_t d = A.coset_of[G.mul(A.coset_rep[orb[k]], h)];
        if (!seen[d]) {
          seen[d] = 1;
          orb.push_back(d);
        }
      }
    // a proper subgroup has order at most |G|/2
    if (join(G, H, A.coset_rep[c], nullptr, G.order() / 2)) return false;
  }
  return true;
}

std::vector<Subgroup> maximal_subgroups(const PermGroup &G, bool parallel) {
  LatticeOptions opt;
  opt.parallel = parallel;
  auto subs = subgroups_up_to_conjugacy(G, opt);
  std::vector<Subgroup> out;
  const uint64_t N = G.order();
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == N) continue;
    bool maximal = true;
    for (size_t j = i + 1; j < subs.size() && maximal; ++j) {
      if (subs[j].order() == N || subs[j].order() == subs[i].order()) continue;
      if (conjugate_into(G, subs[i], subs[j])) maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

std::vector<LargeFixer> classify_non_stable_fixers(const FixerContext &C, uint64_t min_order, bool parallel) {
  LatticeOptions opt;
  opt.allowed = &C.fixer_set();
  opt.parallel = parallel;
  opt.min_order = min_order;
  auto subs = subgroups_up_to_conjugacy(C.group(), opt);
  std::vector<Subgroup> large;
  std::vector<char> stable(subs.size(), 0);
  auto test = [&](size_t i) { stable[i] = conjugate_into(C.group(), subs[i], C.H()).has_value(); };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < int64_t(subs.size()); ++i) test(size_t(i));
  } else {
    for (size_t i = 0; i < subs.size(); ++i) test(i);
  }
  for (size_t i = 0; i < subs.size(); ++i)
    if (!stable[i]) large.push_back(subs[i]);
  std::vector<LargeFixer> out;
  for (size_t i = 0; i < large.size(); ++i) {
    bool maximal = true;
    for (size_t j = i + 1; j < large.size() && maximal; ++j)
      if (large[j].order() > large[i].order() && conjugate_into(C.group(), large[i], large[j])) maximal = false;
    out.push_back({large[i], maximal});
  }
  return out;
}

EkrVerdict ekr_predicates(const std::vector<LargeFixer> &large, uint64_t H_order) {
  EkrVerdict v;
  for (const auto &k : large) {
    v.strict_weak_ekr = false;
    if (k.K.order() > H_order) v.weak_ekr = false;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Witness chains

namespace {

struct ChainBuilder {
  const PSL2 &L;
  const Gamma &Gm;
  WitnessChain &W;
  GammaElem cur;
  SemilinearElem cur_sl;
  SemilinearElem total;

  void gamma_step(const std::string &rule, const GammaElem &c) {
    cur = Gm.conj(cur, c);
    SemilinearElem cs = L.rho_inv(c);
    total = L.mul(total, cs);
    cur_sl = L.rho_inv(cur);
    W.steps.push_back({rule, cs, cur_sl});
  }
  void matrix_step(const std::string &rule, const SemilinearElem &g) {
    total = L.mul(total, g);
    cur_sl = L.conj(cur_sl, g);
    W.steps.push_back({rule, g, cur_sl});
  }
};

uint32_t p_part(uint64_t n, uint32_t p) {
  uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return uint32_t(r);
}

}  // namespace

WitnessChain witness_chain(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r, const SemilinearElem &x) {
  WitnessChain W;
  W.start = x;
  const Gamma &Gm = L.gamma();
  const FieldCtx &F = L.F();
  const auto U = family_overgroup_set(L, kind, r);
  ChainBuilder B{L, Gm, W, L.rho(x), x, L.identity()};
  try {
    const bool even_route = kind == FamilyKind::case_a || kind == FamilyKind::case_c;
    if (meets_translations_trivially(Gm, B.cur)) {
      B.gamma_step("torus", reduce_to_torus(Gm, B.cur));
    } else if (kind == FamilyKind::L_III && Gm.frob_order(B.cur.i) % L.p() == 0) {
      // The p-part is moved onto a field automorphism; x then centralises it.
      GammaElem y = Gm.pow(B.cur, int64_t(Gm.order(B.cur) / p_part(Gm.order(B.cur), L.p())));
      if (y.lam != 1) {
        uint32_t mu = F.hilbert90_multiplicative(F.elem(F.inv(y.lam)), y.i).code();
        B.gamma_step("sylow", Gm.make(0, mu, 0));
        y = Gm.pow(B.cur, int64_t(Gm.order(B.cur) / p_part(Gm.order(B.cur), L.p())));
      }
      auto res = conj_l33(Gm, y.a, 0, y.i, TraceCase::Equal);
      B.gamma_step("trace", *res.conjugator);
    } else {
      GammaElem y = Gm.pow(B.cur, Gm.frob_order(B.cur.i));
      if (y.lam != 1 || y.a == 0 || y.i != 0) throw GammaError("unexpected translation part");
      bool moved = false;
      for (uint32_t c = 1; c < L.p() && !moved; ++c) {
        uint32_t mu = F.div(c, y.a);
        GammaElem s = Gm.make(0, mu, 0);
        if (!L.in_group(L.rho_inv(s), spec)) continue;
        B.gamma_step("centralize", s);
        moved = true;
      }
      if (!moved) throw GammaError("no conjugator in G moving the translation part into GF(p)");
      if (B.cur.lam != 1) throw GammaError("centraliser step left a torus part");
      if (even_route) {
        uint32_t f1 = L.f() / Gm.frob_order(B.cur.i);
        bool zero = F.rel_trace(F.elem(B.cur.a), f1).is_zero();
        auto res = conj_l33(Gm, B.cur.a, zero ? 0 : 1, B.cur.i);
        if (!res.conjugator) throw GammaError("trace normalisation impossible");
        B.gamma_step("trace", *res.conjugator);
        if (!zero) {
          // u(1) -> z by an GF(2)-rational element, which commutes with phi
          std::optional<SemilinearElem> g3;
          for (uint32_t a = 0; a < 2 && !g3; ++a)
            for (uint32_t b = 0; b < 2 && !g3; ++b)
              for (uint32_t c = 0; c < 2 && !g3; ++c)
                for (uint32_t d = 0; d < 2 && !g3; ++d) {
                  if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
                  SemilinearElem g = L.make(a, b, c, d);
                  if (L.conj(L.u(1), g) == L.z()) g3 = g;
                }
          if (!g3) throw GammaError("no rational conjugator u(1) -> z");
          B.matrix_step("involution", *g3);
        }
      } else {
        if (kind == FamilyKind::Q || kind == FamilyKind::P1) throw GammaError("no route for this family");
        auto red = subfield_reduce(Gm, B.cur.a, B.cur.i, L.f() / r);
        B.gamma_step("subfield", red.conjugator);
      }
    }
  } catch (const std::exception &e) {
    W.failure = e.what();
  }
  W.total = B.total;
  W.image = B.cur_sl;
  if (!W.failure.empty()) return W;
  // Independent check by semilinear multiplication.
  SemilinearElem y = x;
  for (const auto &s : W.steps) {
    y = L.conj(y, s.conjugator);
    if (y != s.result) {
      W.failure = "step " + s.rule + " does not reproduce its result";
      return W;
    }
  }
  if (L.conj(x, W.total) != W.image) W.failure = "total conjugator mismatch";
  else if (!L.in_group(W.total, spec)) W.failure = "conjugator outside G";
  else if (!L.in_group(W.image, spec)) W.failure = "image outside G";
  else if (!L.stabilizes(W.image, U)) W.failure = "image outside H";
  W.verified = W.failure.empty();
  return W;
}

FamilyWitnessReport verify_family(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r, bool parallel) {
  AffineFamily fam = fixer_family(L, spec, kind, r);
  const Gamma &Gm = L.gamma();
  const uint64_t nu = fam.unipotent.size(), n = fam.order();
  FamilyWitnessReport rep;
  rep.elements = n;
  std::vector<std::string> route(n), fail(n);
  std::vector<char> ok(n, 0);
  auto run = [&](uint64_t idx) {
    const GammaElem &t = fam.complement[idx / nu];
    GammaElem g = Gm.mul(Gm.make(fam.unipotent[idx % nu], 1, 0), t);
    SemilinearElem x = L.rho_inv(g);
    WitnessChain W = witness_chain(L, spec, kind, r, x);
    ok[idx] = W.verified;
    std::string s;
    for (const auto &st : W.steps) s += (s.empty() ? "" : ">") + st.rule;
    route[idx] = s.empty() ? "identity" : s;
    if (!W.verified) fail[idx] = L.str(x) + ": " + W.failure;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (int64_t i = 0; i < int64_t(n); ++i) run(uint64_t(i));
  } else {
    for (uint64_t i = 0; i < n; ++i) run(i);
  }
  for (uint64_t i = 0; i < n; ++i) {
    if (ok[i]) ++rep.verified;
    else if (rep.failures.size() < 5) rep.failures.push_back(fail[i]);
    ++rep.routes[route[i]];
  }
  return rep;
}

}  // namespace fixerlab
