#include "fixerlab/symalt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "fixerlab/psl2.hpp"

namespace fixerlab {

namespace {

Perm cyc(size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

bool perm_even(const Perm &x) {
  auto t = x.cycle_type();
  return (x.degree() - t.size()) % 2 == 0;
}

CycleType merge_types(const CycleType &a, const CycleType &b) {
  CycleType r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<>());
  return r;
}

// Schreier generators of the even part of <gens> (transversal {1, t}).
std::vector<Perm> even_part(const std::vector<Perm> &gens) {
  std::optional<Perm> t;
  for (const auto &s : gens)
    if (!perm_even(s)) {
      t = s;
      break;
    }
  if (!t) return gens;
  const Perm ti = t->inverse();
  std::vector<Perm> out;
  for (const auto &s : gens) {
    if (perm_even(s)) {
      out.push_back(s);
      out.push_back(*t * s * ti);
    } else {
      out.push_back(s * ti);
      out.push_back(*t * s);
    }
  }
  std::vector<Perm> dedup;
  for (auto &p : out)
    if (!p.is_identity() && std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
  return dedup;
}

std::vector<Perm> symmetric_on(size_t n, Point lo, Point len) {
  std::vector<Perm> g;
  if (len < 2) return g;
  g.push_back(cyc(n, {{lo, Point(lo + 1)}}));
  if (len > 2) {
    std::vector<Point> c(len);
    std::iota(c.begin(), c.end(), lo);
    g.push_back(cyc(n, {c}));
  }
  return g;
}

std::vector<Perm> natural_perms(const GroupSpec &spec) {
  auto L = PSL2::get(spec.q);
  std::vector<Perm> out;
  for (const auto &x : L->group_generators(spec)) out.push_back(L->perm(x));
  return out;
}

PermGroup make_group(uint32_t n, const std::vector<Perm> &gens) {
  PermGroup G(n, gens.empty() ? std::vector<Perm>{Perm(n)} : gens);
  G.enumerate();
  return G;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CycleType> partitions(uint32_t n) {
  std::vector<CycleType> out;
  CycleType cur;
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t rest, uint32_t maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (uint32_t p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_even(const CycleType &t) {
  uint32_t n = std::accumulate(t.begin(), t.end(), 0u);
  return (n - t.size()) % 2 == 0;
}

bool splits_in_alt(const CycleType &t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] % 2 == 0) return false;
    if (i && t[i] == t[i - 1]) return false;
  }
  return true;
}

BigInt factorial(uint32_t n) {
  BigInt r = 1;
  for (uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt sym_class_size(const CycleType &t) {
  uint32_t n = std::accumulate(t.begin(), t.end(), 0u);
  BigInt den = 1;
  std::map<uint32_t, uint32_t> mult;
  for (auto p : t) ++mult[p];
  for (auto [p, m] : mult) {
    for (uint32_t i = 0; i < m; ++i) den *= p;
    den *= factorial(m);
  }
  return factorial(n) / den;
}

std::string type_str(const CycleType &t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size();) {
    size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    if (i) s += ",";
    s += std::to_string(t[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

std::string AnClassLabel::str() const {
  return type_str(type) + (tag == SplitTag::plus ? "+" : tag == SplitTag::minus ? "-" : "");
}

AnClassLabel an_class_label(const Perm &x) {
  AnClassLabel l;
  l.type = x.cycle_type();
  if (!is_even(l.type) || !splits_in_alt(l.type)) return l;
  const size_t n = x.degree();
  // cycles of x including a possible fixed point, longest first
  std::vector<std::vector<Point>> cs;
  std::vector<char> seen(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Point> c;
    for (Point y = Point(s); !seen[y]; y = x[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    cs.push_back(std::move(c));
  }
  std::sort(cs.begin(), cs.end(), [](auto &a, auto &b) { return a.size() > b.size(); });
  // g maps the canonical representative's cycles onto those of x
  std::vector<Point> g(n);
  Point next = 0;
  for (const auto &c : cs)
    for (auto y : c) g[next++] = y;
  l.tag = perm_even(Perm(g)) ? SplitTag::plus : SplitTag::minus;
  return l;
}

std::set<CycleType> wreath_cycle_types(uint32_t a, uint32_t b) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::set<CycleType>> memo;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
  }
  const auto pa = partitions(a);
  std::set<CycleType> out;
  for (const auto &mu_b : partitions(b)) {
    std::set<CycleType> cur{CycleType{}};
    for (uint32_t t : mu_b) {
      std::set<CycleType> nxt;
      for (const auto &s : cur)
        for (const auto &lam : pa) {
          CycleType scaled(lam);
          for (auto &x : scaled) x *= t;
          nxt.insert(merge_types(s, scaled));
        }
      cur.swap(nxt);
    }
    out.insert(cur.begin(), cur.end());
  }
  std::lock_guard<std::mutex> lk(mu);
  memo[{a, b}] = out;
  return out;
}

std::set<CycleType> intransitive_cycle_types(uint32_t k, uint32_t n) {
  std::set<CycleType> out;
  auto pk = partitions(k), pr = partitions(n - k);
  for (const auto &x : pk)
    for (const auto &y : pr) out.insert(merge_types(x, y));
  return out;
}

std::string group_name(SymOrAlt g, uint32_t n) { return (g == SymOrAlt::Sym ? "S" : "A") + std::to_string(n); }

// ---------------------------------------------------------------------------

SubgroupDesc SubgroupDesc::intransitive(uint32_t k) {
  SubgroupDesc d;
  d.kind = Kind::Intransitive;
  d.k = k;
  return d;
}

SubgroupDesc SubgroupDesc::imprimitive(uint32_t a, uint32_t b) {
  SubgroupDesc d;
  d.kind = Kind::Imprimitive;
  d.a = a;
  d.b = b;
  return d;
}

SubgroupDesc SubgroupDesc::explicit_gens(std::string name, std::vector<Perm> gens) {
  SubgroupDesc d;
  d.kind = Kind::Explicit;
  d.name = std::move(name);
  d.gens = std::move(gens);
  return d;
}

std::string SubgroupDesc::str(uint32_t n, SymOrAlt g) const {
  std::string s;
  switch (kind) {
    case Kind::Intransitive:
      s = "(S" + std::to_string(k) + "xS" + std::to_string(n - k) + ")";
      break;
    case Kind::Imprimitive:
      s = "(S" + std::to_string(a) + "wrS" + std::to_string(b) + ")";
      break;
    case Kind::Explicit:
      return name;
  }
  return g == SymOrAlt::Alt ? s + "capA" + std::to_string(n) : s.substr(1, s.size() - 2);
}

std::vector<Perm> descriptor_generators(uint32_t n, SymOrAlt g, const SubgroupDesc &d) {
  std::vector<Perm> gens;
  switch (d.kind) {
    case SubgroupDesc::Kind::Intransitive: {
      if (d.k == 0 || d.k >= n) throw SymAltError("intransitive: need 0 < k < n");
      gens = symmetric_on(n, 0, Point(d.k));
      auto r = symmetric_on(n, Point(d.k), Point(n - d.k));
      gens.insert(gens.end(), r.begin(), r.end());
      break;
    }
    case SubgroupDesc::Kind::Imprimitive: {
      if (d.a < 2 || d.b < 2 || d.a * d.b != n) throw SymAltError("imprimitive: need a, b >= 2 and ab = n");
      gens = symmetric_on(n, 0, Point(d.a));
      std::vector<std::vector<Point>> swap, cycle(d.a);
      for (uint32_t i = 0; i < d.a; ++i) {
        swap.push_back({Point(i), Point(d.a + i)});
        for (uint32_t j = 0; j < d.b; ++j) cycle[i].push_back(Point(j * d.a + i));
      }
      gens.push_back(cyc(n, swap));
      if (d.b > 2) gens.push_back(cyc(n, cycle));
      break;
    }
    case SubgroupDesc::Kind::Explicit:
      for (const auto &p : d.gens)
        if (p.degree() != n) throw SymAltError("explicit generator of wrong degree");
      return d.gens;
  }
  return g == SymOrAlt::Alt ? even_part(gens) : gens;
}

BigInt descriptor_order(uint32_t n, SymOrAlt g, const SubgroupDesc &d) {
  BigInt o;
  switch (d.kind) {
    case SubgroupDesc::Kind::Intransitive:
      o = factorial(d.k) * factorial(n - d.k);
      break;
    case SubgroupDesc::Kind::Imprimitive:
      o = factorial(d.b);
      for (uint32_t i = 0; i < d.b; ++i) o *= factorial(d.a);
      break;
    case SubgroupDesc::Kind::Explicit:
      return make_group(n, d.gens).order();
  }
  return g == SymOrAlt::Alt ? BigInt(o / 2) : o;
}

std::set<AnClassLabel> class_labels(uint32_t n, SymOrAlt g, const SubgroupDesc &d) {
  std::set<CycleType> types;
  switch (d.kind) {
    case SubgroupDesc::Kind::Intransitive:
      types = intransitive_cycle_types(d.k, n);
      break;
    case SubgroupDesc::Kind::Imprimitive:
      types = wreath_cycle_types(d.a, d.b);
      break;
    case SubgroupDesc::Kind::Explicit:
      return class_labels_brute(n, g, d);
  }
  std::set<AnClassLabel> out;
  for (const auto &t : types) {
    if (g == SymOrAlt::Sym) {
      out.insert({t, SplitTag::none});
    } else if (is_even(t)) {
      if (splits_in_alt(t)) {
        out.insert({t, SplitTag::plus});
        out.insert({t, SplitTag::minus});
      } else {
        out.insert({t, SplitTag::none});
      }
    }
  }
  return out;
}

std::set<AnClassLabel> class_labels_brute(uint32_t n, SymOrAlt g, const SubgroupDesc &d) {
  PermGroup X = make_group(n, descriptor_generators(n, g, d));
  std::set<AnClassLabel> out;
  for (uint32_t i = 0; i < X.order(); ++i) {
    Perm x = X.element(i);
    if (g == SymOrAlt::Alt) {
      if (!perm_even(x)) throw SymAltError("subgroup is not inside A_n");
      out.insert(an_class_label(x));
    } else {
      out.insert({x.cycle_type(), SplitTag::none});
    }
  }
  return out;
}

namespace {

ContainmentResult compare_labels(const std::set<AnClassLabel> &h, const std::set<AnClassLabel> &k) {
  ContainmentResult r;
  r.contained = true;
  for (const auto &l : k)
    if (!h.count(l)) {
      r.contained = false;
      r.witness = l;
      break;
    }
  return r;
}

}  // namespace

ContainmentResult sn_containment(uint32_t n, SymOrAlt g, const SubgroupDesc &H, const SubgroupDesc &K) {
  return compare_labels(class_labels(n, g, H), class_labels(n, g, K));
}

ContainmentResult sn_containment_brute(uint32_t n, SymOrAlt g, const SubgroupDesc &H, const SubgroupDesc &K) {
  return compare_labels(class_labels_brute(n, g, H), class_labels_brute(n, g, K));
}

// ---------------------------------------------------------------------------

bool has_primitive_data(uint32_t n) { return n >= 5 && n <= 10; }

std::vector<SubgroupDesc> maximal_descriptors(uint32_t n, SymOrAlt g) {
  if (n < 5) throw SymAltError("maximal_descriptors: n >= 5");
  std::vector<SubgroupDesc> out;
  for (uint32_t k = 1; 2 * k < n; ++k) out.push_back(SubgroupDesc::intransitive(k));
  for (uint32_t a = 2; a < n; ++a)
    if (n % a == 0) {
      // (S2 wr S4) cap A8 lies in AGL3(2)
      if (g == SymOrAlt::Alt && a == 2 && n == 8) continue;
      out.push_back(SubgroupDesc::imprimitive(a, n / a));
    }
  if (!has_primitive_data(n)) return out;
  const bool sym = g == SymOrAlt::Sym;
  auto add = [&](std::string name, std::vector<Perm> gens) {
    out.push_back(SubgroupDesc::explicit_gens(std::move(name), std::move(gens)));
  };
  // the second A_n-class of a subgroup whose S_n-class splits
  auto add_pair = [&](const std::string &name, const std::vector<Perm> &gens) {
    add(name, gens);
    Perm t = cyc(n, {{0, 1}});
    std::vector<Perm> c;
    for (const auto &x : gens) c.push_back(x.conj(t));
    add(name + "'", c);
  };
  switch (n) {
    case 5:
      if (sym) add("AGL1(5)", {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})});
      else add("D10", {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})});
      break;
    case 6:
      if (sym) add("PGL2(5)", natural_perms(pgl_spec(5)));
      else add("PSL2(5)", natural_perms(socle_spec(5)));
      break;
    case 7:
      if (sym) add("AGL1(7)", {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 3, 2, 6, 4, 5}})});
      else add_pair("PSL3(2)", {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}}), cyc(7, {{0, 1}, {3, 6}})});
      break;
    case 8:
      if (sym) {
        add("PGL2(7)", natural_perms(pgl_spec(7)));
      } else {
        // GF(2)^3 as 0..7: translations by basis vectors, a cyclic shift of
        // coordinates and one transvection
        auto lin = [](auto f) {
          std::vector<Point> im(8);
          for (Point v = 0; v < 8; ++v) im[v] = Point(f(v));
          return Perm(im);
        };
        std::vector<Perm> gens;
        for (Point e : {1, 2, 4}) gens.push_back(lin([e](Point v) { return v ^ e; }));
        gens.push_back(lin([](Point v) { return ((v << 1) | (v >> 2)) & 7; }));
        gens.push_back(lin([](Point v) { return (v & 1) ? v ^ 2 : v; }));
        add_pair("AGL3(2)", gens);
      }
      break;
    case 9: {
      // GF(3)^2 as 3x + y
      auto aff = [](int m00, int m01, int m10, int m11, int t0, int t1) {
        std::vector<Point> im(9);
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) {
            int u = (m00 * x + m10 * y + t0) % 3, v = (m01 * x + m11 * y + t1) % 3;
            im[3 * x + y] = Point(3 * u + v);
          }
        return Perm(im);
      };
      std::vector<Perm> agl = {aff(1, 0, 0, 1, 1, 0), aff(1, 0, 0, 1, 0, 1), aff(1, 1, 0, 1, 0, 0),
                               aff(0, 1, 2, 0, 0, 0), aff(2, 0, 0, 1, 0, 0)};
      if (sym) {
        add("AGL2(3)", agl);
      } else {
        add_pair("PGammaL2(8)", natural_perms(pgammal_spec(8)));
        add("ASL2(3)", even_part(agl));
      }
      break;
    }
    case 10:
      if (sym) add("PGammaL2(9)", natural_perms(pgammal_spec(9)));
      else add("M10", even_part(natural_perms(pgammal_spec(9))));
      break;
  }
  return out;
}

std::string AltTriple::str() const {
  return "(" + group_name(g, n) + ", " + H.str(n, g) + ", " + K.str(n, g) + ")";
}

AltScanReport theorem_alt_scan(uint32_t n_lo, uint32_t n_hi, bool brute) {
  AltScanReport rep;
  for (uint32_t n = std::max(n_lo, 5u); n <= n_hi; ++n) {
    if (brute && n > 10) throw SymAltError("element-level scan needs n <= 10");
    for (SymOrAlt g : {SymOrAlt::Sym, SymOrAlt::Alt}) {
      auto descs = maximal_descriptors(n, g);
      const size_t m = descs.size();
      std::vector<BigInt> order(m);
      std::vector<std::set<AnClassLabel>> lab(m), lab_b(m);
      for (size_t i = 0; i < m; ++i) {
        order[i] = descriptor_order(n, g, descs[i]);
        lab[i] = class_labels(n, g, descs[i]);
        if (brute) lab_b[i] = class_labels_brute(n, g, descs[i]);
      }
      if (!has_primitive_data(n)) {
        // primitive K other than A_n, S_n has order < 2^n once n >= 25
        BigInt two_n = BigInt(1) << n;
        BigInt hmin = *std::min_element(order.begin(), order.end());
        if (n < 25 || hmin < two_n)
          rep.notes.push_back(group_name(g, n) + ": primitive K not covered");
      }
      for (size_t h = 0; h < m; ++h) {
        if (descs[h].kind == SubgroupDesc::Kind::Explicit) continue;
        for (size_t k = 0; k < m; ++k) {
          if (k == h || order[k] < order[h]) continue;
          ++rep.pairs;
          auto r = compare_labels(lab[h], lab[k]);
          if (brute && compare_labels(lab_b[h], lab_b[k]).contained != r.contained) ++rep.disagreements;
          if (!r.contained) continue;
          if (order[k] == order[h]) {
            PermGroup A = make_group(n, descriptor_generators(n, g, descs[h]));
            PermGroup B = make_group(n, descriptor_generators(n, g, descs[k]));
            if (are_isomorphic(A, B)) {
              ++rep.isomorphic_skipped;
              continue;
            }
          }
          rep.hits.push_back({n, g, descs[h], descs[k]});
        }
      }
    }
  }
  return rep;
}

std::vector<ImprimBoundRow> imprim_order_bounds(uint32_t n) {
  std::vector<ImprimBoundRow> out;
  const BigInt two_n = BigInt(1) << n;
  const BigInt halves = 2 * factorial((n + 1) / 2) * factorial((n + 1) / 2);
  const BigInt f3 = factorial((n + 2) / 3);
  const BigInt thirds = 6 * f3 * f3 * f3;
  for (uint32_t a = 2; a < n; ++a) {
    if (n % a) continue;
    ImprimBoundRow r;
    r.a = a;
    r.b = n / a;
    r.order = descriptor_order(n, SymOrAlt::Sym, SubgroupDesc::imprimitive(a, r.b));
    // a maximal X has |X| >= |S_a wr S_b| / 2
    r.at_least_2n = r.order / 2 >= two_n;
    r.below_two_halves = r.order <= halves;
    if (r.b >= 3) r.below_three_thirds = r.order <= thirds;
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool are_isomorphic(const PermGroup &A, const PermGroup &B) {
  if (A.order() != B.order()) return false;
  const uint32_t N = uint32_t(A.order());
  auto hist = [](const PermGroup &X) {
    std::map<uint32_t, uint32_t> h;
    for (uint32_t i = 0; i < X.order(); ++i) ++h[X.elem_order(i)];
    return h;
  };
  if (hist(A) != hist(B)) return false;
  const auto &ca = A.classes(), &cb = B.classes();
  if (ca.count() != cb.count()) return false;
  auto csizes = [](const ClassTable &c) {
    std::vector<uint64_t> s(c.count(), 0);
    for (auto k : c.class_of) ++s[k];
    return s;
  };
  const auto sa = csizes(ca), sb = csizes(cb);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  const std::vector<uint32_t> gens = small_generating_set(A, whole_group(A));
  // candidates: same order, same class size; the first image only up to conjugacy
  std::vector<std::vector<uint32_t>> cand(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    const uint32_t o = A.elem_order(gens[j]);
    const uint64_t s = sa[ca.class_of[gens[j]]];
    for (uint32_t y = 0; y < N; ++y) {
      if (B.elem_order(y) != o || sb[cb.class_of[y]] != s) continue;
      if (j == 0 && cb.rep[cb.class_of[y]] != y) continue;
      cand[j].push_back(y);
    }
  }
  std::vector<uint32_t> img(gens.size());
  constexpr uint32_t unset = ~0u;
  // extend the partial assignment to <gens[0..j]> and check consistency
  auto consistent = [&](size_t upto, bool full) {
    std::vector<uint32_t> map(N, unset);
    std::vector<uint32_t> queue{0};
    map[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t x = queue[qi];
      for (size_t j = 0; j <= upto; ++j) {
        uint32_t y = A.mul(x, gens[j]), iy = B.mul(map[x], img[j]);
        if (map[y] == unset) {
          map[y] = iy;
          queue.push_back(y);
        } else if (map[y] != iy) {
          return false;
        }
      }
    }
    if (!full) return true;
    std::vector<char> hit(N, 0);
    for (auto v : map) {
      if (v == unset || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t j) {
    if (j == gens.size()) return true;
    for (auto y : cand[j]) {
      img[j] = y;
      if (consistent(j, j + 1 == gens.size()) && rec(j + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace fixerlab
