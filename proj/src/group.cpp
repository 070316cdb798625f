#include "fixerlab/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <string_view>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fixerlab {

namespace {

size_t hash_row(const Point *p, size_t n) {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char *>(p), n * sizeof(Point)));
}

// Per-thread membership marks reused across closures.
struct Marks {
  std::vector<uint32_t> stamp;
  uint32_t epoch = 0;
  void begin(size_t n) {
    if (stamp.size() < n) stamp.assign(n, 0), epoch = 0;
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  bool has(uint32_t x) const { return stamp[x] == epoch; }
  void put(uint32_t x) { stamp[x] = epoch; }
};
thread_local Marks tl_marks;
thread_local std::vector<Point> tl_buf;

}  // namespace

PermGroup::PermGroup(size_t degree, std::vector<Perm> gens) : n_(degree), gens_(std::move(gens)) {
  for (const auto &g : gens_)
    if (g.degree() != n_) throw PermError("generator degree mismatch");
}

uint64_t PermGroup::order() const {
  if (!enumerated()) throw PermError("group not enumerated");
  return order_;
}

void PermGroup::build_index() {
  size_t cap = 16;
  while (cap < 2 * std::max<uint64_t>(order_, 1)) cap <<= 1;
  slots_.assign(cap, kNone);
  mask_ = cap - 1;
  for (uint32_t i = 0; i < order_; ++i) {
    size_t h = hash_row(row(i), n_) & mask_;
    while (slots_[h] != kNone) h = (h + 1) & mask_;
    slots_[h] = i;
  }
}

uint32_t PermGroup::find(const Point *img) const {
  if (slots_.empty()) return kNone;
  size_t h = hash_row(img, n_) & mask_;
  while (true) {
    uint32_t s = slots_[h];
    if (s == kNone) return kNone;
    if (std::memcmp(row(s), img, n_ * sizeof(Point)) == 0) return s;
    h = (h + 1) & mask_;
  }
}

void PermGroup::enumerate(uint64_t bound, bool parallel) {
  if (enumerated()) return;
  data_.assign(n_, 0);
  std::iota(data_.begin(), data_.end(), Point(0));
  order_ = 1;
  build_index();
  std::vector<std::vector<Point>> g(gens_.size());
  for (size_t s = 0; s < gens_.size(); ++s) g[s] = gens_[s].images();

  auto insert = [&](const Point *img) {
    if (find(img) != kNone) return false;
    if (order_ >= bound)
      throw TooLargeError("group too large to enumerate (bound " + std::to_string(bound) + ")", order_ + 1);
    data_.insert(data_.end(), img, img + n_);
    ++order_;
    if (2 * order_ > slots_.size()) {
      build_index();
    } else {
      size_t h = hash_row(img, n_) & mask_;
      while (slots_[h] != kNone) h = (h + 1) & mask_;
      slots_[h] = static_cast<uint32_t>(order_ - 1);
    }
    return true;
  };

  uint64_t lo = 0, hi = 1;  // current frontier [lo, hi)
  std::vector<Point> buf(n_);
  while (lo < hi) {
    if (parallel) {
      // Products are computed in parallel; insertion stays serial and ordered.
      int64_t m = static_cast<int64_t>(hi - lo);
      std::vector<std::vector<uint64_t>> found;
#pragma omp parallel
      {
#ifdef _OPENMP
        int nt = omp_get_num_threads(), tid = omp_get_thread_num();
#else
        int nt = 1, tid = 0;
#endif
#pragma omp single
        found.assign(nt, {});
        std::vector<Point> b(n_);
#pragma omp for schedule(static)
        for (int64_t k = 0; k < m; ++k) {
          const Point *x = &data_[(lo + k) * n_];
          for (size_t s = 0; s < g.size(); ++s) {
            for (size_t i = 0; i < n_; ++i) b[i] = g[s][x[i]];
            if (find(b.data()) == kNone) found[tid].push_back(uint64_t(lo + k) * g.size() + s);
          }
        }
      }
      std::vector<uint64_t> all;
      for (auto &v : found) all.insert(all.end(), v.begin(), v.end());
      std::sort(all.begin(), all.end());
      for (auto code : all) {
        uint64_t xi = code / g.size(), s = code % g.size();
        const Point *x = &data_[xi * n_];
        for (size_t i = 0; i < n_; ++i) buf[i] = g[s][x[i]];
        insert(buf.data());
      }
    } else {
      for (uint64_t k = lo; k < hi; ++k) {
        for (size_t s = 0; s < g.size(); ++s) {
          const Point *x = &data_[k * n_];
          for (size_t i = 0; i < n_; ++i) buf[i] = g[s][x[i]];
          insert(buf.data());
        }
      }
    }
    lo = hi;
    hi = order_;
  }
  // Canonical order: lexicographic on image sequences.
  std::vector<uint32_t> idx(order_);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    return std::lexicographical_compare(row(a), row(a) + n_, row(b), row(b) + n_);
  });
  std::vector<Point> sorted(data_.size());
  for (size_t i = 0; i < idx.size(); ++i) std::memcpy(&sorted[i * n_], row(idx[i]), n_ * sizeof(Point));
  data_.swap(sorted);
  build_index();
}

Perm PermGroup::element(uint32_t i) const { return Perm(std::vector<Point>(row(i), row(i) + n_)); }

uint32_t PermGroup::index_of(const Perm &p) const {
  if (p.degree() != n_) throw PermError("degree mismatch");
  uint32_t i = find(p.data());
  if (i == kNone) throw PermError("element not in group: " + p.str());
  return i;
}

uint32_t PermGroup::mul(uint32_t a, uint32_t b) const {
  tl_buf.resize(n_);
  const Point *x = row(a), *y = row(b);
  for (size_t i = 0; i < n_; ++i) tl_buf[i] = y[x[i]];
  return find(tl_buf.data());
}

uint32_t PermGroup::inv(uint32_t a) const {
  std::call_once(*inv_once_, [&] {
    inv_.assign(order_, 0);
#pragma omp parallel
    {
      std::vector<Point> b(n_);
#pragma omp for schedule(static)
      for (int64_t i = 0; i < int64_t(order_); ++i) {
        const Point *x = row(uint32_t(i));
        for (size_t k = 0; k < n_; ++k) b[x[k]] = static_cast<Point>(k);
        inv_[i] = find(b.data());
      }
    }
  });
  return inv_[a];
}

uint32_t PermGroup::conj(uint32_t x, uint32_t g) const {
  tl_buf.resize(n_);
  const Point *gi = row(inv(g)), *xr = row(x), *gr = row(g);
  for (size_t i = 0; i < n_; ++i) tl_buf[i] = gr[xr[gi[i]]];
  return find(tl_buf.data());
}

uint32_t PermGroup::pow(uint32_t x, int64_t k) const {
  uint32_t base = k < 0 ? inv(x) : x;
  uint64_t e = k < 0 ? uint64_t(-k) : uint64_t(k);
  uint32_t r = 0;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

uint32_t PermGroup::elem_order(uint32_t x) const {
  classes();
  if (ord_[x] != 255) return ord_[x];
  return static_cast<uint32_t>(element(x).order());
}

uint32_t PermGroup::fixed_points(uint32_t x) const {
  const Point *r = row(x);
  uint32_t c = 0;
  for (size_t i = 0; i < n_; ++i) c += r[i] == i;
  return c;
}

std::vector<uint32_t> PermGroup::generator_indices() const {
  std::vector<uint32_t> out;
  for (const auto &g : gens_) out.push_back(index_of(g));
  return out;
}

ClassTable compute_classes(const PermGroup &G, bool parallel) {
  uint64_t N = G.order();
  auto gi = G.generator_indices();
  std::vector<std::vector<uint32_t>> cj(gi.size(), std::vector<uint32_t>(N));
  G.inv(0);
  for (size_t s = 0; s < gi.size(); ++s) {
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (int64_t x = 0; x < int64_t(N); ++x) cj[s][x] = G.conj(uint32_t(x), gi[s]);
    } else {
      for (uint64_t x = 0; x < N; ++x) cj[s][x] = G.conj(uint32_t(x), gi[s]);
    }
  }
  ClassTable t;
  t.class_of.assign(N, kNone);
  t.tau.assign(N, 0);
  std::vector<uint32_t> queue;
  for (uint32_t x = 0; x < N; ++x) {
    if (t.class_of[x] != kNone) continue;
    uint32_t c = static_cast<uint32_t>(t.rep.size());
    t.rep.push_back(x);
    queue.assign(1, x);
    t.class_of[x] = c;
    t.tau[x] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      uint32_t y = queue[h];
      for (size_t s = 0; s < gi.size(); ++s) {
        uint32_t z = cj[s][y];
        if (t.class_of[z] != kNone) continue;
        t.class_of[z] = c;
        t.tau[z] = G.mul(t.tau[y], gi[s]);
        queue.push_back(z);
      }
    }
    t.size.push_back(queue.size());
  }
  return t;
}

const ClassTable &PermGroup::classes() const {
  std::call_once(*cls_once_, [&] {
    cls_ = compute_classes(*this, true);
    ord_.assign(order_, 255);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < int64_t(order_); ++i) {
      uint64_t o = element(uint32_t(i)).order();
      ord_[i] = o < 255 ? uint8_t(o) : uint8_t(255);
    }
    cent_.assign(cls_.count(), nullptr);
  });
  return cls_;
}

std::optional<uint32_t> PermGroup::conjugator(uint32_t x, uint32_t y) const {
  const auto &t = classes();
  if (x >= order_ || y >= order_) throw PermError("element not in group");
  if (t.class_of[x] != t.class_of[y]) return std::nullopt;
  return mul(inv(t.tau[x]), t.tau[y]);
}

const std::vector<uint32_t> &PermGroup::rep_centralizer(uint32_t cls) const {
  const auto &t = classes();
  {
    std::lock_guard<std::mutex> lk(*cent_mu_);
    if (cent_[cls]) return *cent_[cls];
  }
  uint32_t r = t.rep[cls];
  auto v = std::make_shared<std::vector<uint32_t>>();
  v->reserve(order_ / t.size[cls]);
  const Point *rr = row(r);
  std::vector<Point> b(n_);
  for (uint32_t g = 0; g < order_; ++g) {
    // r g = g r
    const Point *gr = row(g);
    bool ok = true;
    for (size_t i = 0; i < n_ && ok; ++i) ok = gr[rr[i]] == rr[gr[i]];
    if (ok) v->push_back(g);
  }
  std::lock_guard<std::mutex> lk(*cent_mu_);
  if (!cent_[cls]) cent_[cls] = v;
  return *cent_[cls];
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(uint32_t x) const { return std::binary_search(elems.begin(), elems.end(), x); }

Bitset Subgroup::bits(size_t group_order) const {
  Bitset b(group_order);
  for (auto x : elems) b.set(x);
  return b;
}

namespace {

// Dimino extension of the marked subgroup `elems` by generator x.
bool dimino_extend(const PermGroup &G, std::vector<uint32_t> &elems, const std::vector<uint32_t> &gens, uint32_t x,
                   const Bitset *allowed, uint64_t cap) {
  Marks &mk = tl_marks;
  if (mk.has(x)) return true;
  std::vector<uint32_t> prev = elems;
  std::vector<uint32_t> reps{0};
  auto add_coset = [&](uint32_t e) {
    if (elems.size() + prev.size() > cap) return false;
    for (auto h : prev) {
      uint32_t y = G.mul(h, e);
      if (allowed && !allowed->test(y)) return false;
      mk.put(y);
      elems.push_back(y);
    }
    reps.push_back(e);
    return true;
  };
  if (!add_coset(x)) return false;
  for (size_t pos = 1; pos < reps.size(); ++pos) {
    uint32_t r = reps[pos];
    for (auto s : gens) {
      uint32_t e = G.mul(r, s);
      if (!mk.has(e) && !add_coset(e)) return false;
    }
    uint32_t e = G.mul(r, x);
    if (!mk.has(e) && !add_coset(e)) return false;
  }
  return true;
}

}  // namespace

std::optional<Subgroup> closure(const PermGroup &G, std::vector<uint32_t> gens, const Bitset *allowed, uint64_t cap) {
  Marks &mk = tl_marks;
  mk.begin(G.order());
  std::vector<uint32_t> elems{0};
  mk.put(0);
  std::vector<uint32_t> used;
  for (auto g : gens) {
    if (mk.has(g)) continue;
    if (allowed && !allowed->test(g)) return std::nullopt;
    if (!dimino_extend(G, elems, used, g, allowed, cap)) return std::nullopt;
    used.push_back(g);
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), std::move(used)};
}

std::optional<Subgroup> join(const PermGroup &G, const Subgroup &S, uint32_t x, const Bitset *allowed, uint64_t cap) {
  Marks &mk = tl_marks;
  mk.begin(G.order());
  for (auto e : S.elems) mk.put(e);
  if (mk.has(x)) return S;
  if (allowed && !allowed->test(x)) return std::nullopt;
  std::vector<uint32_t> gens = S.gens;
  if (gens.empty())
    for (auto e : S.elems)
      if (e) gens.push_back(e);
  std::vector<uint32_t> elems = S.elems;
  if (!dimino_extend(G, elems, gens, x, allowed, cap)) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  gens.push_back(x);
  return Subgroup{std::move(elems), std::move(gens)};
}

Subgroup subgroup_of(const PermGroup &G, const std::vector<Perm> &gens) {
  std::vector<uint32_t> gi;
  for (const auto &g : gens) gi.push_back(G.index_of(g));
  return *closure(G, gi);
}

Subgroup whole_group(const PermGroup &G) {
  Subgroup S;
  S.elems.resize(G.order());
  std::iota(S.elems.begin(), S.elems.end(), 0u);
  S.gens = G.generator_indices();
  return S;
}

bool is_subgroup_set(const PermGroup &G, const std::vector<uint32_t> &elems) {
  if (elems.empty()) return false;
  std::vector<uint32_t> s(elems);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (!std::binary_search(s.begin(), s.end(), 0u)) return false;
  for (auto a : s)
    for (auto b : s)
      if (!std::binary_search(s.begin(), s.end(), G.mul(a, G.inv(b)))) return false;
  return true;
}

std::vector<uint32_t> class_histogram(const PermGroup &G, const Subgroup &S) {
  const auto &t = G.classes();
  std::vector<uint32_t> h(t.count(), 0);
  for (auto x : S.elems) ++h[t.class_of[x]];
  return h;
}

Subgroup conjugate(const PermGroup &G, const Subgroup &S, uint32_t g) {
  Subgroup T;
  T.elems.reserve(S.elems.size());
  for (auto x : S.elems) T.elems.push_back(G.conj(x, g));
  std::sort(T.elems.begin(), T.elems.end());
  for (auto x : S.gens) T.gens.push_back(G.conj(x, g));
  return T;
}

namespace {

// Calls fn(g) for candidate conjugators g with t^g in T (t chosen in S to
// minimise the candidate count); stops when fn returns true.
template <class Fn>
void for_each_candidate(const PermGroup &G, const Subgroup &S, const Subgroup &T, Fn fn) {
  const auto &cls = G.classes();
  auto hT = class_histogram(G, T);
  uint64_t N = G.order();
  uint32_t best = kNone;
  double bestcost = 0;
  for (auto x : S.elems) {
    if (x == 0) continue;
    uint32_t c = cls.class_of[x];
    double cost = double(hT[c]) * double(N / cls.size[c]);
    if (best == kNone || cost < bestcost) {
      best = x;
      bestcost = cost;
    }
  }
  if (best == kNone) {
    for (uint32_t g = 0; g < N; ++g)
      if (fn(g)) return;
    return;
  }
  uint32_t c = cls.class_of[best];
  const auto &C = G.rep_centralizer(c);
  uint32_t tinv = G.inv(cls.tau[best]);
  for (auto r : T.elems) {
    if (cls.class_of[r] != c) continue;
    for (auto z : C) {
      uint32_t g = G.mul(G.mul(tinv, z), cls.tau[r]);
      if (fn(g)) return;
    }
  }
}

}  // namespace

std::optional<uint32_t> conjugate_into(const PermGroup &G, const Subgroup &K, const Subgroup &L) {
  if (L.order() % K.order() != 0) return std::nullopt;
  Bitset bl = L.bits(G.order());
  std::optional<uint32_t> out;
  std::vector<uint32_t> gens = K.gens;
  if (gens.empty())
    for (auto x : K.elems)
      if (x) gens.push_back(x);
  for_each_candidate(G, K, L, [&](uint32_t g) {
    for (auto x : gens)
      if (!bl.test(G.conj(x, g))) return false;
    out = g;
    return true;
  });
  return out;
}

std::optional<uint32_t> conjugating_element(const PermGroup &G, const Subgroup &S, const Subgroup &T) {
  if (S.order() != T.order()) return std::nullopt;
  if (class_histogram(G, S) != class_histogram(G, T)) return std::nullopt;
  return conjugate_into(G, S, T);
}

Subgroup centralizer(const PermGroup &G, uint32_t x) {
  const auto &cls = G.classes();
  uint32_t c = cls.class_of[x];
  uint32_t t = cls.tau[x], ti = G.inv(t);
  Subgroup S;
  for (auto z : G.rep_centralizer(c)) S.elems.push_back(G.mul(G.mul(ti, z), t));
  std::sort(S.elems.begin(), S.elems.end());
  // small generating set
  auto cl = closure(G, {});
  std::vector<uint32_t> gens;
  Subgroup cur = *cl;
  for (auto e : S.elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = *closure(G, gens);
    if (cur.order() == S.order()) break;
  }
  S.gens = gens;
  return S;
}

Subgroup normalizer(const PermGroup &G, const Subgroup &S) {
  if (S.order() <= 1) return whole_group(G);
  Bitset bs = S.bits(G.order());
  std::vector<uint32_t> gens = S.gens;
  if (gens.empty())
    for (auto x : S.elems)
      if (x) gens.push_back(x);
  std::vector<uint32_t> found;
  for_each_candidate(G, S, S, [&](uint32_t g) {
    for (auto x : gens)
      if (!bs.test(G.conj(x, g))) return false;
    found.push_back(g);
    return false;
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  Subgroup Nrm;
  Nrm.elems = std::move(found);
  Subgroup cur = S;
  std::vector<uint32_t> ng = S.gens;
  for (auto e : Nrm.elems) {
    if (cur.order() == Nrm.order()) break;
    if (cur.contains(e)) continue;
    cur = *join(G, cur, e);
    ng.push_back(e);
  }
  Nrm.gens = cur.gens;
  return Nrm;
}

std::set<uint64_t> spectrum(const PermGroup &G) {
  G.classes();
  std::set<uint64_t> s;
  for (auto r : G.classes().rep) s.insert(G.elem_order(r));
  return s;
}

std::set<uint64_t> spectrum(const PermGroup &G, const Subgroup &S) {
  G.classes();
  std::set<uint64_t> s;
  for (auto x : S.elems) s.insert(G.elem_order(x));
  return s;
}

std::set<uint64_t> prime_set(uint64_t order) {
  auto v = std::vector<uint64_t>();
  for (uint64_t d = 2; d * d <= order; ++d)
    if (order % d == 0) {
      v.push_back(d);
      while (order % d == 0) order /= d;
    }
  if (order > 1) v.push_back(order);
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------

Perm CosetAction::perm_of(const PermGroup &G, uint32_t x) const {
  std::vector<Point> img(index());
  for (size_t c = 0; c < index(); ++c) img[c] = static_cast<Point>(coset_of[G.mul(coset_rep[c], x)]);
  return Perm(std::move(img));
}

uint32_t CosetAction::fixed_points(const PermGroup &G, uint32_t x) const {
  uint32_t n = 0;
  for (size_t c = 0; c < index(); ++c) n += coset_of[G.mul(coset_rep[c], x)] == c;
  return n;
}

CosetAction coset_action(const PermGroup &G, const Subgroup &H) {
  if (!is_subgroup_set(G, H.elems) && H.order() <= 2000) throw PermError("coset_action: H is not a subgroup");
  uint64_t N = G.order();
  if (N % H.order() != 0) throw PermError("coset_action: H is not a subgroup");
  if (N / H.order() > 65535) throw PermError("coset_action: index too large");
  CosetAction A;
  A.coset_of.assign(N, kNone);
  for (uint32_t x = 0; x < N; ++x) {
    if (A.coset_of[x] != kNone) continue;
    uint32_t id = static_cast<uint32_t>(A.coset_rep.size());
    A.coset_rep.push_back(x);
    for (auto h : H.elems) {
      uint32_t y = G.mul(h, x);
      if (A.coset_of[y] != kNone) throw PermError("coset_action: H is not a subgroup");
      A.coset_of[y] = id;
    }
  }
  std::vector<Perm> gens;
  for (auto g : G.generator_indices()) gens.push_back(A.perm_of(G, g));
  A.image = PermGroup(A.index(), std::move(gens));
  return A;
}

std::vector<Perm> enumerate_elements(size_t degree, const std::vector<Perm> &gens, uint64_t bound) {
  PermGroup G(degree, gens);
  G.enumerate(bound);
  std::vector<Perm> out;
  out.reserve(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) out.push_back(G.element(i));
  return out;
}

uint32_t ImplicitCosetAction::fixed_points(const Perm &x, const std::vector<Perm> &H) const {
  uint32_t n = 0;
  for (const auto &r : coset_reps) {
    Perm y = r * x * r.inverse();
    n += std::binary_search(H.begin(), H.end(), y);
  }
  return n;
}

ImplicitCosetAction implicit_coset_action(const std::vector<Perm> &gens, const std::vector<Perm> &H_elems,
                                          uint64_t max_index) {
  if (gens.empty()) throw PermError("no generators");
  size_t n = gens[0].degree();
  // least element of the coset H g, compared image by image without building
  // the candidates
  std::vector<Point> flat;
  flat.reserve(H_elems.size() * n);
  for (const auto &h : H_elems) flat.insert(flat.end(), h.images().begin(), h.images().end());
  auto key_of = [&](const Perm &g) {
    const Point *best = flat.data();
    for (size_t i = 1; i < H_elems.size(); ++i) {
      const Point *h = flat.data() + i * n;
      for (size_t k = 0; k < n; ++k) {
        Point a = g[h[k]], b = g[best[k]];
        if (a != b) {
          if (a < b) best = h;
          break;
        }
      }
    }
    std::vector<Point> img(n);
    for (size_t k = 0; k < n; ++k) img[k] = g[best[k]];
    return Perm(std::move(img));
  };
  ImplicitCosetAction A;
  std::map<std::vector<Point>, uint32_t> id;
  std::vector<Perm> reps{key_of(Perm(n))};
  id[reps[0].images()] = 0;
  std::vector<std::vector<Point>> img(gens.size());
  for (size_t c = 0; c < reps.size(); ++c) {
    for (size_t s = 0; s < gens.size(); ++s) {
      Perm k = key_of(reps[c] * gens[s]);
      auto it = id.find(k.images());
      uint32_t j;
      if (it == id.end()) {
        j = static_cast<uint32_t>(reps.size());
        if (j >= max_index) throw TooLargeError("coset action index too large", j);
        id.emplace(k.images(), j);
        reps.push_back(std::move(k));
      } else {
        j = it->second;
      }
      img[s].push_back(static_cast<Point>(j));
    }
  }
  A.index = reps.size();
  for (auto &v : img) A.gen_images.emplace_back(std::move(v));
  A.coset_reps = std::move(reps);
  return A;
}

StabChain::StabChain(size_t degree, const std::vector<Perm> &gens) : n_(degree) {
  const Perm id(degree);
  auto add = [&](Perm g, size_t k) {
    if (k == levels_.size()) {
      size_t p = 0;
      while (g[p] == p) ++p;
      base_.push_back(Point(p));
      levels_.emplace_back();
    }
    levels_[k].gens.push_back(std::move(g));
    for (size_t j = 0; j <= k; ++j) rebuild_orbit(j);
  };
  for (const auto &g : gens) {
    if (g.degree() != degree) throw PermError("StabChain: degree mismatch");
    auto [r, k] = sift(g, 0);
    if (r != id) add(std::move(r), k);
  }
  // Close levels from the bottom up: every Schreier generator of level i
  // must sift to the identity through levels i+1, ...
  size_t i = levels_.size();
  while (i-- > 0) {
    bool added = false;
    for (size_t a = 0; a < levels_[i].orbit.size() && !added; ++a) {
      for (size_t j = i; j < levels_.size() && !added; ++j)
        for (size_t s = 0; s < levels_[j].gens.size() && !added; ++s) {
          const Perm &u = levels_[i].reps[a];
          const Perm &x = levels_[j].gens[s];
          Point img = x[levels_[i].orbit[a]];
          Perm sch = u * x * levels_[i].reps[levels_[i].trans[img]].inverse();
          auto [r, k] = sift(std::move(sch), i + 1);
          if (r != id) {
            add(std::move(r), k);
            i = levels_.size();  // restart from the bottom
            added = true;
          }
        }
    }
  }
}

void StabChain::rebuild_orbit(size_t i) {
  Level &L = levels_[i];
  L.trans.assign(n_, -1);
  L.orbit = {base_[i]};
  L.reps = {Perm(n_)};
  L.trans[base_[i]] = 0;
  for (size_t k = 0; k < L.orbit.size(); ++k)
    for (size_t j = i; j < levels_.size(); ++j)
      for (const auto &g : levels_[j].gens) {
        Point t = g[L.orbit[k]];
        if (L.trans[t] >= 0) continue;
        L.trans[t] = int32_t(L.orbit.size());
        L.orbit.push_back(t);
        L.reps.push_back(L.reps[k] * g);
      }
}

std::pair<Perm, size_t> StabChain::sift(Perm g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    int32_t t = levels_[i].trans[g[base_[i]]];
    if (t < 0) return {std::move(g), i};
    g = g * levels_[i].reps[t].inverse();
  }
  return {std::move(g), levels_.size()};
}

uint64_t StabChain::order() const {
  uint64_t o = 1;
  for (const auto &L : levels_) o *= L.orbit.size();
  return o;
}

bool StabChain::contains(const Perm &g) const {
  if (g.degree() != n_) return false;
  return sift(g, 0).first == Perm(n_);
}

uint64_t order_by_point_stabilizer(size_t degree, const std::vector<Perm> &gens, uint64_t bound) {
  std::vector<int64_t> where(degree, -1);
  std::vector<Point> orbit{0};
  std::vector<Perm> trans{Perm(degree)};
  where[0] = 0;
  for (size_t k = 0; k < orbit.size(); ++k)
    for (const auto &s : gens) {
      Point y = s[orbit[k]];
      if (where[y] >= 0) continue;
      where[y] = static_cast<int64_t>(orbit.size());
      orbit.push_back(y);
      trans.push_back(trans[k] * s);
    }
  std::set<std::vector<Point>> sch;
  for (size_t k = 0; k < orbit.size(); ++k)
    for (const auto &s : gens) {
      Perm u = trans[k] * s;
      Perm g = u * trans[where[u[0]]].inverse();
      if (!g.is_identity()) sch.insert(g.images());
    }
  std::vector<Perm> sg;
  for (const auto &v : sch) sg.emplace_back(v);
  PermGroup St(degree, sg);
  St.enumerate(bound);
  return orbit.size() * St.order();
}

// ---------------------------------------------------------------------------

ActionView ActionView::natural(const PermGroup &G) {
  ActionView v;
  v.group = &G;
  v.points = G.degree();
  v.fix = [&G](uint32_t x) { return G.fixed_points(x); };
  return v;
}

ActionView ActionView::on_cosets(const PermGroup &G, const CosetAction &A) {
  ActionView v;
  v.group = &G;
  v.points = A.index();
  v.fix = [&G, &A](uint32_t x) { return A.fixed_points(G, x); };
  return v;
}

ActionStat action_stats(const ActionView &v, uint32_t x, const Subgroup *H) {
  ActionStat s;
  s.fixed = v.fix(x);
  uint64_t g = std::gcd<uint64_t, uint64_t>(s.fixed, v.points);
  s.fpr_num = s.fixed / g;
  s.fpr_den = v.points / g;
  if (H) {
    const auto &cls = v.group->classes();
    uint32_t c = cls.class_of[x];
    uint64_t meet = 0;
    for (auto h : H->elems) meet += cls.class_of[h] == c;
    uint64_t d = std::gcd<uint64_t, uint64_t>(meet, cls.size[c]);
    s.cls_num = meet / d;
    s.cls_den = cls.size[c] / d;
  }
  return s;
}

uint64_t minimal_degree(const ActionView &v) {
  const auto &cls = v.group->classes();
  if (cls.count() <= 1) throw PermError("minimal_degree: trivial group");
  uint64_t best = UINT64_MAX;
  for (size_t c = 1; c < cls.count(); ++c) best = std::min<uint64_t>(best, v.points - v.fix(cls.rep[c]));
  return best;
}

// ---------------------------------------------------------------------------

std::vector<uint32_t> small_generating_set(const PermGroup &G, const Subgroup &S) {
  std::vector<uint32_t> gens;
  Subgroup cur = *closure(G, {});
  for (auto e : S.elems) {
    if (cur.order() == S.order()) break;
    if (cur.contains(e)) continue;
    cur = *join(G, cur, e);
    gens.push_back(e);
  }
  return gens;
}

Subgroup subgroup_from_elements(const PermGroup &G, std::vector<uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  Subgroup S;
  S.elems = std::move(elems);
  S.gens = small_generating_set(G, S);
  return S;
}

namespace {

struct Candidate {
  Subgroup S;
  bool operator<(const Candidate &o) const {
    if (S.order() != o.S.order()) return S.order() < o.S.order();
    return S.elems < o.S.elems;
  }
};

}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const PermGroup &G, const LatticeOptions &opt) {
  uint64_t N = G.order();
  if (N > opt.bound)
    throw TooLargeError("subgroup enumeration bound exceeded (|G| = " + std::to_string(N) +
                            "); use the targeted constructions instead",
                        N);
  G.classes();
  const Bitset *allowed = opt.allowed;

  // Cyclic subgroups of prime-power order, each with its least generator.
  std::vector<uint32_t> cyc_of(N, kNone);
  std::vector<uint32_t> cyc_gen;
  for (uint32_t x = 1; x < N; ++x) {
    if (cyc_of[x] != kNone) continue;
    if (allowed && !allowed->test(x)) continue;
    uint32_t o = G.elem_order(x);
    auto pf = prime_set(o);
    if (pf.size() != 1) continue;
    uint32_t id = static_cast<uint32_t>(cyc_gen.size());
    uint32_t least = x;
    uint32_t y = x;
    for (uint32_t k = 1; k < o; ++k) {
      if (k % *pf.begin() != 0) {
        cyc_of[y] = id;
        least = std::min(least, y);
      }
      y = G.mul(y, x);
    }
    cyc_gen.push_back(least);
  }

  std::vector<Subgroup> reps;
  std::map<std::pair<uint64_t, std::vector<uint32_t>>, std::vector<uint32_t>> buckets;
  auto key_of = [&](const Subgroup &S) { return std::make_pair(S.order(), class_histogram(G, S)); };
  auto known = [&](const Subgroup &S) {
    auto it = buckets.find(key_of(S));
    if (it == buckets.end()) return false;
    for (auto r : it->second)
      if (conjugating_element(G, S, reps[r])) return true;
    return false;
  };

  Subgroup triv = *closure(G, {});
  reps.push_back(triv);
  buckets[key_of(triv)].push_back(0);
  std::vector<uint32_t> frontier{0};

  while (!frontier.empty()) {
    std::vector<std::vector<Candidate>> per(frontier.size());
    auto expand = [&](size_t fi) {
      const Subgroup &S = reps[frontier[fi]];
      Subgroup Nm = normalizer(G, S);
      auto ng = small_generating_set(G, Nm);
      std::vector<char> seen(cyc_gen.size(), 0);
      std::set<std::vector<uint32_t>> local;
      for (size_t c = 0; c < cyc_gen.size(); ++c) {
        if (seen[c]) continue;
        // orbit of c under N(S)
        std::vector<uint32_t> orb{static_cast<uint32_t>(c)};
        seen[c] = 1;
        for (size_t h = 0; h < orb.size(); ++h)
          for (auto g : ng) {
            uint32_t d = cyc_of[G.conj(cyc_gen[orb[h]], g)];
            if (d != kNone && !seen[d]) {
              seen[d] = 1;
              orb.push_back(d);
            }
          }
        if (S.contains(cyc_gen[c])) continue;
        auto T = join(G, S, cyc_gen[c], allowed);
        if (!T) continue;
        if (local.insert(T->elems).second) per[fi].push_back({std::move(*T)});
      }
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int64_t fi = 0; fi < int64_t(frontier.size()); ++fi) expand(size_t(fi));
    } else {
      for (size_t fi = 0; fi < frontier.size(); ++fi) expand(fi);
    }
    std::vector<Candidate> all;
    for (auto &v : per)
      for (auto &c : v) all.push_back(std::move(c));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end(),
                          [](const Candidate &a, const Candidate &b) { return a.S.elems == b.S.elems; }),
              all.end());
    // Drop candidates conjugate to earlier layers (read-only, parallel).
    std::vector<char> old(all.size(), 0);
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (int64_t i = 0; i < int64_t(all.size()); ++i) old[i] = known(all[i].S);
    } else {
      for (size_t i = 0; i < all.size(); ++i) old[i] = known(all[i].S);
    }
    frontier.clear();
    for (size_t i = 0; i < all.size(); ++i) {
      if (old[i] || known(all[i].S)) continue;
      uint32_t id = static_cast<uint32_t>(reps.size());
      buckets[key_of(all[i].S)].push_back(id);
      reps.push_back(std::move(all[i].S));
      frontier.push_back(id);
    }
  }
  std::vector<Subgroup> out;
  for (auto &r : reps)
    if (r.order() >= opt.min_order) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  for (auto &r : out) r.gens = small_generating_set(G, r);
  return out;
}

}  // namespace fixerlab
