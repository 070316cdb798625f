#include "fixerlab/psl2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace fixerlab {

namespace {

uint32_t mod_f(int64_t k, uint32_t f) { return uint32_t(((k % int64_t(f)) + f) % f); }

std::vector<OuterElem> outer_closure(uint32_t q, const std::vector<OuterElem> &gens) {
  auto [p, f] = prime_power(q);
  std::set<OuterElem> seen{OuterElem{}};
  std::vector<OuterElem> todo{OuterElem{}};
  while (!todo.empty()) {
    OuterElem x = todo.back();
    todo.pop_back();
    for (const auto &g : gens) {
      OuterElem y{p == 2 ? 0u : (x.e + g.e) % 2, (x.k + g.k) % f};
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string phi_str(uint32_t k) { return k == 1 ? "phi" : "phi^" + std::to_string(k); }

}  // namespace

// ---------------------------------------------------------------------------
// Group specs

std::string GroupSpec::label() const {
  auto [p, f] = prime_power(q);
  auto O = outer_closure(q, outer);
  const std::string qs = "(" + std::to_string(q) + ")";
  bool has_delta = std::find(O.begin(), O.end(), OuterElem{1, 0}) != O.end();
  // smallest k > 0 with some delta^e phi^k in O
  uint32_t k = f;
  bool mixed = false;
  for (const auto &o : O)
    if (o.k != 0 && o.k < k) {
      k = o.k;
      mixed = !has_delta && o.e == 1;
    }
  if (k == f) return (has_delta ? "PGL2" : "PSL2") + qs;
  if (has_delta) return k == 1 ? "PGammaL2" + qs : "PGL2" + qs + ".<" + phi_str(k) + ">";
  if (mixed) return "PSL2" + qs + ".<delta*" + phi_str(k) + ">";
  if (k == 1) return (p == 2 ? "PGammaL2" : "PSigmaL2") + qs;
  return "PSL2" + qs + ".<" + phi_str(k) + ">";
}

std::vector<GroupSpec> all_group_specs(uint32_t q) {
  auto [p, f] = prime_power(q);
  std::vector<GroupSpec> out;
  for (uint32_t k = f; k >= 1; --k) {
    if (f % k) continue;
    std::vector<OuterElem> phi_part;
    if (k < f) phi_part.push_back({0, k});
    out.push_back({q, phi_part});
    if (p == 2) continue;
    auto with_delta = phi_part;
    with_delta.insert(with_delta.begin(), OuterElem{1, 0});
    out.push_back({q, with_delta});
    if (k < f && (f / k) % 2 == 0) out.push_back({q, {{1, k}}});
  }
  return out;
}

GroupSpec socle_spec(uint32_t q) { return {q, {}}; }
GroupSpec pgl_spec(uint32_t q) {
  auto [p, f] = prime_power(q);
  return p == 2 ? GroupSpec{q, {}} : GroupSpec{q, {{1, 0}}};
}
GroupSpec pgammal_spec(uint32_t q) {
  auto s = pgl_spec(q);
  auto [p, f] = prime_power(q);
  if (f > 1) s.outer.push_back({0, 1});
  return s;
}
GroupSpec field_spec(uint32_t q, uint32_t k) {
  auto [p, f] = prime_power(q);
  if (k % f == 0) return {q, {}};
  return {q, {{0, k % f}}};
}

bool is_pgl_contained(const PSL2 &L, const GroupSpec &spec) {
  if (L.p() == 2) return true;
  auto O = L.outer_group(spec);
  return std::find(O.begin(), O.end(), OuterElem{1, 0}) != O.end();
}

bool is_psigmal_contained(const PSL2 &L, const GroupSpec &spec) {
  for (const auto &o : L.outer_group(spec))
    if (o.e) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PSL2

PSL2::PSL2(uint32_t q) : F_(FieldCtx::get(q)), gamma_(std::make_unique<Gamma>(F_)) {
  if (q < 4) throw Psl2Error("PSL2(q) needs q >= 4");
  if (q + 1 > 65535) throw Psl2Error("q too large for 16-bit points");
}

std::shared_ptr<const PSL2> PSL2::get(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, std::shared_ptr<const PSL2>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto &slot = cache[q];
  if (!slot) slot = std::make_shared<const PSL2>(q);
  return slot;
}

SemilinearElem PSL2::canon(std::array<uint32_t, 4> m, int64_t frob) const {
  const FieldCtx &F = *F_;
  if (F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2])) == 0) throw Psl2Error("singular matrix");
  uint32_t lead = m[0] ? m[0] : m[1];
  uint32_t il = F.inv(lead);
  for (auto &v : m) v = F.mul(v, il);
  return {m, mod_f(frob, f())};
}

SemilinearElem PSL2::make(uint32_t a, uint32_t b, uint32_t c, uint32_t dd, int64_t frob) const {
  return canon({a, b, c, dd}, frob);
}

SemilinearElem PSL2::mul(const SemilinearElem &x, const SemilinearElem &y) const {
  const FieldCtx &F = *F_;
  std::array<uint32_t, 4> a;
  for (int k = 0; k < 4; ++k) a[k] = F.frob(x.m[k], y.frob);
  const auto &b = y.m;
  std::array<uint32_t, 4> c{F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
                            F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
  return canon(c, int64_t(x.frob) + y.frob);
}

SemilinearElem PSL2::inv(const SemilinearElem &x) const {
  const FieldCtx &F = *F_;
  // adjugate is the inverse up to scalars
  std::array<uint32_t, 4> a{x.m[3], F.neg(x.m[1]), F.neg(x.m[2]), x.m[0]};
  for (auto &v : a) v = F.frob(v, -int64_t(x.frob));
  return canon(a, -int64_t(x.frob));
}

SemilinearElem PSL2::pow(const SemilinearElem &x, int64_t k) const {
  SemilinearElem base = k < 0 ? inv(x) : x, r = identity();
  uint64_t e = k < 0 ? uint64_t(-k) : uint64_t(k);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

SemilinearElem PSL2::conj(const SemilinearElem &x, const SemilinearElem &g) const { return mul(mul(inv(g), x), g); }

Point PSL2::apply(const SemilinearElem &x, Point pt) const {
  const FieldCtx &F = *F_;
  uint32_t v0, v1;
  if (pt == q()) {
    v0 = 1;
    v1 = 0;
  } else {
    v0 = F.frob(pt, x.frob);
    v1 = 1;
  }
  uint32_t w0 = F.add(F.mul(v0, x.m[0]), F.mul(v1, x.m[2]));
  uint32_t w1 = F.add(F.mul(v0, x.m[1]), F.mul(v1, x.m[3]));
  if (w1 == 0) return Point(q());
  return Point(F.div(w0, w1));
}

Perm PSL2::perm(const SemilinearElem &x) const {
  std::vector<Point> img(degree());
  for (size_t i = 0; i < img.size(); ++i) img[i] = apply(x, Point(i));
  return Perm(std::move(img));
}

namespace {
// Matrix sending inf, 0, 1 to the given points (row vectors).
std::array<uint32_t, 4> frame_matrix(const FieldCtx &F, uint32_t q, Point Pinf, Point P0, Point P1) {
  auto vec = [&](Point x) { return x == q ? std::array<uint32_t, 2>{1, 0} : std::array<uint32_t, 2>{x, 1}; };
  auto a = vec(Pinf), b = vec(P0), c = vec(P1);
  uint32_t det = F.sub(F.mul(a[0], b[1]), F.mul(b[0], a[1]));
  if (det == 0) throw Psl2Error("points not distinct");
  uint32_t al = F.div(F.sub(F.mul(c[0], b[1]), F.mul(b[0], c[1])), det);
  uint32_t be = F.div(F.sub(F.mul(a[0], c[1]), F.mul(c[0], a[1])), det);
  return {F.mul(al, a[0]), F.mul(al, a[1]), F.mul(be, b[0]), F.mul(be, b[1])};
}
}  // namespace

SemilinearElem PSL2::from_perm(const Perm &g) const {
  if (g.degree() != degree()) throw Psl2Error("degree mismatch");
  auto M = frame_matrix(*F_, q(), g[q()], g[0], g[1]);
  for (uint32_t i = 0; i < f(); ++i) {
    SemilinearElem x = canon(M, i);
    bool ok = true;
    for (size_t pt = 0; pt < degree() && ok; ++pt) ok = apply(x, Point(pt)) == g[pt];
    if (ok) return x;
  }
  throw Psl2Error("permutation is not induced by PGammaL2(q)");
}

OuterElem PSL2::outer_part(const SemilinearElem &x) const {
  const FieldCtx &F = *F_;
  uint32_t det = F.sub(F.mul(x.m[0], x.m[3]), F.mul(x.m[1], x.m[2]));
  uint32_t e = (p() != 2 && F.log(det) % 2 == 1) ? 1 : 0;
  return {e, x.frob};
}

SemilinearElem PSL2::outer_rep(const OuterElem &o) const {
  uint32_t nu = o.e ? F_->primitive().code() : 1;
  return make(nu, 0, 0, 1, o.k);
}

std::vector<OuterElem> PSL2::outer_group(const GroupSpec &spec) const {
  if (spec.q != q()) throw Psl2Error("spec for another field");
  return outer_closure(q(), spec.outer);
}

bool PSL2::in_group(const SemilinearElem &x, const GroupSpec &spec) const {
  auto O = outer_group(spec);
  return std::binary_search(O.begin(), O.end(), outer_part(x));
}

std::vector<SemilinearElem> PSL2::socle_generators() const {
  const FieldCtx &F = *F_;
  uint32_t nu = F.primitive().code();
  return {u(1), u(nu), diag(nu, F.inv(nu)), w()};
}

std::vector<SemilinearElem> PSL2::group_generators(const GroupSpec &spec) const {
  auto g = socle_generators();
  for (const auto &o : spec.outer) g.push_back(outer_rep(o));
  return g;
}

std::vector<Perm> PSL2::perms(const std::vector<SemilinearElem> &xs) const {
  std::vector<Perm> out;
  out.reserve(xs.size());
  for (const auto &x : xs) out.push_back(perm(x));
  return out;
}

GammaElem PSL2::rho(const SemilinearElem &x) const {
  if (!normalizes_Q(x)) throw Psl2Error("element does not normalise Q");
  const FieldCtx &F = *F_;
  const int64_t mi = -int64_t(x.frob);
  uint32_t lam = F.frob(x.m[0], mi), b = F.frob(x.m[1], mi), mu = F.frob(x.m[3], mi);
  return gamma_->make(F.div(b, mu), F.div(mu, lam), x.frob);
}

SemilinearElem PSL2::rho_inv(const GammaElem &g) const {
  const FieldCtx &F = *F_;
  uint32_t b = F.mul(g.a, g.lam);
  return make(1, F.frob(b, g.i), 0, F.frob(g.lam, g.i), g.i);
}

std::vector<Point> PSL2::subline(uint32_t f0) const {
  if (f0 == 0 || f() % f0) throw Psl2Error("not a subfield degree");
  std::vector<Point> s;
  for (auto c : F_->subfield(f0)) s.push_back(Point(c));
  s.push_back(infinity());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Point> PSL2::unit_circle() const {
  if (f() % 2) throw Psl2Error("unit circle needs even f");
  uint32_t q0 = 1;
  for (uint32_t j = 0; j < f() / 2; ++j) q0 *= p();
  std::vector<Point> s;
  for (uint32_t x = 1; x < q(); ++x)
    if (F_->pow(x, q0 + 1) == 1) s.push_back(Point(x));
  return s;
}

bool PSL2::stabilizes(const SemilinearElem &x, const std::vector<Point> &set) const {
  for (auto pt : set)
    if (!std::binary_search(set.begin(), set.end(), apply(x, pt))) return false;
  return true;
}

std::string PSL2::str(const SemilinearElem &x) const {
  std::ostringstream os;
  const FieldCtx &F = *F_;
  os << "[" << F.to_string(x.m[0]) << "," << F.to_string(x.m[1]) << ";" << F.to_string(x.m[2]) << ","
     << F.to_string(x.m[3]) << "]";
  if (x.frob) os << "*phi^" << x.frob;
  return os.str();
}

// ---------------------------------------------------------------------------
// Affine families

std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::L_I: return "L_I";
    case FamilyKind::L_II: return "L_II";
    case FamilyKind::L_III: return "L_III";
    case FamilyKind::M: return "M";
    case FamilyKind::case_a: return "case_a";
    case FamilyKind::case_c: return "case_c";
    case FamilyKind::Q: return "Q";
    case FamilyKind::P1: return "P1";
  }
  return "?";
}

std::vector<SemilinearElem> AffineFamily::generators(const PSL2 &L) const {
  std::vector<SemilinearElem> g;
  for (auto a : unipotent_basis) g.push_back(L.u(a));
  for (const auto &t : complement)
    if (t != L.gamma().identity()) g.push_back(L.rho_inv(t));
  return g;
}

bool AffineFamily::contains(const PSL2 &L, const SemilinearElem &x) const {
  if (!L.normalizes_Q(x)) return false;
  GammaElem g = L.rho(x);
  GammaElem t{0, g.lam, g.i};
  return std::binary_search(unipotent.begin(), unipotent.end(), g.a) &&
         std::binary_search(complement.begin(), complement.end(), t);
}

namespace {

// GF(p)-span of generators, as a sorted element list plus a basis.
void additive_span(const FieldCtx &F, const std::vector<uint32_t> &gens, std::vector<uint32_t> &elems,
                   std::vector<uint32_t> &basis) {
  std::set<uint32_t> S{0};
  basis.clear();
  for (auto g : gens) {
    if (S.count(g)) continue;
    basis.push_back(g);
    std::vector<uint32_t> cur(S.begin(), S.end());
    for (auto s : cur) {
      uint32_t v = s;
      for (uint32_t k = 1; k < F.p(); ++k) {
        v = F.add(v, g);
        S.insert(v);
      }
    }
  }
  elems.assign(S.begin(), S.end());
}

uint32_t subfield_degree(const PSL2 &L, uint32_t r, const char *what) {
  if (r == 0 || L.f() % r || !is_prime(r))
    throw Psl2Error(std::string(what) + ": need q = q0^r with r prime");
  return L.f() / r;
}

}  // namespace

std::vector<Point> family_overgroup_set(const PSL2 &L, FamilyKind kind, uint32_t r) {
  switch (kind) {
    case FamilyKind::L_I:
    case FamilyKind::L_II:
    case FamilyKind::L_III:
    case FamilyKind::M:
      return L.subline(subfield_degree(L, r, "subfield overgroup"));
    case FamilyKind::case_a: {
      std::vector<Point> s{0, L.infinity()};
      return s;
    }
    case FamilyKind::case_c:
      return L.unit_circle();
    default:
      return {0};
  }
}

AffineFamily fixer_family(const PSL2 &L, const GroupSpec &spec, FamilyKind kind, uint32_t r) {
  const FieldCtx &F = L.F();
  const Gamma &Gm = L.gamma();
  const uint32_t p = L.p(), f = L.f(), q = L.q();
  AffineFamily fam;
  fam.name = family_name(kind);

  std::vector<uint32_t> all_field(q);
  std::iota(all_field.begin(), all_field.end(), 0u);
  std::vector<uint32_t> fbasis;
  for (uint32_t j = 0, b = 1; j < f; ++j, b *= p) fbasis.push_back(b);

  auto in_G = [&](const GammaElem &t) { return L.in_group(L.rho_inv(t), spec); };
  auto torus = [&](const std::vector<uint32_t> &lams, auto frob_ok) {
    std::vector<GammaElem> out;
    for (uint32_t i = 0; i < f; ++i) {
      if (!frob_ok(i)) continue;
      for (auto l : lams) {
        GammaElem t = Gm.make(0, l, i);
        if (in_G(t)) out.push_back(t);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<uint32_t> units(all_field.begin() + 1, all_field.end());
  auto any = [](uint32_t) { return true; };
  auto odd_frob = [&](uint32_t i) { return Gm.frob_order(i) % 2 == 1; };
  auto pprime_frob = [&](uint32_t i) { return Gm.frob_order(i) % p != 0; };

  auto trace_zero = [&](uint32_t f0) {
    std::vector<uint32_t> gens;
    for (auto a : all_field)
      if (F.rel_trace(F.elem(a), f0).is_zero()) gens.push_back(a);
    return gens;
  };
  auto subfield_units = [&](uint32_t f0) {
    auto s = F.subfield(f0);
    s.erase(std::remove(s.begin(), s.end(), 0u), s.end());
    return s;
  };

  switch (kind) {
    case FamilyKind::Q:
      additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
      fam.complement = {Gm.identity()};
      break;
    case FamilyKind::P1:
      additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
      fam.complement = torus(units, any);
      break;
    case FamilyKind::L_I: {
      uint32_t f0 = subfield_degree(L, r, "L_I");
      if (r % 2 == 0 || r == p) throw Psl2Error("L_I: need q = q0^r with r an odd prime and r != p");
      additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
      fam.complement = torus(subfield_units(f0), any);
      break;
    }
    case FamilyKind::L_II:
    case FamilyKind::L_III:
    case FamilyKind::M: {
      uint32_t f0 = subfield_degree(L, r, fam.name.c_str());
      if (r != p) throw Psl2Error(fam.name + ": need q = q0^p");
      if (kind != FamilyKind::M && p == 2) throw Psl2Error(fam.name + ": need p odd");
      if (kind == FamilyKind::L_II) {
        additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
        fam.complement = torus(subfield_units(f0), pprime_frob);
      } else {
        additive_span(F, trace_zero(f0), fam.unipotent, fam.unipotent_basis);
        if (kind == FamilyKind::L_III)
          fam.complement = torus(subfield_units(f0), any);
        else
          fam.complement = {Gm.identity()};
      }
      break;
    }
    case FamilyKind::case_a:
      if (p != 2) throw Psl2Error("case_a: need q even");
      additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
      fam.complement = torus(units, odd_frob);
      break;
    case FamilyKind::case_c: {
      if (p != 2 || f % 2) throw Psl2Error("case_c: need q even and f even");
      uint32_t c = (1u << (f / 2)) + 1;
      std::vector<uint32_t> C;
      for (uint32_t k = 0; k < c; ++k) C.push_back(F.exp(uint64_t(k) * ((q - 1) / c)));
      additive_span(F, fbasis, fam.unipotent, fam.unipotent_basis);
      fam.complement = torus(C, any);
      break;
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Enumerated instances

std::string type_name(MaxType t) {
  switch (t) {
    case MaxType::P1: return "P1";
    case MaxType::GL1wrS2: return "GL1(q)wrS2";
    case MaxType::GL1q2: return "GL1(q^2)";
    case MaxType::GL2sub: return "GL2(q0)";
    case MaxType::Extraspecial: return "2^(1+2).O2-(2)";
    case MaxType::A5: return "A5";
    case MaxType::Unknown: return "unknown";
  }
  return "?";
}

Subgroup Psl2Instance::socle_part(const Subgroup &K) const {
  std::vector<uint32_t> e;
  for (auto x : K.elems)
    if (G0bits.test(x)) e.push_back(x);
  return subgroup_from_elements(G, std::move(e));
}

Psl2Instance build_instance(const GroupSpec &spec, uint64_t bound, bool parallel) {
  Psl2Instance I;
  I.L = PSL2::get(spec.q);
  I.spec = spec;
  const PSL2 &L = *I.L;
  uint64_t expect = L.group_order(spec);
  if (expect > bound)
    throw TooLargeError(spec.label() + " exceeds the enumeration bound; use the targeted constructions", expect);
  I.G = PermGroup(L.degree(), L.perms(L.group_generators(spec)));
  I.G.enumerate(bound, parallel);
  if (I.G.order() != expect) throw Psl2Error("group order mismatch for " + spec.label());
  I.G0 = subgroup_of(I.G, L.perms(L.socle_generators()));
  if (I.G0.order() != L.socle_order()) throw Psl2Error("socle order mismatch");
  I.G0bits = I.G0.bits(I.G.order());
  return I;
}

Subgroup set_stabilizer(const PermGroup &G, const std::vector<Point> &set) {
  std::vector<uint32_t> e;
  const uint64_t N = G.order();
  for (uint32_t x = 0; x < N; ++x) {
    const Point *r = G.row(x);
    bool ok = true;
    for (auto pt : set)
      if (!std::binary_search(set.begin(), set.end(), r[pt])) {
        ok = false;
        break;
      }
    if (ok) e.push_back(x);
  }
  return subgroup_from_elements(G, std::move(e));
}

Subgroup realize(const Psl2Instance &I, const std::vector<SemilinearElem> &gens) {
  return subgroup_of(I.G, I.L->perms(gens));
}

Subgroup subgroup_Q(const Psl2Instance &I) {
  const PSL2 &L = *I.L;
  std::vector<SemilinearElem> g;
  for (uint32_t j = 0, b = 1; j < L.f(); ++j, b *= L.p()) g.push_back(L.u(b));
  return realize(I, g);
}

Subgroup subgroup_D(const Psl2Instance &I) {
  const PSL2 &L = *I.L;
  uint32_t nu = L.F().primitive().code();
  SemilinearElem d = L.diag(nu, 1);
  if (!L.in_group(d, I.spec)) d = L.diag(L.F().mul(nu, nu), 1);
  return realize(I, {d});
}

Subgroup subfield_subgroup(const Psl2Instance &I, uint32_t q0) {
  const PSL2 &L = *I.L;
  auto [p0, f0] = prime_power(q0);
  if (p0 != L.p() || L.f() % f0 || f0 == L.f() || !is_prime(L.f() / f0))
    throw Psl2Error("subfield subgroup: need q = q0^r with r prime");
  if (q0 == 2) throw Psl2Error("subfield subgroup: q0 = 2 is excluded (not maximal)");
  return set_stabilizer(I.G, L.subline(f0));
}

namespace {

// Element of G0 generating a nonsplit torus (order (q+1)/(2,q-1), no fixed points).
uint32_t nonsplit_torus_generator(const Psl2Instance &I) {
  const uint32_t want = (I.L->q() + 1) / I.L->d();
  for (auto x : I.G0.elems)
    if (I.G.elem_order(x) == want && I.G.fixed_points(x) == 0) return x;
  throw Psl2Error("no nonsplit torus generator");
}

}  // namespace

std::vector<Subgroup> small_overgroups(const Psl2Instance &I, uint32_t k0_order) {
  uint32_t ab_order;
  switch (k0_order) {
    case 12: ab_order = 3; break;
    case 24: ab_order = 4; break;
    case 60: ab_order = 5; break;
    default: throw Psl2Error("small_overgroups: order must be 12, 24 or 60");
  }
  const PermGroup &G = I.G;
  const auto &cls = G.classes();
  std::vector<uint32_t> threes, twos;
  std::set<uint32_t> seen_cls;
  for (auto x : I.G0.elems) {
    uint32_t o = G.elem_order(x);
    if (o == 2) twos.push_back(x);
    if (o == 3 && seen_cls.insert(cls.class_of[x]).second) threes.push_back(cls.rep[cls.class_of[x]]);
  }
  std::vector<Subgroup> found;
  for (auto b : threes)
    for (auto a : twos) {
      if (G.elem_order(G.mul(a, b)) != ab_order) continue;
      auto K = closure(G, {a, b}, nullptr, k0_order);
      if (!K || K->order() != k0_order) continue;
      bool dup = false;
      for (const auto &S : found)
        if (conjugating_element(G, *K, S)) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(*K);
    }
  std::vector<Subgroup> out;
  for (const auto &K0 : found) {
    Subgroup N = normalizer(G, K0);
    bool dup = false;
    for (const auto &S : out)
      if (conjugating_element(G, N, S)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(N);
  }
  return out;
}

Subgroup maximal_subgroup(const Psl2Instance &I, MaxType t, uint32_t r) {
  const PSL2 &L = *I.L;
  switch (t) {
    case MaxType::P1:
      return set_stabilizer(I.G, {0});
    case MaxType::GL1wrS2:
      return set_stabilizer(I.G, {0, L.infinity()});
    case MaxType::GL1q2: {
      uint32_t x = nonsplit_torus_generator(I);
      return normalizer(I.G, *closure(I.G, {x}));
    }
    case MaxType::GL2sub: {
      if (r == 0 || L.f() % r || !is_prime(r)) throw Psl2Error("GL2(q0): need q = q0^r with r prime");
      uint32_t q0 = 1;
      for (uint32_t j = 0; j < L.f() / r; ++j) q0 *= L.p();
      return subfield_subgroup(I, q0);
    }
    case MaxType::Extraspecial: {
      uint32_t p = L.p();
      if (L.f() != 1 || p < 5) throw Psl2Error("2^(1+2).O2-(2) type: need q = p >= 5");
      uint32_t k = (p % 8 == 1 || p % 8 == 7) ? 24 : 12;
      auto v = small_overgroups(I, k);
      if (v.empty()) throw Psl2Error("no such subgroup");
      return v.front();
    }
    case MaxType::A5: {
      auto v = small_overgroups(I, 60);
      if (v.empty()) throw Psl2Error("no A5 subgroup");
      return v.front();
    }
    default:
      throw Psl2Error("unknown maximal type");
  }
}

MaxType identify_type(const Psl2Instance &I, const Subgroup &H, uint32_t *subfield_q0) {
  const PSL2 &L = *I.L;
  const PermGroup &G = I.G;
  const size_t n = L.degree();
  // orbits of H
  std::vector<int> orb(n, -1);
  std::vector<std::vector<Point>> orbits;
  std::vector<uint32_t> gens = H.gens;
  if (gens.empty()) gens = small_generating_set(G, H);
  for (size_t s = 0; s < n; ++s) {
    if (orb[s] >= 0) continue;
    std::vector<Point> o{Point(s)};
    orb[s] = int(orbits.size());
    for (size_t k = 0; k < o.size(); ++k)
      for (auto g : gens) {
        Point t = G.row(g)[o[k]];
        if (orb[t] < 0) {
          orb[t] = int(orbits.size());
          o.push_back(t);
        }
      }
    std::sort(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  for (const auto &o : orbits)
    if (o.size() == 1) return MaxType::P1;
  for (const auto &o : orbits)
    if (o.size() == 2) return MaxType::GL1wrS2;
  for (const auto &o : orbits) {
    for (uint32_t e = 1; e < L.f(); ++e) {
      if (L.f() % e) continue;
      uint32_t q0 = 1;
      for (uint32_t j = 0; j < e; ++j) q0 *= L.p();
      if (q0 == 2 || o.size() != q0 + 1) continue;
      // Move three orbit points to inf, 0, 1 and compare with the standard subline.
      auto M = frame_matrix(L.F(), L.q(), o[0], o[1], o[2]);
      SemilinearElem g = L.inv(L.make(M[0], M[1], M[2], M[3]));
      std::vector<Point> img;
      for (auto pt : o) img.push_back(L.apply(g, pt));
      std::sort(img.begin(), img.end());
      if (img == L.subline(e)) {
        if (subfield_q0) *subfield_q0 = q0;
        return MaxType::GL2sub;
      }
    }
  }
  Subgroup H0 = I.socle_part(H);
  const uint64_t h0 = H0.order(), q = L.q();
  const uint32_t torus = uint32_t((q + 1) / L.d());
  if (h0 == 2 * torus) {
    for (auto x : H0.elems)
      if (G.elem_order(x) == torus) return MaxType::GL1q2;
  }
  if (h0 == 12 || h0 == 24) return MaxType::Extraspecial;
  if (h0 == 60) return MaxType::A5;
  return MaxType::Unknown;
}

}  // namespace fixerlab
