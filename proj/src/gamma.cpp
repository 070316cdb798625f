#include "fixerlab/gamma.hpp"

#include <deque>
#include <numeric>
#include <sstream>

namespace fixerlab {

namespace {

std::vector<uint32_t> digits(uint32_t code, uint32_t p, uint32_t f) {
  std::vector<uint32_t> d(f);
  for (uint32_t j = 0; j < f; ++j) {
    d[j] = code % p;
    code /= p;
  }
  return d;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return uint32_t(r);
}

uint32_t tr_to(const FieldCtx &F, uint32_t a, uint32_t f1) {
  return F.rel_trace(F.elem(a), f1).code();
}

}  // namespace

std::optional<uint32_t> solve_additive(const FieldCtx &F, const std::function<uint32_t(uint32_t)> &T,
                                       uint32_t target) {
  const uint32_t p = F.p(), f = F.f();
  // Augmented f x (f+1) system over GF(p); column j is T(t^j).
  std::vector<std::vector<uint32_t>> A(f, std::vector<uint32_t>(f + 1));
  uint32_t basis = 1;
  for (uint32_t j = 0; j < f; ++j, basis *= p) {
    auto col = digits(T(basis), p, f);
    for (uint32_t r = 0; r < f; ++r) A[r][j] = col[r];
  }
  auto t = digits(target, p, f);
  for (uint32_t r = 0; r < f; ++r) A[r][f] = t[r];

  std::vector<int> pivot_col;
  uint32_t row = 0;
  for (uint32_t c = 0; c < f && row < f; ++c) {
    uint32_t pr = row;
    while (pr < f && A[pr][c] == 0) ++pr;
    if (pr == f) continue;
    std::swap(A[pr], A[row]);
    uint32_t iv = inv_mod(A[row][c], p);
    for (auto &v : A[row]) v = uint32_t(uint64_t(v) * iv % p);
    for (uint32_t r = 0; r < f; ++r) {
      if (r == row || A[r][c] == 0) continue;
      uint64_t m = A[r][c];
      for (uint32_t k = 0; k <= f; ++k) A[r][k] = uint32_t((A[r][k] + (p - m) * A[row][k]) % p);
    }
    pivot_col.push_back(int(c));
    ++row;
  }
  for (uint32_t r = row; r < f; ++r)
    if (A[r][f] != 0) return std::nullopt;
  uint32_t code = 0;
  std::vector<uint32_t> x(f, 0);
  for (uint32_t r = 0; r < row; ++r) x[pivot_col[r]] = A[r][f];
  for (uint32_t j = f; j-- > 0;) code = code * p + x[j];
  if (T(code) != target) throw GammaError("linear solve failed verification");
  return code;
}

Gamma::Gamma(FieldPtr F) : F_(std::move(F)) {}

GammaElem Gamma::make(uint32_t a, uint32_t lam, int64_t i) const {
  if (a >= q() || lam == 0 || lam >= q()) throw GammaError("invalid Gamma element");
  int64_t f = this->f();
  return {a, lam, uint32_t(((i % f) + f) % f)};
}

GammaElem Gamma::mul(const GammaElem &x, const GammaElem &y) const {
  const FieldCtx &F = *F_;
  const int64_t mi = -int64_t(x.i);
  uint32_t a = F.add(x.a, F.mul(F.inv(x.lam), F.frob(y.a, mi)));
  uint32_t lam = F.mul(x.lam, F.frob(y.lam, mi));
  return {a, lam, (x.i + y.i) % f()};
}

GammaElem Gamma::inv(const GammaElem &x) const {
  const FieldCtx &F = *F_;
  uint32_t a = F.frob(F.neg(F.mul(x.lam, x.a)), x.i);
  uint32_t lam = F.frob(F.inv(x.lam), x.i);
  return {a, lam, (f() - x.i) % f()};
}

GammaElem Gamma::pow(const GammaElem &x, int64_t k) const {
  GammaElem base = k < 0 ? inv(x) : x, r = identity();
  uint64_t e = k < 0 ? uint64_t(-k) : uint64_t(k);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

GammaElem Gamma::conj(const GammaElem &x, const GammaElem &g) const { return mul(mul(inv(g), x), g); }

uint32_t Gamma::frob_order(uint32_t i) const { return f() / std::gcd(i % f(), f()); }

uint64_t Gamma::order(const GammaElem &x) const {
  uint32_t s = frob_order(x.i);
  GammaElem y = pow(x, s);
  if (y.lam != 1) {
    uint32_t n = q() - 1;
    return uint64_t(s) * (n / std::gcd(n, F_->log(y.lam)));
  }
  return y.a == 0 ? s : uint64_t(s) * F_->p();
}

uint32_t Gamma::index(const GammaElem &x) const {
  return (x.i * (q() - 1) + F_->log(x.lam)) * q() + x.a;
}

GammaElem Gamma::element(uint32_t idx) const {
  GammaElem x;
  x.a = idx % q();
  idx /= q();
  x.lam = F_->exp(idx % (q() - 1));
  x.i = idx / (q() - 1);
  return x;
}

std::string Gamma::str(const GammaElem &x) const {
  std::ostringstream os;
  os << "(" << F_->to_string(x.a) << "," << F_->to_string(x.lam) << ")phi^" << x.i;
  return os.str();
}

GammaClasses gamma_classes(const Gamma &G, uint64_t bound) {
  if (G.size() > bound) throw GammaError("Gamma too large for class enumeration");
  const uint32_t n = uint32_t(G.size());
  const FieldCtx &F = G.field();
  std::vector<GammaElem> gens{G.make(1, 1, 0), G.make(0, F.primitive().code(), 0)};
  if (G.f() > 1) gens.push_back(G.make(0, 1, 1));
  GammaClasses C;
  const uint32_t none = UINT32_MAX;
  C.class_of.assign(n, none);
  C.tau.assign(n, none);
  const uint32_t id = G.index(G.identity());
  for (uint32_t start = 0; start < n; ++start) {
    if (C.class_of[start] != none) continue;
    uint32_t cid = C.count++;
    C.rep.push_back(start);
    C.class_of[start] = cid;
    C.tau[start] = id;
    std::deque<uint32_t> todo{start};
    while (!todo.empty()) {
      uint32_t u = todo.front();
      todo.pop_front();
      GammaElem x = G.element(u), t = G.element(C.tau[u]);
      for (const auto &g : gens) {
        uint32_t v = G.index(G.conj(x, g));
        if (C.class_of[v] != none) continue;
        C.class_of[v] = cid;
        C.tau[v] = G.index(G.mul(t, g));
        todo.push_back(v);
      }
    }
  }
  return C;
}

bool conj_shirt(const Gamma &G, uint32_t a, uint32_t b) {
  const FieldCtx &F = G.field();
  bool za = tr_to(F, a, 1) == 0, zb = tr_to(F, b, 1) == 0;
  return za == zb;
}

TraceCase trace_case(const Gamma &G, uint32_t a, uint32_t b, uint32_t i) {
  const FieldCtx &F = G.field();
  uint32_t f1 = G.f() / G.frob_order(i);
  uint32_t ta = tr_to(F, a, f1), tb = tr_to(F, b, f1);
  if (ta == tb) return TraceCase::Equal;
  if (ta != 0 && tb != 0) return TraceCase::BothNonzero;
  return TraceCase::OneZero;
}

L33Result conj_l33(const Gamma &G, uint32_t a, uint32_t b, uint32_t i, TraceCase mode) {
  const FieldCtx &F = G.field();
  const uint32_t f1 = G.f() / G.frob_order(i);
  const uint32_t ta = tr_to(F, a, f1), tb = tr_to(F, b, f1);
  const GammaElem x = G.make(a, 1, i), y = G.make(b, 1, i);
  L33Result res{mode, std::nullopt, G.order(x), G.order(y)};
  auto translate = [&](uint32_t from) {
    // c^(phi^-i) - c = b - from
    uint32_t d = F.sub(b, from);
    uint32_t c = F.q() <= FieldCtx::kSearchLimit ? F.hilbert90_additive(F.elem(d), i).code()
                                                 : F.hilbert90_additive_linear(F.elem(d), i).code();
    return G.make(c, 1, 0);
  };
  switch (mode) {
    case TraceCase::Equal:
      if (ta != tb) throw GammaError("case (i) needs Tr(a) = Tr(b) over the fixed field of phi^i");
      res.conjugator = translate(a);
      break;
    case TraceCase::BothNonzero: {
      if (ta == 0 || tb == 0) throw GammaError("case (ii) needs Tr(a) and Tr(b) nonzero over the fixed field of phi^i");
      uint32_t mu = F.div(tb, ta);
      GammaElem s = G.make(0, mu, 0);
      res.conjugator = G.mul(s, translate(F.mul(mu, a)));
      break;
    }
    case TraceCase::OneZero:
      if (!((ta == 0) != (tb == 0))) throw GammaError("case (iii) needs exactly one of Tr(a), Tr(b) zero over the fixed field of phi^i");
      if (res.order_a == res.order_b) throw GammaError("orders agree in trace case (iii)");
      return res;
  }
  if (G.conj(x, *res.conjugator) != y) throw GammaError("conjugator failed verification");
  return res;
}

L33Result conj_l33(const Gamma &G, uint32_t a, uint32_t b, uint32_t i) {
  return conj_l33(G, a, b, i, trace_case(G, a, b, i));
}

SubfieldReduction subfield_reduce(const Gamma &G, uint32_t a, uint32_t i, uint32_t f0) {
  const FieldCtx &F = G.field();
  const uint32_t f = G.f();
  if (f0 == 0 || f % f0 != 0 || !is_prime(f / f0)) throw GammaError("GF(q0) must be a maximal subfield");
  const uint32_t r = f / f0, s = G.frob_order(i), f1 = f / s;
  if (r == F.p() && s % r == 0) throw GammaError("hypothesis fails: r = p and r divides |phi^i|");
  const uint32_t ta = tr_to(F, a, f1);
  uint32_t b = 0;
  if (ta != 0) {
    bool found = false;
    for (uint32_t c : F.subfield(f0)) {
      if (tr_to(F, c, f1) != 0) {
        b = c;
        found = true;
        break;
      }
    }
    if (!found) throw GammaError("no subfield element with nonzero trace");
  }
  L33Result res = conj_l33(G, a, b, i);
  return {b, *res.conjugator};
}

bool meets_translations_trivially(const Gamma &G, const GammaElem &x) {
  GammaElem y = G.pow(x, G.frob_order(x.i));
  return !(y.lam == 1 && y.a != 0);
}

GammaElem reduce_to_torus(const Gamma &G, const GammaElem &x) {
  if (!meets_translations_trivially(G, x)) throw GammaError("<x> meets the translation subgroup");
  const FieldCtx &F = G.field();
  // x^(c,1) = (a - c + lam^-1 c^(phi^-i), lam) phi^i; solve for a-part zero.
  const uint32_t il = F.inv(x.lam);
  const int64_t mi = -int64_t(x.i);
  auto T = [&](uint32_t c) { return F.sub(c, F.mul(il, F.frob(c, mi))); };
  auto c = solve_additive(F, T, x.a);
  if (!c) throw GammaError("translation equation has no solution");
  GammaElem g = G.make(*c, 1, 0);
  if (G.conj(x, g).a != 0) throw GammaError("torus reduction failed verification");
  return g;
}

}  // namespace fixerlab
