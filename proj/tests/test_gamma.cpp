#include <doctest.h>

#include <random>
#include <set>

#include "fixerlab/gamma.hpp"

using namespace fixerlab;

namespace {

Gamma gam(uint32_t q) { return Gamma(FieldCtx::get(q)); }

uint32_t trace_to(const Gamma &G, uint32_t a, uint32_t i) {
  return G.field().rel_trace(G.field().elem(a), G.f() / G.frob_order(i)).code();
}

// <x> meets the translations nontrivially, by listing powers.
bool meets_brute(const Gamma &G, const GammaElem &x) {
  GammaElem y = x;
  for (uint64_t k = 1; k < G.order(x); ++k, y = G.mul(y, x))
    if (y.i == 0 && y.lam == 1 && y.a != 0) return true;
  return false;
}

}  // namespace

TEST_CASE("gamma: small orders over GF(4)") {
  Gamma G = gam(4);
  uint32_t w = G.field().primitive().code();
  CHECK(G.order(G.make(w, 1, 1)) == 4);
  CHECK(G.order(G.make(1, 1, 1)) == 2);
  CHECK(G.mul(G.make(w, 1, 1), G.make(w, 1, 1)) == G.make(1, 1, 0));
  CHECK(G.size() == 24);
}

TEST_CASE("gamma: group axioms") {
  for (uint32_t q : {4u, 5u, 7u, 8u}) {
    Gamma G = gam(q);
    const uint32_t n = uint32_t(G.size());
    for (uint32_t a = 0; a < n; ++a) {
      GammaElem x = G.element(a);
      REQUIRE(G.index(x) == a);
      CHECK(G.mul(x, G.inv(x)) == G.identity());
      CHECK(G.mul(G.identity(), x) == x);
      CHECK(G.pow(x, int64_t(G.order(x))) == G.identity());
      for (uint32_t b = 0; b < n; ++b)
        for (uint32_t c = 0; c < n; c += 7) {
          GammaElem y = G.element(b), z = G.element(c);
          REQUIRE(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
        }
    }
  }
  std::mt19937_64 rng(7);
  for (uint32_t q : {9u, 16u, 25u, 27u, 32u, 64u}) {
    Gamma G = gam(q);
    std::uniform_int_distribution<uint32_t> U(0, uint32_t(G.size() - 1));
    for (int t = 0; t < 20000; ++t) {
      GammaElem x = G.element(U(rng)), y = G.element(U(rng)), z = G.element(U(rng));
      REQUIRE(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
    }
  }
}

TEST_CASE("gamma: power law for (a,1)phi^i") {
  for (uint32_t q : {8u, 9u, 16u, 27u, 64u}) {
    Gamma G = gam(q);
    for (uint32_t i = 0; i < G.f(); ++i)
      for (uint32_t a = 0; a < q; ++a) {
        uint32_t s = G.frob_order(i);
        GammaElem y = G.pow(G.make(a, 1, i), s);
        REQUIRE(y == G.make(trace_to(G, a, i), 1, 0));
      }
  }
}

TEST_CASE("gamma: class table") {
  CHECK(gamma_classes(gam(4)).class_of.size() == 24);
  CHECK(gamma_classes(gam(8)).class_of.size() == 168);
  for (uint32_t q : {8u, 9u, 16u}) {
    Gamma G = gam(q);
    auto C = gamma_classes(G);
    for (uint32_t x = 0; x < G.size(); ++x) {
      GammaElem r = G.element(C.rep[C.class_of[x]]);
      REQUIRE(G.conj(r, G.element(C.tau[x])) == G.element(x));
    }
    // each (a,1)phi^i stratum meets exactly two classes
    for (uint32_t i = 0; i < G.f(); ++i) {
      std::set<uint32_t> ids;
      for (uint32_t a = 0; a < q; ++a) ids.insert(C.class_of[G.index(G.make(a, 1, i))]);
      CHECK(ids.size() == 2);
    }
  }
  CHECK_THROWS_AS(gamma_classes(gam(1024), 1000), GammaError);
}

TEST_CASE("gamma: trace criteria agree with the class oracle") {
  for (uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 64u}) {
    CAPTURE(q);
    Gamma G = gam(q);
    const FieldCtx &F = G.field();
    auto C = gamma_classes(G);
    auto cls = [&](const GammaElem &x) { return C.class_of[G.index(x)]; };
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b < q; ++b) {
        bool same = cls(G.make(a, 1, 1 % G.f())) == cls(G.make(b, 1, 1 % G.f()));
        if (G.f() > 1) REQUIRE(conj_shirt(G, a, b) == same);
      }
    for (uint32_t i = 0; i < G.f(); ++i) {
      const uint32_t f1 = G.f() / G.frob_order(i);
      for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) {
          GammaElem x = G.make(a, 1, i), y = G.make(b, 1, i);
          auto res = conj_l33(G, a, b, i);
          switch (res.mode) {
            case TraceCase::Equal:
              REQUIRE(res.conjugator);
              REQUIRE(G.conj(x, *res.conjugator) == y);
              REQUIRE(res.conjugator->lam == 1);
              REQUIRE(res.conjugator->i == 0);
              break;
            case TraceCase::BothNonzero:
              REQUIRE(res.conjugator);
              REQUIRE(G.conj(x, *res.conjugator) == y);
              REQUIRE(res.conjugator->i == 0);
              REQUIRE(F.in_subfield(F.elem(res.conjugator->lam), f1));
              break;
            case TraceCase::OneZero:
              REQUIRE(res.order_a != res.order_b);
              REQUIRE(cls(x) != cls(y));
              break;
          }
        }
    }
  }
}

TEST_CASE("gamma: trace case hypotheses are enforced") {
  Gamma G = gam(16);
  const FieldCtx &F = G.field();
  // i = 2: fixed field GF(4)
  uint32_t zero_tr = 0, nonzero_tr = 0;
  for (uint32_t a = 1; a < 16; ++a) {
    bool z = F.rel_trace(F.elem(a), 2).is_zero();
    if (z && !zero_tr) zero_tr = a;
    if (!z && !nonzero_tr) nonzero_tr = a;
  }
  CHECK_THROWS_AS(conj_l33(G, zero_tr, nonzero_tr, 2, TraceCase::Equal), GammaError);
  CHECK_THROWS_AS(conj_l33(G, 0, zero_tr, 2, TraceCase::BothNonzero), GammaError);
  CHECK_THROWS_AS(conj_l33(G, 0, zero_tr, 2, TraceCase::OneZero), GammaError);
  auto r = conj_l33(G, zero_tr, nonzero_tr, 2, TraceCase::OneZero);
  CHECK(r.order_a == 2);
  CHECK(r.order_b == 4);
  CHECK(conj_l33(G, 5, 5, 2).conjugator == G.identity());
}

TEST_CASE("gamma: subfield reduction") {
  {
    Gamma G = gam(64);
    const FieldCtx &F = G.field();
    for (uint32_t i = 0; i < 6; ++i)
      for (uint32_t a = 0; a < 64; ++a) {
        auto red = subfield_reduce(G, a, i, 2);
        REQUIRE(F.in_subfield(F.elem(red.b), 2));
        REQUIRE(G.conj(G.make(a, 1, i), red.conjugator) == G.make(red.b, 1, i));
      }
  }
  {
    // r = p = 3 over GF(27): allowed only when 3 does not divide |phi^i|.
    Gamma G = gam(27);
    for (uint32_t a = 0; a < 27; ++a) {
      auto red = subfield_reduce(G, a, 0, 1);
      CHECK(G.conj(G.make(a, 1, 0), red.conjugator) == G.make(red.b, 1, 0));
      CHECK_THROWS_AS(subfield_reduce(G, a, 1, 1), GammaError);
    }
  }
  CHECK_THROWS_AS(subfield_reduce(gam(16), 3, 2, 2), GammaError);
  CHECK_THROWS_AS(subfield_reduce(gam(64), 3, 2, 4), GammaError);
}

TEST_CASE("gamma: torus reduction") {
  for (uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 64u}) {
    CAPTURE(q);
    Gamma G = gam(q);
    auto C = q <= 32 ? gamma_classes(G) : GammaClasses{};
    for (uint32_t idx = 0; idx < G.size(); ++idx) {
      GammaElem x = G.element(idx);
      bool trivial = meets_translations_trivially(G, x);
      if (q <= 16) REQUIRE(trivial == !meets_brute(G, x));
      if (!trivial) {
        REQUIRE_THROWS_AS(reduce_to_torus(G, x), GammaError);
        continue;
      }
      GammaElem g = reduce_to_torus(G, x);
      REQUIRE(g.lam == 1);
      REQUIRE(g.i == 0);
      GammaElem y = G.conj(x, g);
      REQUIRE(y.a == 0);
      if (q <= 32) REQUIRE(C.class_of[G.index(y)] == C.class_of[idx]);
    }
  }
}

TEST_CASE("gamma: additive solver") {
  const FieldCtx &F = *FieldCtx::get(81);
  auto T = [&](uint32_t c) { return F.sub(F.frob(c, -1), c); };
  for (uint32_t b = 0; b < 81; ++b) {
    auto c = solve_additive(F, T, b);
    CHECK(c.has_value() == F.rel_trace(F.elem(b), 1).is_zero());
  }
}
