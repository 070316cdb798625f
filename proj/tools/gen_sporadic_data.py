#!/usr/bin/env python3
"""Writes data/groups/ for the small sporadic groups and their maximal
subgroups used by the sporadic rows.

M24 is built on the projective line over F23 (PSL2(23) plus the cubing map),
M23/M22 as point stabilisers; M12 from PSL2(11) plus one involution, M11 as a
point stabiliser; J1 from its 7-dimensional matrices over F11, acting on the
266 cosets of PSL2(11). Subgroups are set stabilisers or normalisers; every
order is checked here with sympy and again by the C++ loader.
"""
import itertools
import os
import random
import sys

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

rng = random.Random(20261019)
OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "groups")


# perms are tuples of images, composed left to right
def mul(a, b):
    return tuple(b[i] for i in a)


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def order_of(gens):
    return PermutationGroup([Permutation(list(g)) for g in gens]).order()


def random_element(gens, steps=40):
    x = tuple(range(len(gens[0])))
    for _ in range(steps):
        x = mul(x, rng.choice(gens))
    return x


def few_generators(elements_or_gens, want, pick):
    """Random elements from `pick()` until they generate a group of order want."""
    gens = []
    while True:
        gens.append(pick())
        if len(gens) >= 2 and order_of(gens) == want:
            return gens
        if len(gens) > 8:
            gens = []


def set_stabiliser(gens, s, want):
    """Generators of the setwise stabiliser of s (orbit + Schreier generators)."""
    s = frozenset(s)
    trans = {s: tuple(range(len(gens[0])))}
    queue = [s]
    for t in queue:
        for g in gens:
            u = frozenset(g[i] for i in t)
            if u not in trans:
                trans[u] = mul(trans[t], g)
                queue.append(u)
    schreier = []
    for t, r in trans.items():
        for g in gens:
            u = frozenset(g[i] for i in t)
            schreier.append(mul(mul(r, g), inv(trans[u])))
    schreier = [x for x in set(schreier) if x != tuple(range(len(x)))]
    return few_generators(None, want, lambda: random_element(schreier, 12))


def restrict(p, n):
    assert all(p[i] == i for i in range(n, len(p)))
    return p[:n]


def slug(name):
    return name.replace("^", "").replace("'", "b").replace(":", ".").replace("(", "_").replace(")", "")


def write(parent, name, degree, order, gens, note):
    path = f"{OUT}/{slug(name)}.grp" if parent is None else f"{OUT}/{parent}/{slug(name)}.grp"
    os.makedirs(os.path.dirname(path), exist_ok=True)
    assert order_of(gens) == order, (name, order_of(gens), order)
    with open(path, "w") as f:
        f.write(f"# {note}\n")
        f.write(f"degree {degree}\nname {name}\norder {order}\n")
        for g in gens:
            f.write(" ".join(str(x + 1) for x in g) + "\n")


# ---- M24 and the Golay code ----
P, INF = 23, 23
QR = {x * x % P for x in range(1, P)}


def lin(f, n, inf):
    return tuple(f(t) for t in range(n + 1))


m24 = [
    lin(lambda t: INF if t == INF else (t + 1) % P, P, INF),
    lin(lambda t: INF if t == INF else 2 * t % P, P, INF),
    lin(lambda t: 0 if t == INF else INF if t == 0 else -pow(t, P - 2, P) % P, P, INF),
    lin(lambda t: t if t in (0, INF) else (pow(t, 3, P) * pow(9, P - 2, P) % P if t in QR else 9 * pow(t, 3, P) % P), P, INF),
]
assert order_of(m24) == 244823040


def golay_octads():
    # extended quadratic residue code: translates of N u {0}... pick the
    # variant whose weight enumerator is that of the Golay code
    for base in (QR, set(range(1, P)) - QR):
        rows = []
        for i in range(P):
            v = 0
            for x in base | {0}:
                v |= 1 << ((x + i) % P)
            if bin(v).count("1") % 2:
                v |= 1 << INF
            rows.append(v)
        rows.append((1 << 24) - 1)
        basis = []
        for r in rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
        if len(basis) != 12:
            continue
        words = {0}
        for b in basis:
            words |= {w ^ b for w in words}
        octads = [w for w in words if bin(w).count("1") == 8]
        if len(octads) == 759 and min(bin(w).count("1") for w in words if w) == 8:
            sets = [frozenset(i for i in range(24) if w >> i & 1) for w in octads]
            ok = all(frozenset(g[i] for i in o) in set(sets) for g in m24 for o in sets[:20])
            if ok:
                return sets
    raise SystemExit("no Golay code found")


octads = golay_octads()
with_both = next(o for o in octads if 22 in o and 23 in o)
with_23_only = next(o for o in octads if 23 in o and 22 not in o)
with_22_only = next(o for o in octads if 22 in o and 23 not in o)
without_23 = next(o for o in octads if 23 not in o)

m23 = [restrict(g, 23) for g in set_stabiliser(m24, {23}, 10200960)]
m23_full = [g + (23,) for g in m23]
m22_full = set_stabiliser(m23_full, {22}, 443520)
m22 = [restrict(g, 22) for g in m22_full]

src = "M24 on the projective line over F23"
write(None, "M23", 23, 10200960, m23, src + ", stabiliser of infinity")
write(None, "M22", 22, 443520, m22, src + ", stabiliser of two points")

sub = lambda gens, s, want, n: [restrict(g, n) for g in set_stabiliser(gens, s, want)]
write("M23", "PSigmaL3(4)", 23, 40320, sub(m23_full, {0, 1}, 40320, 23), "stabiliser of a duad")
write("M23", "2^4:A7", 23, 40320, sub(m23_full, with_23_only - {23}, 40320, 23), "stabiliser of a heptad")
write("M23", "A8", 23, 20160, sub(m23_full, without_23, 20160, 23), "stabiliser of an octad")
write("M22", "2^4:A6", 22, 5760, sub(m22_full, with_both - {22, 23}, 5760, 22), "stabiliser of a hexad")
write("M22", "2^4:S5", 22, 1920, sub(m22_full, {0, 1}, 1920, 22), "stabiliser of a duad")
write("M22", "A7", 22, 2520, sub(m22_full, with_23_only - {23}, 2520, 22), "heptad of an octad through the first fixed point")
write("M22", "A7'", 22, 2520, sub(m22_full, with_22_only - {22}, 2520, 22), "heptad of an octad through the second fixed point")
disjoint = next(o for o in octads if 22 not in o and 23 not in o)
write("M22", "2^3:L3(2)", 22, 1344, sub(m22_full, disjoint, 1344, 22), "stabiliser of an octad")

# ---- M12, M11 ----
p, inf = 11, 11
psl211 = [
    lin(lambda t: inf if t == inf else (t + 1) % p, p, inf),
    lin(lambda t: inf if t == inf else 3 * t % p, p, inf),
    lin(lambda t: 0 if t == inf else inf if t == 0 else -pow(t, p - 2, p) % p, p, inf),
]
w = list(range(12))
for a, b in ((2, 10), (3, 4), (5, 9), (6, 7)):
    w[a], w[b] = b, a
m12 = psl211 + [tuple(w)]
write(None, "M12", 12, 95040, m12, "PSL2(11) on the projective line over F11 and one involution")
write("M12", "PSL2(11)", 12, 660, psl211, "PSL2(11) on the projective line, transitive")
m11_full = set_stabiliser(m12, {11}, 7920)
write("M12", "M11", 12, 7920, m11_full, "stabiliser of a point")
write("M12", "M10:2", 12, 1440, set_stabiliser(m12, {10, 11}, 1440), "stabiliser of a duad")

m11 = [restrict(g, 11) for g in m11_full]
write(None, "M11", 11, 7920, m11, "stabiliser of a point in M12")
write("M11", "GL2(3)", 11, 48, sub(m11_full, {0, 1, 2}, 48, 11), "stabiliser of a triad")
write("M11", "M9:2", 11, 144, sub(m11_full, {0, 1}, 144, 11), "stabiliser of a duad")
write("M11", "M10", 11, 720, sub(m11_full, {0}, 720, 11), "stabiliser of a point")

# ---- J1 ----
F = 11
Y = np.roll(np.eye(7, dtype=np.int64), 1, axis=1)
Z = np.array([[-3, 2, -1, -1, -3, -1, -3], [-2, 1, 1, 3, 1, 3, 3], [-1, -1, -3, -1, -3, -3, 2],
              [-1, -3, -1, -3, -3, 2, -1], [-3, -1, -3, -3, 2, -1, -1], [1, 3, 3, -2, 1, 1, 3],
              [3, 3, -2, 1, 1, 3, 1]]) % F
def mpow(M, k):
    R = np.eye(7, dtype=np.int64)
    for _ in range(k):
        R = R @ M % F
    return R


Yi, Zi = mpow(Y, 6), mpow(Z, 4)
assert (Y @ Yi % F == np.eye(7)).all() and (Z @ Zi % F == np.eye(7)).all()
E, Einv = [np.eye(7, dtype=np.int64)], [np.eye(7, dtype=np.int64)]
index = {E[0].tobytes(): 0}
for n in itertools.count():
    if n == len(E):
        break
    for g, gi in ((Y, Yi), (Z, Zi)):
        W = E[n] @ g % F
        k = W.tobytes()
        if k not in index:
            index[k] = len(E)
            E.append(W)
            Einv.append(gi @ Einv[n] % F)
assert len(E) == 175560
E, Einv = np.array(E), np.array(Einv)
idx = lambda M: index[(M % F).tobytes()]


def morder(M):
    X, k = M % F, 1
    while idx(X) != 0:
        X, k = X @ M % F, k + 1
    return k


def closure(gens, cap):
    seen = {0}
    frontier = [np.eye(7, dtype=np.int64)]
    while frontier:
        nxt = []
        for X in frontier:
            for g in gens:
                W = X @ g % F
                k = idx(W)
                if k not in seen:
                    seen.add(k)
                    nxt.append(W)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return seen


def elem_of_order(n):
    while True:
        x = E[rng.randrange(len(E))]
        o = morder(x)
        if o % n == 0:
            return mpow(x, o // n)


x11, t = elem_of_order(11), elem_of_order(2)
while True:
    g = rng.randrange(len(E))
    y = Einv[g] @ t @ E[g] % F
    S = closure([x11, y], 660)
    if S is not None and len(S) == 660:
        break
Hidx = sorted(S)
Hm = E[Hidx]

coset_of = np.full(len(E), -1, dtype=np.int64)
reps = []
for e in range(len(E)):
    if coset_of[e] >= 0:
        continue
    for M in Hm @ E[e] % F:
        coset_of[idx(M)] = len(reps)
    reps.append(e)
assert len(reps) == 266


def on_cosets(M):
    return tuple(int(coset_of[idx(E[r] @ M)]) for r in reps)


def normaliser(gens_m, members):
    """Indices g with g^-1 s g in `members` for every generator s."""
    members = np.array(sorted(members))
    ok = np.ones(len(E), dtype=bool)
    for s in gens_m:
        conj = np.einsum("nij,jk,nkl->nil", Einv, s, E) % F
        keys = np.array([index[c.tobytes()] for c in conj])
        ok &= np.isin(keys, members)
    return np.nonzero(ok)[0]


def subgroup_gens(members, want):
    members = list(members)
    assert len(members) == want
    return few_generators(None, want, lambda: on_cosets(E[rng.choice(members)]))


def cyclic(x):
    out, X = [0], x % F
    while idx(X) != 0:
        out.append(idx(X))
        X = X @ x % F
    return out


j1 = [on_cosets(Y), on_cosets(Z)]
write(None, "J1", 266, 175560, j1, "7-dimensional matrices over F11, on the cosets of PSL2(11)")
cent_t = normaliser([t], [idx(t)])
write("J1", "2xA5", 266, 120, subgroup_gens(cent_t, 120), "centraliser of an involution")
x15 = elem_of_order(15)
write("J1", "D6xD10", 266, 60, subgroup_gens(normaliser([x15], cyclic(x15)), 60), "normaliser of a cyclic subgroup of order 15")
x7 = elem_of_order(7)
write("J1", "7:6", 266, 42, subgroup_gens(normaliser([x7], cyclic(x7)), 42), "normaliser of a cyclic subgroup of order 7")
# Sylow 2-subgroup: t and a Klein four group of C(t)/<t>
c_inv = [i for i in cent_t if i != idx(t) and i != 0 and morder(E[i]) == 2]
for u, v in itertools.combinations(c_inv, 2):
    S = closure([t, E[u], E[v]], 8)
    if S is not None and len(S) == 8:
        break
write("J1", "2^3:7:3", 266, 168, subgroup_gens(normaliser([t, E[u], E[v]], S), 168), "normaliser of a Sylow 2-subgroup")
write("J1", "PSL2(11)", 266, 660, subgroup_gens(Hidx, 660), "point stabiliser")
print("ok")
