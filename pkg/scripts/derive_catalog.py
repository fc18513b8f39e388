#!/usr/bin/env python3
"""Build the shipped group database (src/setorbits/data/groups.cat).

Every generator set is produced from a first-principles construction:

* projective actions of PSL/PGL/PSigmaL/PGammaL(2, q) and M_10 on the
  projective line over GF(q), with field arithmetic done here;
* affine actions (translations plus a point stabilizer) over GF(q) and
  over the vector spaces GF(2)^3, GF(3)^2;
* linear actions of GL(3,2), SL(2,3), GL(2,3) on nonzero vectors;
* coset actions for the exceptional 11- and 12-point representations of
  PSL(2,11) and M_11;
* wreath-type embeddings and one-point paddings for the imprimitive and
  intransitive groups the reference tables need;
* an exhaustive enumeration of the transitive subgroup classes of S_8 and
  of the subgroups of S_3 wr S_3 of order >= 162.

Everything is verified on the spot (order, transitivity, primitivity and,
against an independent subset-orbit enumeration, the set-orbit count)
before it is written out.  Rerunning the script reproduces the shipped
file byte for byte.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from setorbits.orbitcount import count_set_orbits, profile_from_enumeration
from setorbits.perm import (
    PermGroup,
    Permutation,
    _Chain,
    build_group,
    is_primitive,
    is_transitive,
)
from setorbits.subgroups import all_subgroups

OUT = Path(__file__).resolve().parent.parent / "src" / "setorbits" / "data" / "groups.cat"


# ---------------------------------------------------------------------------
# tiny finite fields

class GF:
    """GF(p^k) with elements encoded as integers 0 .. p^k - 1 (base-p digits
    of the coefficient vector, lowest degree first)."""

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] = ()):
        # modulus: coefficients of the degree-k defining polynomial, lowest
        # first, leading 1 implied; e.g. x^3 + x + 1 -> (1, 1, 0)
        self.p, self.k, self.q = p, k, p**k
        self.modulus = modulus
        assert k == 1 or len(modulus) == k

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _undigits(self, ds) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d % self.p
        return v

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(2 * self.k - 2, self.k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j, m in enumerate(self.modulus):
                    prod[deg - self.k + j] = (prod[deg - self.k + j] - c * m) % self.p
        return self._undigits(prod[:self.k])

    def inv(self, a: int) -> int:
        assert a != 0
        # brute force is fine at these sizes
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ArithmeticError

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def generator(self) -> int:
        """A multiplicative generator of GF(q)^*."""
        for g in range(2, self.q):
            seen = {1}
            x = g
            while x != 1:
                seen.add(x)
                x = self.mul(x, g)
            if len(seen) == self.q - 1:
                return g
        raise ArithmeticError


F5 = GF(5)
F7 = GF(7)
F11 = GF(11)
F8 = GF(2, 3, (1, 1, 0))   # x^3 = x + 1
F9 = GF(3, 2, (1, 0))      # x^2 = -1


# ---------------------------------------------------------------------------
# constructions

def perm_of(images0, n) -> Permutation:
    assert len(images0) == n
    return Permutation(images0)


def projective_maps(F: GF):
    """Permutations of P^1(GF(q)) = [0..q-1, oo], as 0-based image lists.

    Returns dict with translation x+1, scalar maps x -> c x, inversion
    x -> -1/x, and Frobenius x -> x^p.
    """
    q = F.q
    INF = q

    def ptmap(f):
        return [f(x) for x in range(q)] + [f(INF)]

    def translate(x):
        return INF if x == INF else F.add(x, 1)

    def scalar(c):
        def s(x):
            return INF if x == INF else F.mul(c, x)
        return s

    def inv_neg(x):
        if x == INF:
            return 0
        if x == 0:
            return INF
        return F.neg(F.inv(x))

    def frob(x):
        return INF if x == INF else F.pow(x, F.p)

    return {
        "t": ptmap(translate),
        "scalar": lambda c: ptmap(scalar(c)),
        "i": ptmap(inv_neg),
        "f": ptmap(frob),
        "n": q + 1,
    }


def psl2(F: GF) -> list[Permutation]:
    m = projective_maps(F)
    g = F.generator()
    sq = F.mul(g, g)
    return [perm_of(m["t"], m["n"]), perm_of(m["scalar"](sq), m["n"]),
            perm_of(m["i"], m["n"])]


def pgl2(F: GF) -> list[Permutation]:
    m = projective_maps(F)
    return psl2(F) + [perm_of(m["scalar"](F.generator()), m["n"])]


def psigmal2(F: GF) -> list[Permutation]:
    m = projective_maps(F)
    return psl2(F) + [perm_of(m["f"], m["n"])]


def pgammal2(F: GF) -> list[Permutation]:
    m = projective_maps(F)
    return pgl2(F) + [perm_of(m["f"], m["n"])]


def m10_maps(F: GF) -> list[Permutation]:
    """PSL(2,9) extended by (scalar g) o Frobenius: the M_10 coset."""
    m = projective_maps(F)
    g = F.generator()
    q = F.q
    twisted = [F.mul(g, F.pow(x, F.p)) for x in range(q)] + [q]
    return psl2(F) + [perm_of(twisted, m["n"])]


def affine_line(F: GF, scalars: list[int], frobenius_twist: list[int] | None = None,
                frobenius: bool = False) -> list[Permutation]:
    """Subgroup of AGammaL(1, q) on the q affine points.

    Generated by the translations x+1, x+t (t a generating set of (F,+)),
    the maps x -> c x for c in scalars, optionally x -> x^p and twisted
    maps x -> c x^p for c in frobenius_twist.
    """
    q = F.q
    gens = [perm_of([F.add(x, 1) for x in range(q)], q)]
    if F.k > 1:
        gens.append(perm_of([F.add(x, F.p) for x in range(q)], q))  # + basis elt
    for c in scalars:
        gens.append(perm_of([F.mul(c, x) for x in range(q)], q))
    if frobenius:
        gens.append(perm_of([F.pow(x, F.p) for x in range(q)], q))
    for c in frobenius_twist or []:
        gens.append(perm_of([F.mul(c, F.pow(x, F.p)) for x in range(q)], q))
    return gens


def vector_points(p: int, dim: int, nonzero: bool) -> list[tuple[int, ...]]:
    pts = list(product(range(p), repeat=dim))
    if nonzero:
        pts = [v for v in pts if any(v)]
    return pts


def linear_group(p: int, dim: int, mats: list[tuple[tuple[int, ...], ...]],
                 nonzero: bool, translations: bool = False) -> list[Permutation]:
    """Action of <mats> (plus optional translations) on GF(p)^dim."""
    pts = vector_points(p, dim, nonzero)
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    if translations:
        for d in range(dim):
            e = tuple(1 if i == d else 0 for i in range(dim))
            img = [index[tuple((v[i] + e[i]) % p for i in range(dim))] for v in pts]
            gens.append(perm_of(img, len(pts)))
    for M in mats:
        img = []
        for v in pts:
            w = tuple(sum(M[i][j] * v[j] for j in range(dim)) % p
                      for i in range(dim))
            img.append(index[w])
        gens.append(perm_of(img, len(pts)))
    return gens


GL32_MATS = [((1, 1, 0), (0, 1, 0), (0, 0, 1)),
             ((0, 0, 1), (1, 0, 0), (0, 1, 0))]
SL23_MATS = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
GL23_MATS = SL23_MATS + [((2, 0), (0, 1))]


def coset_action(gens: list[Permutation], sub: frozenset, n: int) -> list[Permutation]:
    """Action of <gens> on the left cosets of the subgroup with element set
    ``sub``; cosets are numbered by breadth-first discovery from ``sub``."""
    gts = [g.images for g in gens]
    cosets = [sub]
    index = {sub: 0}
    reps = [tuple(range(n))]
    pos = 0
    while pos < len(cosets):
        rep = reps[pos]
        pos += 1
        for g in gts:
            x = tuple(map(g.__getitem__, rep))  # g o rep
            coset = frozenset(tuple(map(x.__getitem__, h)) for h in sub)
            if coset not in index:
                index[coset] = len(cosets)
                cosets.append(coset)
                reps.append(x)
    m = len(cosets)
    out = []
    for g in gts:
        img = []
        for i in range(m):
            x = tuple(map(g.__getitem__, reps[i]))
            coset = frozenset(tuple(map(x.__getitem__, h)) for h in sub)
            img.append(index[coset])
        out.append(perm_of(img, m))
    return out


def find_subgroup_of_order(G: PermGroup, order: int, seed: int) -> frozenset:
    """Deterministic random search for a subgroup of the given order,
    generated by two elements."""
    rng = random.Random(seed)
    elems = sorted(G.iter_element_tuples())
    for _ in range(100000):
        a, b = rng.choice(elems), rng.choice(elems)
        ch = _Chain([a, b], G.degree)
        if ch.order == order:
            return frozenset(ch.iter_elements())
    raise RuntimeError(f"no subgroup of order {order} found")


class _Trans8Class:
    def __init__(self, gens: list[Permutation], order: int):
        self.representative = build_group(gens, degree=8)
        self.order = order


def _transitive8_classes() -> list[_Trans8Class]:
    """Transitive subgroup classes of S_8, cached across runs in /tmp.

    The cache only stores generator words; orders are re-verified on load.
    """
    import json
    cache = Path("/tmp/setorbits_trans8.json")
    if cache.exists():
        data = json.loads(cache.read_text())
        out = [_Trans8Class([Permutation.parse(t, 8) for t in rec["gens"]],
                            rec["order"]) for rec in data]
        assert all(c.representative.order == c.order for c in out)
        print(f"loaded {len(out)} transitive degree-8 classes from cache",
              flush=True)
        return out
    print("enumerating subgroup classes of S_8 ...", flush=True)
    t0 = time.time()
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        classes8 = all_subgroups(8, cap=8)
    print(f"  {len(classes8)} classes ({time.time() - t0:.0f}s)", flush=True)
    assert len(classes8) == 296
    trans = [c for c in classes8 if c.transitive]
    data = [{"gens": [str(g) for g in c.representative.generators],
             "order": c.order} for c in trans]
    cache.write_text(json.dumps(data))
    return [_Trans8Class([Permutation.parse(t, 8) for t in rec["gens"]],
                         rec["order"]) for rec in data]


def subgroup_classes_within(gens: list[Permutation], n: int):
    """Subgroup classes of <gens> up to conjugacy inside <gens> itself.

    Same incremental closure walk as the S_n enumerator, restricted to a
    parent group.  Returns (generator tuple, element frozenset, order) per
    class.
    """
    from setorbits.subgroups import _prime_power_order
    from setorbits.perm import _conjugate_t, _cycle_lengths, _identity_t

    parent = build_group(gens, degree=n)
    elems = sorted(parent.iter_element_tuples())
    candidates = [t for t in elems if _prime_power_order(_cycle_lengths(t))]
    conj_gens = [g.images for g in parent.generators]
    ident = _identity_t(n)

    classes = []
    by_order: dict[int, list] = {}
    set_to_class: dict[frozenset, int] = {}

    def register(elements, gg):
        rec = (gg, elements, len(elements))
        idx = len(classes)
        classes.append(rec)
        by_order.setdefault(len(elements), []).append(rec)
        orbit = {elements}
        queue = [elements]
        set_to_class[elements] = idx
        while queue:
            cur = queue.pop()
            for s in conj_gens:
                img = frozenset(_conjugate_t(s, x) for x in cur)
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
                    set_to_class[img] = idx

    register(frozenset([ident]), ())
    pos = 0
    while pos < len(classes):
        gg, E, order = classes[pos]
        pos += 1
        if order == parent.order:
            continue
        covered: set = set()
        for g in candidates:
            if g in E or g in covered:
                continue
            new_gens = gg + (g,)
            ch = _Chain(new_gens, n)
            for rec in by_order.get(ch.order, ()):
                ce = rec[1]
                if g in ce and all(x in ce for x in gg):
                    break
            else:
                ee = frozenset(ch.iter_elements())
                if ee not in set_to_class:
                    register(ee, new_gens)
            ginv = tuple(sorted(range(n), key=g.__getitem__))
            for h in E:
                hinv = tuple(sorted(range(n), key=h.__getitem__))
                covered.add(tuple(map(h.__getitem__, g)))
                covered.add(tuple(map(g.__getitem__, h)))
                covered.add(_conjugate_t(h, g))
                covered.add(tuple(map(h.__getitem__, ginv)))
                covered.add(tuple(map(ginv.__getitem__, h)))
                covered.add(_conjugate_t(h, ginv))
    return classes


def fuse_under_sn(classes: list, n: int) -> list[list[int]]:
    """Group indices of (gens, elements, order) records into S_n-classes."""
    from setorbits.perm import _conjugate_t
    s_gens = [tuple([1, 0] + list(range(2, n))),
              tuple(list(range(1, n)) + [0])]
    buckets: list[list[int]] = []
    seen_sets: dict[frozenset, int] = {}
    for i, (gg, E, order) in enumerate(classes):
        if E in seen_sets:
            buckets[seen_sets[E]].append(i)
            continue
        # new S_n-class: record its whole conjugate orbit
        b = len(buckets)
        buckets.append([i])
        orbit = {E}
        queue = [E]
        seen_sets[E] = b
        while queue:
            cur = queue.pop()
            for s in s_gens:
                img = frozenset(_conjugate_t(s, x) for x in cur)
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
                    seen_sets[img] = b
    return buckets


def pad(gens: list[Permutation], extra: int) -> list[Permutation]:
    """Same permutations acting on ``extra`` additional fixed points."""
    n = gens[0].degree
    return [perm_of(list(g.images) + list(range(n, n + extra)), n + extra)
            for g in gens]


def pair_action(gens: list[Permutation]) -> list[Permutation]:
    """Induced action on unordered pairs of points."""
    n = gens[0].degree
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    out = []
    for g in gens:
        img = [index[tuple(sorted((g.images[a], g.images[b])))]
               for a, b in pairs]
        out.append(perm_of(img, len(pairs)))
    return out


def cyc(text: str, n: int) -> Permutation:
    return Permutation.parse(text, n)


# ---------------------------------------------------------------------------
# entry assembly

class Entry:
    def __init__(self, ident, name, gens, order, s=None, cite=()):
        self.ident = ident
        self.name = name
        self.gens = gens
        G = build_group(gens)
        self.degree = G.degree
        self.group = G
        assert G.order == order, f"{ident}: order {G.order}, expected {order}"
        self.order = order
        self.transitive = is_transitive(G)
        self.primitive = is_primitive(G)
        self.s = count_set_orbits(G)
        if s is not None:
            assert self.s == s, f"{ident}: s = {self.s}, expected {s}"
        if self.degree <= 12:
            check = profile_from_enumeration(G).total
            assert check == self.s, f"{ident}: enumeration gives {check}"
        self.cite = cite

    def line(self) -> str:
        tags = []
        if self.transitive:
            tags.append("transitive")
        if self.primitive:
            tags.append("primitive")
        tags += [f"paper:{c}" for c in self.cite]
        gens = ";".join(str(g) for g in self.gens)
        return (f"{self.ident}|{self.degree}|{self.name}|{self.order}|"
                f"{','.join(tags)}|{gens}|{self.s}")


def main():
    t_start = time.time()
    entries: list[Entry] = []
    add = entries.append

    def sym(n):
        if n == 1:
            return [perm_of([0], 1)]
        gens = [cyc("(1,2)", n)]
        if n >= 3:
            gens.append(perm_of(list(range(1, n)) + [0], n))
        return gens

    def alt(n):
        three = cyc("(1,2,3)", n)
        if n == 3:
            return [three]
        if n % 2:
            return [three, perm_of(list(range(1, n)) + [0], n)]
        return [three, perm_of([0] + list(range(2, n)) + [1], n)]

    # ---- degrees 2..5: all primitive groups -----------------------------
    add(Entry("2P1", "S2", [cyc("(1,2)", 2)], 2, s=3))
    add(Entry("3P1", "C3", [cyc("(1,2,3)", 3)], 3, s=4))
    add(Entry("3P2", "S3", sym(3), 6, s=4))
    add(Entry("4P1", "A4", alt(4), 12, s=5))
    add(Entry("4P2", "S4", sym(4), 24, s=5))
    add(Entry("5P1", "C5", [cyc("(1,2,3,4,5)", 5)], 5, s=8))
    add(Entry("5P2", "D10", [cyc("(1,2,3,4,5)", 5), cyc("(2,5)(3,4)", 5)], 10, s=8))
    add(Entry("5P3", "AGL(1,5)", [cyc("(1,2,3,4,5)", 5), cyc("(2,3,5,4)", 5)], 20, s=6))
    add(Entry("5P4", "A5", alt(5), 60, s=6))
    add(Entry("5P5", "S5", sym(5), 120, s=6))

    # ---- degree 6 --------------------------------------------------------
    add(Entry("6P1", "PSL(2,5)", psl2(F5), 60, s=8, cite=("6P1",)))
    add(Entry("6X1", "PGL(2,5)", pgl2(F5), 120, s=7))
    add(Entry("6X2", "A6", alt(6), 360, s=7))
    add(Entry("6X3", "S6", sym(6), 720, s=7))

    # ---- degree 7 --------------------------------------------------------
    add(Entry("7P1", "C7", [cyc("(1,2,3,4,5,6,7)", 7)], 7, s=20))
    add(Entry("7P2", "D14", [cyc("(1,2,3,4,5,6,7)", 7), cyc("(2,7)(3,6)(4,5)", 7)],
              14, s=18))
    add(Entry("7P3", "C7:C3", affine_line(F7, [2]), 21, s=12, cite=("7P3",)))
    add(Entry("7P4", "AGL(1,7)", affine_line(F7, [3]), 42, s=10, cite=("7P4",)))
    add(Entry("7P5", "PSL(3,2)", linear_group(2, 3, GL32_MATS, nonzero=True),
              168, s=10, cite=("7P5",)))
    add(Entry("7X1", "A7", alt(7), 2520, s=8))
    add(Entry("7X2", "S7", sym(7), 5040, s=8))

    # ---- degree 8: primitive ---------------------------------------------
    g8 = F8.generator()
    add(Entry("8P1", "AGL(1,8)", affine_line(F8, [g8]), 56, s=10, cite=("8P1",)))
    add(Entry("8P2", "AGammaL(1,8)", affine_line(F8, [g8], frobenius=True),
              168, s=10, cite=("8P2",)))
    add(Entry("8P3", "ASL(3,2)", linear_group(2, 3, GL32_MATS, nonzero=False,
                                              translations=True),
              1344, s=10, cite=("8P3",)))
    add(Entry("8P4", "PSL(2,7)", psl2(F7), 168, s=11, cite=("8P4",)))
    add(Entry("8P5", "PGL(2,7)", pgl2(F7), 336, s=10, cite=("8P5",)))
    add(Entry("8X1", "A8", alt(8), 20160, s=9))
    add(Entry("8X2", "S8", sym(8), 40320, s=9))

    # ---- degree 8: remaining transitive classes + padded A7/S7 -----------
    trans8 = _transitive8_classes()
    assert len(trans8) == 50, len(trans8)
    primitive_orders = {56, 168, 336, 1344, 20160, 40320}
    named8 = {(24, 19): ("8S154", "SL(2,3)", ("8S154",)),
              (48, 18): ("8S216", "GL(2,3)", ("8S216",)),
              (96, 17): ("8S240", "2^4:C3:C2", ("8S240",)),
              (288, 15): ("8T42", "2^4:C3:C2:C3", ("8T42",)),
              (384, 15): ("8T44", "2^4:C2:C2:C3:C2", ("8T44",)),
              (1152, 15): ("8T47", "(S4xS4):C2", ("8T47",))}
    seen_sig: dict[tuple[int, int], int] = {}
    xc = 3
    for c in trans8:
        G = c.representative
        s = count_set_orbits(G)
        if c.order in primitive_orders and is_primitive(G):
            continue  # already shipped from its own construction
        sig = (c.order, s)
        if sig in named8 and sig not in seen_sig:
            ident, name, cite = named8[sig]
        else:
            k = seen_sig.get(sig, 0)
            ident, name, cite = f"8X{xc}", f"T(8) order {c.order} s={s}" + \
                (f" #{k + 1}" if (sig in named8 or k) else ""), ()
            xc += 1
        seen_sig[sig] = seen_sig.get(sig, 0) + 1
        add(Entry(ident, name, list(G.generators), c.order, s=s, cite=cite))
    # intransitive classes the reference tables cite: the two 96/16 and two
    # 192/16 groups are transitive and already included; A7/S7 pad below
    add(Entry("8S293", "A7+1", pad(alt(7), 1), 2520, s=16, cite=("8S293",)))
    add(Entry("8S294", "S7+1", pad(sym(7), 1), 5040, s=16, cite=("8S294",)))

    # ---- degree 9: primitive ----------------------------------------------
    g9 = F9.generator()
    sq9 = F9.mul(g9, g9)
    add(Entry("9X1", "3^2:4", affine_line(F9, [sq9]), 36))
    add(Entry("9X2", "3^2:D8", affine_line(F9, [sq9], frobenius=True), 72))
    add(Entry("9T15", "AGL(1,9)", affine_line(F9, [g9]), 72, s=16,
              cite=("9T15",)))
    add(Entry("9S370", "3^2:Q8", affine_line(F9, [sq9], frobenius_twist=[g9]),
              72, s=18, cite=("9S370",)))
    add(Entry("9T19", "AGammaL(1,9)", affine_line(F9, [g9], frobenius=True),
              144, s=16, cite=("9T19",)))
    add(Entry("9P6", "ASL(2,3)", linear_group(3, 2, SL23_MATS, nonzero=False,
                                              translations=True),
              216, s=14, cite=("9P6",)))
    add(Entry("9P7", "AGL(2,3)", linear_group(3, 2, GL23_MATS, nonzero=False,
                                              translations=True),
              432, s=14, cite=("9P7",)))
    add(Entry("9X3", "PSL(2,8)", psl2(F8), 504, s=10))
    add(Entry("9X4", "PGammaL(2,8)", pgammal2(F8), 1512, s=10))
    add(Entry("9X5", "A9", alt(9), 181440, s=10))
    add(Entry("9X6", "S9", sym(9), 362880, s=10))

    # ---- degree 9: S3 wr S3 family and one-point paddings -----------------
    w9 = [cyc("(1,2,3)", 9), cyc("(1,2)", 9), cyc("(4,5,6)", 9), cyc("(4,5)", 9),
          cyc("(7,8,9)", 9), cyc("(7,8)", 9),
          cyc("(1,4,7)(2,5,8)(3,6,9)", 9), cyc("(1,4)(2,5)(3,6)", 9)]
    add(Entry("9S534", "S3wrS3", w9, 1296, s=20, cite=("9S534",)))
    # every block-imprimitive group of degree 9 sits inside S3 wr S3 up to
    # conjugacy; enumerate its subgroup classes and keep those whose
    # (order, set-orbit count) signature the reference tables cite
    print("enumerating subgroup classes of S3 wr S3 ...", flush=True)
    t0 = time.time()
    wcls = subgroup_classes_within(w9, 9)
    print(f"  {len(wcls)} classes inside the wreath ({time.time() - t0:.0f}s)",
          flush=True)
    targets9 = {(162, 20): 2, (324, 20): 1, (648, 20): 2}
    matched9: dict[tuple[int, int], list] = {}
    for gg, E, order in wcls:
        if order not in {162, 324, 648}:
            continue
        s = count_set_orbits(build_group([Permutation(t) for t in gg], degree=9))
        if (order, s) in targets9:
            matched9.setdefault((order, s), []).append((gg, E, order))
    xc9 = 7
    for key in sorted(targets9):
        picked = matched9.get(key, [])
        buckets = fuse_under_sn(picked, 9)
        assert len(buckets) == targets9[key], (key, len(buckets))
        order, s = key
        for j, bucket in enumerate(buckets, start=1):
            gens = [Permutation(t) for t in picked[bucket[0]][0]]
            if key == (324, 20):
                add(Entry("9S497", "3^3:C3:(C2xC2)", gens, order, s=s,
                          cite=("9S497",)))
            else:
                suffix = f" #{j}" if targets9[key] > 1 else ""
                add(Entry(f"9X{xc9}", f"wreath block group order {order}{suffix}",
                          gens, order, s=s))
                xc9 += 1

    add(Entry("9S355", "AGL(1,8)+1", pad(affine_line(F8, [g8]), 1), 56, s=20,
              cite=("9S355",)))
    add(Entry("9S462", "AGammaL(1,8)+1",
              pad(affine_line(F8, [g8], frobenius=True), 1), 168, s=20,
              cite=("9S462",)))
    add(Entry("9S499", "PGL(2,7)+1", pad(pgl2(F7), 1), 336, s=20,
              cite=("9S499",)))
    add(Entry("9S535", "ASL(3,2)+1",
              pad(linear_group(2, 3, GL32_MATS, nonzero=False, translations=True), 1),
              1344, s=20, cite=("9S535",)))
    add(Entry("9S551", "A8+1", pad(alt(8), 1), 20160, s=18, cite=("9S551",)))
    add(Entry("9S552", "S8+1", pad(sym(8), 1), 40320, s=18, cite=("9S552",)))

    # ---- degree 10: primitive ---------------------------------------------
    add(Entry("10X1", "A5 (pairs)", pair_action(alt(5)), 60))
    add(Entry("10X2", "S5 (pairs)", pair_action(sym(5)), 120))
    add(Entry("10S1396", "A6=PSL(2,9)", psl2(F9), 360, s=20, cite=("10S1396",)))
    add(Entry("10P4", "PGL(2,9)", pgl2(F9), 720, s=14, cite=("10P4",)))
    add(Entry("10T32", "PSigmaL(2,9)=S6", psigmal2(F9), 720, s=19,
              cite=("10T32",)))
    add(Entry("10P6", "M10", m10_maps(F9), 720, s=15, cite=("10P6",)))
    add(Entry("10P7", "PGammaL(2,9)", pgammal2(F9), 1440, s=14, cite=("10P7",)))
    add(Entry("10X3", "A10", alt(10), 1814400, s=11))
    add(Entry("10X4", "S10", sym(10), 3628800, s=11))

    # ---- degree 10: wreath-type groups and paddings -----------------------
    u = cyc("(1,6)(2,7)(3,8)(4,9)(5,10)", 10)
    f20a = [cyc("(1,2,3,4,5)", 10), cyc("(2,3,5,4)", 10)]
    f20b = [cyc("(6,7,8,9,10)", 10), cyc("(7,8,10,9)", 10)]
    add(Entry("10S1496", "AGL(1,5)wrC2", f20a + f20b + [u], 800, s=21,
              cite=("10S1496",)))
    a5a = [cyc("(1,2,3)", 10), cyc("(1,2,3,4,5)", 10)]
    a5b = [cyc("(6,7,8)", 10), cyc("(6,7,8,9,10)", 10)]
    add(Entry("10S1569", "(A5xA5):C2", a5a + a5b + [u], 7200, s=21,
              cite=("10S1569",)))
    # the Klein extension adjoins the block swap u and an (odd, odd) pair
    # separately; the cyclic one adjoins w with w^2 = (1,2)(6,7), an (odd,
    # odd) element, so its quotient over A5 x A5 is C4
    tpair = cyc("(1,2)(6,7)", 10)
    w4 = cyc("(1,6,2,7)(3,8)(4,9)(5,10)", 10)
    add(Entry("10S1576", "(A5xA5):(C2xC2)", a5a + a5b + [u, tpair], 14400,
              s=21, cite=("10S1576",)))
    add(Entry("10S1577", "(A5xA5):C4", a5a + a5b + [w4], 14400, s=21,
              cite=("10S1577",)))
    add(Entry("10S1584", "S5wrC2",
              [cyc("(1,2)", 10), cyc("(1,2,3,4,5)", 10),
               cyc("(6,7)", 10), cyc("(6,7,8,9,10)", 10), u], 28800, s=21,
              cite=("10S1584",)))
    # blocks of size 2: base flips b_i = (2i-1, 2i), top S5 on the blocks.
    # Of the three index-2 subgroups of S2 wr S5 the tables cite the twisted
    # one (base flip parity = block permutation parity) and 2^5:A5; the
    # even-base 2^4:S5 has s = 22 and is not a table group.
    b1 = cyc("(1,2)", 10)
    b12 = cyc("(1,2)(3,4)", 10)
    top_t = cyc("(1,3)(2,4)", 10)
    top_c = cyc("(1,3,5,7,9)(2,4,6,8,10)", 10)
    top_3 = cyc("(1,3,5)(2,4,6)", 10)
    add(Entry("10S1542", "2^4:S5 (twisted)", [b12, top_c, b1 * top_t], 1920,
              s=21, cite=("10S1542",)))
    add(Entry("10S1543", "C2x(2^4:A5)", [b1, top_3, top_c], 1920, s=21,
              cite=("10S1543",)))
    add(Entry("10S1561", "C2x(2^4:S5)", [b1, top_t, top_c], 3840, s=21,
              cite=("10S1561",)))
    add(Entry("10S1448", "PSL(2,8)+1", pad(psl2(F8), 1), 504, s=20,
              cite=("10S1448",)))
    add(Entry("10S1539", "PGammaL(2,8)+1", pad(pgammal2(F8), 1), 1512, s=20,
              cite=("10S1539",)))
    add(Entry("10S1590", "A9+1", pad(alt(9), 1), 181440, s=20, cite=("10S1590",)))
    add(Entry("10S1591", "S9+1", pad(sym(9), 1), 362880, s=20, cite=("10S1591",)))

    # ---- degree 11 ---------------------------------------------------------
    add(Entry("11X1", "C11", [cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11)], 11))
    add(Entry("11X2", "D22", [cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                              cyc("(2,11)(3,10)(4,9)(5,8)(6,7)", 11)], 22))
    add(Entry("11X3", "11:5", affine_line(F11, [3]), 55))
    add(Entry("11X4", "AGL(1,11)", affine_line(F11, [2]), 110))
    psl211_12 = psl2(F11)
    G12 = build_group(psl211_12)
    assert G12.order == 660
    a5_in = find_subgroup_of_order(G12, 60, seed=11)
    psl211_11 = coset_action(psl211_12, a5_in, 12)
    add(Entry("11X5", "PSL(2,11) deg 11", psl211_11, 660))
    m11 = [cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11), cyc("(3,7,11,8)(4,10,5,6)", 11)]
    add(Entry("11P6", "M11", m11, 7920, s=14, cite=("11P6",)))
    add(Entry("11X6", "A11", alt(11), 19958400, s=12))
    add(Entry("11X7", "S11", sym(11), 39916800, s=12))
    add(Entry("11S3091", "A10+1", pad(alt(10), 1), 1814400, s=22,
              cite=("11S3091",)))
    add(Entry("11S3092", "S10+1", pad(sym(10), 1), 3628800, s=22,
              cite=("11S3092",)))

    # ---- degree 12 ---------------------------------------------------------
    M11g = build_group(m11)
    psl_in_m11 = find_subgroup_of_order(M11g, 660, seed=12)
    m11_12 = coset_action(m11, psl_in_m11, 11)
    add(Entry("12P1", "M11 deg 12", m11_12, 7920, s=19, cite=("12P1",)))
    m12 = [cyc("(1,2,3,4,5,6,7,8,9,10,11)", 12), cyc("(3,7,11,8)(4,10,5,6)", 12),
           cyc("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)]
    add(Entry("12P2", "M12", m12, 95040, s=14, cite=("12P2",)))
    add(Entry("12T179", "PSL(2,11)", psl2(F11), 660, s=22, cite=("12T179",)))
    add(Entry("12T218", "PGL(2,11)", pgl2(F11), 1320, s=20, cite=("12T218",)))
    add(Entry("12X1", "A12", alt(12), 239500800, s=13))
    add(Entry("12X2", "S12", sym(12), 479001600, s=13))

    # ---- structural cross-checks ------------------------------------------
    for e in entries:
        flags = ("P" if e.primitive else "") + ("T" if e.transitive else "")
        print(f"  {e.ident:10s} deg={e.degree:2d} order={e.order:<9d} "
              f"s={e.s:<3d} {flags:2s} {e.name}")
    check_entries(entries)
    lines = [HEADER] + [e.line() for e in entries]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} with {len(entries)} entries "
          f"({time.time() - t_start:.0f}s total)")


HEADER = """\
# Permutation group database: generators in cycle notation over {1..degree}.
# id|degree|name|order|tags|generators|set-orbit count
#
# Sources: projective/affine/linear actions over small finite fields, coset
# actions, wreath embeddings, one-point paddings, and an exhaustive
# enumeration of the transitive subgroup classes of S_8.  Regenerate with
# scripts/derive_catalog.py; every entry is re-verified by the test suite
# (order, transitivity, primitivity, set-orbit count).\
"""


def check_entries(entries):
    prim = {}
    for e in entries:
        if e.primitive:
            prim[e.degree] = prim.get(e.degree, 0) + 1
    expected = {2: 1, 3: 2, 4: 2, 5: 5, 6: 4, 7: 7, 8: 7, 9: 11, 10: 9,
                11: 8, 12: 6}
    assert prim == expected, (prim, expected)
    t8 = sum(1 for e in entries if e.degree == 8 and e.transitive)
    assert t8 == 50, t8
    ids = [e.ident for e in entries]
    assert len(ids) == len(set(ids))
    # each primitive entry is transitive
    for e in entries:
        if e.primitive:
            assert e.transitive
    print(f"primitive counts per degree OK: {expected}")


if __name__ == "__main__":
    main()
