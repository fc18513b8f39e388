"""Permutations and permutation groups on {1..n}.

Points are 1-based in all text I/O (cycle notation) and 0-based internally;
the conversion happens only at the parse/print boundary.  Composition is
right-to-left: ``compose(a, b)`` applies ``b`` first, then ``a``.

Groups are backed by a deterministic stabilizer chain (Schreier-Sims, no
randomization), which gives exact orders, membership tests and duplicate-free
element iteration.  A ``PermGroup`` is immutable once its chain is built and
can be shared freely between threads.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_ELEMENT_CAP = 10**7


class PermError(ValueError):
    """Malformed permutation input (bad cycle text, degree mismatch...)."""


class GroupTooLargeError(RuntimeError):
    """Group order exceeds the configured element-iteration cap."""


# ---------------------------------------------------------------------------
# raw tuple helpers (0-based image tuples; the hot path of every module)

def _compose_t(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a o b)[i] = a[b[i]]
    return tuple(map(a.__getitem__, b))


def _inverse_t(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def _conjugate_t(s: tuple[int, ...], x: tuple[int, ...]) -> tuple[int, ...]:
    # s x s^-1, evaluated without building the inverse
    out = [0] * len(s)
    for i, j in enumerate(x):
        out[s[i]] = s[j]
    return tuple(out)


def _cycle_lengths(p: tuple[int, ...]) -> tuple[int, ...]:
    """Sorted cycle lengths of ``p``, fixed points included."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out.append(length)
    out.sort()
    return tuple(out)


def _identity_t(n: int) -> tuple[int, ...]:
    return tuple(range(n))


# ---------------------------------------------------------------------------
# Permutation

class Permutation:
    """A bijection on {1..n}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        t = tuple(images)
        n = len(t)
        if n < 1:
            raise PermError("degree must be at least 1")
        if sorted(t) != list(range(n)):
            raise PermError(f"not a bijection on 0..{n - 1}: {t!r}")
        object.__setattr__(self, "images", t)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= len(self.images):
            raise PermError(f"point {point} out of range 1..{len(self.images)}")
        return self.images[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles as 1-based tuples, each starting at its minimum."""
        p = self.images
        seen = set()
        out = []
        for i in range(len(p)):
            if i in seen or p[i] == i:
                continue
            cyc = [i]
            j = p[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = p[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    @staticmethod
    def parse(text: str, degree: int) -> "Permutation":
        return parse_permutation(text, degree)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))


@dataclass(frozen=True)
class CycleStructure:
    """Multiset of cycle lengths of a permutation (fixed points included)."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if any(l < 1 for l in self.lengths):
            raise PermError("cycle lengths must be positive")
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths)))

    @property
    def degree(self) -> int:
        return sum(self.lengths)

    def as_counter(self) -> Counter:
        return Counter(self.lengths)


# ---------------------------------------------------------------------------
# parsing / arithmetic

def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``"(1,2,3)(4,5)"`` over {1..degree}.

    ``"()"`` denotes the identity; points absent from the text are fixed.
    Out-of-range points, repeated points and malformed syntax are rejected.
    """
    if degree < 1:
        raise PermError("degree must be at least 1")
    s = "".join(text.split())
    if not s:
        raise PermError("empty permutation text")
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    any_cycle = False
    while pos < len(s):
        if s[pos] != "(":
            raise PermError(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise PermError(f"unclosed cycle in {text!r}")
        body = s[pos + 1:end]
        pos = end + 1
        any_cycle = True
        if not body:
            continue  # "()" - explicit identity cycle
        try:
            pts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise PermError(f"non-integer point in cycle {body!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise PermError(f"point {p} out of range 1..{degree}")
            if p in seen:
                raise PermError(f"repeated point {p} in {text!r}")
            seen.add(p)
        for a, b in zip(pts, pts[1:]):
            images[a - 1] = b - 1
        images[pts[-1] - 1] = pts[0] - 1
    if not any_cycle:
        raise PermError(f"no cycles found in {text!r}")
    return Permutation(images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Product ``a o b``: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise PermError(f"degree mismatch: {a.degree} != {b.degree}")
    return Permutation(_compose_t(a.images, b.images))


def inverse(a: Permutation) -> Permutation:
    return Permutation(_inverse_t(a.images))


def cycle_type(p: Permutation) -> CycleStructure:
    return CycleStructure(_cycle_lengths(p.images))


# ---------------------------------------------------------------------------
# stabilizer chain

class _Chain:
    """Deterministic base / strong generating set for a tuple-generated group.

    ``base[i]`` is the i-th base point, ``trans[i]`` maps each point of the
    i-th basic orbit to a coset representative u with u[base[i]-orbit] ...
    precisely u[base[i]] = point.  ``strong[i]`` generates the stabilizer of
    base[:i].
    """

    __slots__ = ("n", "base", "trans", "_strong_with_level", "order")

    def __init__(self, gens: Iterable[tuple[int, ...]], n: int,
                 forced_base: Sequence[int] = ()):
        self.n = n
        self.base: list[int] = []
        self.trans: list[dict[int, tuple[int, ...]]] = []
        self._strong_with_level: list[tuple[tuple[int, ...], int]] = []
        ident = _identity_t(n)
        for b in forced_base:
            self.base.append(b)
            self.trans.append({b: ident})

        for g in gens:
            if g != ident:
                self._insert(g)
        self._complete()
        self.order = math.prod(len(t) for t in self.trans) if self.trans else 1

    # -- construction ---------------------------------------------------

    def _level_of(self, g: tuple[int, ...]) -> int:
        for i, b in enumerate(self.base):
            if g[b] != b:
                return i
        # fixes the whole base: needs a fresh base point
        b = min(p for p in range(self.n) if g[p] != p)
        self.base.append(b)
        self.trans.append({b: _identity_t(self.n)})
        return len(self.base) - 1

    def _insert(self, g: tuple[int, ...]):
        self._strong_with_level.append((g, self._level_of(g)))

    def _gens_at(self, i: int) -> list[tuple[int, ...]]:
        return [g for g, lvl in self._strong_with_level if lvl >= i]

    def _rebuild_orbit(self, i: int):
        b = self.base[i]
        gens = self._gens_at(i)
        t = {b: _identity_t(self.n)}
        queue = [b]
        while queue:
            p = queue.pop()
            up = t[p]
            for s in gens:
                q = s[p]
                if q not in t:
                    t[q] = _compose_t(s, up)  # maps b -> q
                    queue.append(q)
        self.trans[i] = t

    def _strip(self, g: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        for j in range(start, len(self.base)):
            p = g[self.base[j]]
            u = self.trans[j].get(p)
            if u is None:
                return g, j
            g = _compose_t(_inverse_t(u), g)
        return g, len(self.base)

    def _complete(self):
        """Schreier-Sims verification loop: sift all Schreier generators."""
        ident = _identity_t(self.n)
        i = len(self.base) - 1
        while i >= 0:
            self._rebuild_orbit(i)
            restart = False
            gens_i = self._gens_at(i)
            for p in sorted(self.trans[i]):
                up = self.trans[i][p]
                for s in gens_i:
                    uq = self.trans[i][s[p]]
                    schreier = _compose_t(_inverse_t(uq), _compose_t(s, up))
                    if schreier == ident:
                        continue
                    h, j = self._strip(schreier, i + 1)
                    if h != ident:
                        lvl = self._level_of(h)
                        self._strong_with_level.append((h, lvl))
                        for k in range(i + 1, min(lvl, len(self.base) - 1) + 1):
                            self._rebuild_orbit(k)
                        i = lvl
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries ---------------------------------------------------------

    def contains(self, g: tuple[int, ...]) -> bool:
        h, j = self._strip(g, 0)
        return j == len(self.base) and h == _identity_t(self.n)

    def iter_elements(self) -> Iterator[tuple[int, ...]]:
        """Each group element exactly once, in deterministic order."""
        if not self.trans:
            yield _identity_t(self.n)
            return
        levels = [sorted(t.items()) for t in self.trans]

        def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if i == len(levels):
                yield acc
                return
            for _, u in levels[i]:
                yield from rec(i + 1, _compose_t(acc, u))

        yield from rec(0, _identity_t(self.n))

    def basic_orbit_lengths(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.trans)


class PermGroup:
    """A permutation group given by generators, with an exact stabilizer chain.

    Immutable after construction; all derived data (order, chain) is computed
    deterministically so iteration order and reported orders are reproducible.
    """

    __slots__ = ("degree", "generators", "_chain")

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise PermError("empty generator list needs an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise PermError(
                    f"generator degree {g.degree} != group degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(g for g in gens
                                                     if not g.is_identity()))
        object.__setattr__(self, "_chain",
                           _Chain((g.images for g in self.generators), degree))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PermGroup is immutable")

    @property
    def order(self) -> int:
        return self._chain.order

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        return self._chain.contains(p.images)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, <{gens}>)"

    # raw access used by the counting/enumeration modules
    def generator_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.images for g in self.generators)

    def iter_element_tuples(self, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[tuple[int, ...]]:
        if self.order > cap:
            raise GroupTooLargeError(
                f"group of order {self.order} too large for element iteration"
                f" (cap {cap})")
        return self._chain.iter_elements()

    def is_natural_symmetric(self) -> bool:
        return self.order == math.factorial(self.degree)

    def is_natural_alternating(self) -> bool:
        # index 2 in S_n forces A_n, the unique such subgroup
        return self.degree >= 2 and self.order * 2 == math.factorial(self.degree)

    def contains_alternating(self) -> bool:
        """True iff A_degree <= G (i.e. G is A_n or S_n in natural action)."""
        return 2 * self.order >= math.factorial(self.degree)

    def orbit_of(self, point0: int) -> frozenset[int]:
        """Orbit of a 0-based point under the group."""
        gens = self.generator_tuples()
        orb = {point0}
        queue = [point0]
        while queue:
            p = queue.pop()
            for g in gens:
                q = g[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        return frozenset(orb)

    def orbits(self) -> list[frozenset[int]]:
        """All point orbits (0-based), ordered by smallest member."""
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit_of(min(left))
            out.append(orb)
            left -= orb
        return out

    def fixed_points(self) -> tuple[int, ...]:
        """0-based points fixed by every generator."""
        gens = self.generator_tuples()
        return tuple(i for i in range(self.degree)
                     if all(g[i] == i for g in gens))


def build_group(gens: Sequence[Permutation], degree: int | None = None) -> PermGroup:
    """Group generated by ``gens``; empty list plus explicit degree gives {e}."""
    return PermGroup(gens, degree)


def elements(G: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[Permutation]:
    """Stream every element of G exactly once.

    Raises GroupTooLargeError when order(G) exceeds ``cap``.
    """
    for t in G.iter_element_tuples(cap):
        yield Permutation(t)


# ---------------------------------------------------------------------------
# structural predicates

def is_transitive(G: PermGroup) -> bool:
    """True iff the orbit of point 1 is all of {1..n}."""
    return len(G.orbit_of(0)) == G.degree


def _minimal_block_size(gens: Sequence[tuple[int, ...]], n: int,
                        alpha: int, beta: int) -> int:
    """Size of the smallest block containing {alpha, beta} (Atkinson)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ra, rb = find(alpha), find(beta)
    parent[rb] = ra
    queue = [(alpha, beta)]
    while queue:
        a, b = queue.pop()
        for g in gens:
            ga, gb = find(g[a]), find(g[b])
            if ga != gb:
                parent[gb] = ga
                queue.append((g[a], g[b]))
    size = sum(1 for i in range(n) if find(i) == find(alpha))
    return size


def is_primitive(G: PermGroup) -> bool:
    """Transitive with no nontrivial block system.

    Intransitive groups report False by convention.  Tested by computing, for
    every beta != alpha, the minimal block containing {alpha, beta}.
    """
    n = G.degree
    if not is_transitive(G):
        return False
    if n == 1:
        return True
    gens = G.generator_tuples()
    for beta in range(1, n):
        if _minimal_block_size(gens, n, 0, beta) < n:
            return False
    return True


def transitivity_degree(G: PermGroup) -> int:
    """Largest k with G transitive on ordered k-tuples of distinct points.

    Read off a stabilizer chain with forced base 0,1,2,...: G is k-transitive
    iff the successive basic orbits have sizes n, n-1, ..., n-k+1.
    """
    n = G.degree
    chain = _Chain(G.generator_tuples(), n, forced_base=range(n))
    k = 0
    for i, t in enumerate(chain.trans[:n]):
        if len(t) == n - i:
            k += 1
        else:
            break
    return k
