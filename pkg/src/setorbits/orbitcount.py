"""Exact set-orbit counts: Burnside averaging plus a direct subset enumerator.

A subset of {1..n} is fixed by g exactly when it is a union of cycles of g,
so g fixes 2^(#cycles) subsets and, refined by size, the coefficients of
prod_i (1 + x^(l_i)) over the cycle lengths l_i.  Averaging over the group
gives s(G) and the profile (s_0, ..., s_n); every division is asserted exact.

Two independent routes are kept deliberately separate: the Burnside average
over a stabilizer chain (scales with |G|) and a breadth-first enumeration of
all 2^n subset bitmasks (scales with 2^n).  Tests hold them equal wherever
both run.

Subsets are encoded as bitmasks with point i on bit i-1, so orbit dumps are
reproducible bit for bit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .perm import (
    DEFAULT_ELEMENT_CAP,
    GroupTooLargeError,
    PermGroup,
    Permutation,
    _cycle_lengths,
    build_group,
)

ENUMERATION_MAX_DEGREE = 22


@dataclass(frozen=True)
class OrbitProfile:
    """The vector (s_0(G), ..., s_n(G)) together with the total s(G)."""

    degree: int
    by_size: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.by_size) != self.degree + 1:
            raise ValueError("profile must have degree + 1 entries")
        if self.total != sum(self.by_size):
            raise ValueError("total must equal the sum of the entries")

    def is_symmetric(self) -> bool:
        return self.by_size == self.by_size[::-1]

    def is_monotone_to_middle(self) -> bool:
        half = self.degree // 2
        return all(self.by_size[t - 1] <= self.by_size[t]
                   for t in range(1, half + 1))


def _restriction_to_support(G: PermGroup) -> tuple[PermGroup, int] | None:
    """(G restricted to its moved points, #fixed points), or None if faithful
    restriction does not drop any point."""
    fixed = G.fixed_points()
    if not fixed:
        return None
    moved = [i for i in range(G.degree) if i not in set(fixed)]
    if not moved:
        return None  # trivial group; let the generic path handle it
    index = {p: k for k, p in enumerate(moved)}
    gens = [Permutation([index[g[p]] for p in moved])
            for g in G.generator_tuples()]
    return build_group(gens, degree=len(moved)), len(fixed)


def _cycle_type_histogram(G: PermGroup, cap: int) -> Counter:
    """Multiset of cycle-length tuples over all elements of G."""
    hist: Counter = Counter()
    for t in G.iter_element_tuples(cap):
        hist[_cycle_lengths(t)] += 1
    return hist


def _profile_from_histogram(n: int, order: int, hist: Counter) -> tuple[int, ...]:
    total_counts = [0] * (n + 1)
    for lengths, mult in hist.items():
        coeff = [0] * (n + 1)
        coeff[0] = 1
        top = 0
        for l in lengths:
            top += l
            for t in range(top, l - 1, -1):
                coeff[t] += coeff[t - l]
        for t in range(n + 1):
            total_counts[t] += mult * coeff[t]
    out = []
    for t, c in enumerate(total_counts):
        q, r = divmod(c, order)
        if r:
            raise ArithmeticError(
                f"Burnside numerator {c} for size {t} not divisible by {order}")
        out.append(q)
    return tuple(out)


def orbit_profile(G: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> OrbitProfile:
    """Exact per-size set-orbit counts (s_0, ..., s_n).

    Natural symmetric and alternating groups short-circuit to the all-ones
    profile; a group whose fixed points can be split off is reduced to its
    support first (each fixed point doubles every entry's contribution
    pattern: the profile is the convolution with (1, 1)).
    """
    n = G.degree
    if G.is_natural_symmetric() or (n >= 3 and G.is_natural_alternating()):
        by_size = (1,) * (n + 1)
        return OrbitProfile(n, by_size, n + 1)
    split = _restriction_to_support(G)
    if split is not None:
        core, k = split
        inner = orbit_profile(core, cap)
        by_size = list(inner.by_size) + [0] * k
        for _ in range(k):  # convolve with (1, 1) per fixed point
            by_size = [by_size[t] + (by_size[t - 1] if t else 0)
                       for t in range(len(by_size))]
        return OrbitProfile(n, tuple(by_size), sum(by_size))
    if G.order > cap:
        raise GroupTooLargeError(
            f"group of order {G.order} exceeds the element-iteration cap {cap}"
            " and no symmetric/alternating shortcut applies")
    hist = _cycle_type_histogram(G, cap)
    by_size = _profile_from_histogram(n, G.order, hist)
    return OrbitProfile(n, by_size, sum(by_size))


def count_set_orbits(G: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """s(G) = (sum over g of 2^(#cycles of g)) / |G|, computed exactly."""
    n = G.degree
    if G.is_natural_symmetric() or (n >= 3 and G.is_natural_alternating()):
        return n + 1
    split = _restriction_to_support(G)
    if split is not None:
        core, k = split
        return count_set_orbits(core, cap) << k
    if G.order > cap:
        raise GroupTooLargeError(
            f"group of order {G.order} exceeds the element-iteration cap {cap}"
            " and no symmetric/alternating shortcut applies")
    total = 0
    for t in G.iter_element_tuples(cap):
        total += 1 << len(_cycle_lengths(t))
    q, r = divmod(total, G.order)
    if r:
        raise ArithmeticError(
            f"Burnside numerator {total} not divisible by |G| = {G.order}")
    return q


def enumerate_set_orbits(G: PermGroup) -> list[list[int]]:
    """Partition of all 2^n subsets into orbits, subsets as bitmasks.

    Orbits are sorted by (subset size, smallest member mask); within an
    orbit, masks are ascending.  Requires degree <= 22.
    """
    n = G.degree
    if n > ENUMERATION_MAX_DEGREE:
        raise GroupTooLargeError(
            f"degree {n} too large for subset enumeration (max "
            f"{ENUMERATION_MAX_DEGREE})")
    gens = G.generator_tuples()
    # per generator: mask -> image mask, computed bit by bit
    total = 1 << n
    seen = bytearray(total)
    orbits: list[list[int]] = []
    for start in range(total):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = 1
        stack = [start]
        while stack:
            m = stack.pop()
            for g in gens:
                img = 0
                rest = m
                while rest:
                    low = rest & -rest
                    img |= 1 << g[low.bit_length() - 1]
                    rest ^= low
                if not seen[img]:
                    seen[img] = 1
                    orbit.append(img)
                    stack.append(img)
        orbit.sort()
        orbits.append(orbit)
    orbits.sort(key=lambda orb: (bin(orb[0]).count("1"), orb[0]))
    return orbits


def profile_from_enumeration(G: PermGroup) -> OrbitProfile:
    """Profile read off the explicit orbit partition (the oracle route)."""
    n = G.degree
    by_size = [0] * (n + 1)
    for orb in enumerate_set_orbits(G):
        by_size[bin(orb[0]).count("1")] += 1
    return OrbitProfile(n, tuple(by_size), sum(by_size))


def is_t_set_transitive(G: PermGroup, t: int,
                        cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """True iff s_t(G) = 1."""
    if not 0 <= t <= G.degree:
        raise ValueError(f"t = {t} out of range 0..{G.degree}")
    return orbit_profile(G, cap).by_size[t] == 1


def is_set_transitive(G: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """True iff s(G) = n + 1, i.e. one orbit for every subset size."""
    return count_set_orbits(G, cap) == G.degree + 1


def dump_orbits(G: PermGroup) -> list[str]:
    """Orbit dump lines: subsets as sorted {a,b,...} lists, one orbit per line."""
    lines = []
    for orb in enumerate_set_orbits(G):
        parts = []
        for mask in orb:
            pts = [str(i + 1) for i in range(G.degree) if mask >> i & 1]
            parts.append("{" + ",".join(pts) + "}")
        lines.append(" ".join(parts))
    return lines
