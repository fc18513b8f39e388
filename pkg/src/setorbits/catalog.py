"""Named permutation groups: built-in families and the shipped group database.

The database (``data/groups.cat``) holds generator words in cycle notation
for the primitive groups of every degree up to 12 (complete for degrees 6
through 12), the transitive groups of degree 8, and the auxiliary groups
needed to reproduce the reference classification tables.  No generator set
is trusted: ``verify_entry`` rebuilds every group and checks its order, its
transitivity/primitivity tags and (when recorded) its set-orbit count, and
the test suite runs this over the whole file.

Record format, one per line, ``#`` starts a comment:

    id|degree|name|expected_order|tag,tag,...|gen;gen;...[|expected_s]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import IO, Iterable, Optional

from .orbitcount import count_set_orbits
from .perm import PermGroup, Permutation, build_group, is_primitive, is_transitive, parse_permutation

_KNOWN_TAG_PREFIXES = ("paper:",)
_KNOWN_TAGS = ("transitive", "primitive")

#: number of primitive groups of each degree; the shipped file must carry
#: exactly this many primitive-tagged entries per degree (classical counts,
#: rechecked against our own subgroup enumeration for degree <= 7)
PRIMITIVE_COUNTS = {2: 1, 3: 2, 4: 2, 5: 5, 6: 4, 7: 7, 8: 7, 9: 11,
                    10: 9, 11: 8, 12: 6}

#: number of transitive groups of degree 8; the shipped file carries all of
#: them (7 primitive + 43 imprimitive, enumerated inside the two wreath
#: closures that contain every imprimitive transitive group of degree 8)
TRANSITIVE_8_COUNT = 50


class CatalogError(ValueError):
    """Malformed catalog data."""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    degree: int
    name: str
    expected_order: int
    tags: frozenset[str]
    generator_texts: tuple[str, ...]
    expected_s: Optional[int] = None

    def group(self) -> PermGroup:
        return _build_entry_group(self)

    def cited_ids(self) -> tuple[str, ...]:
        """IDs from the reference tables this entry is tagged with."""
        return tuple(sorted(t.split(":", 1)[1] for t in self.tags
                            if t.startswith("paper:")))


@lru_cache(maxsize=None)
def _build_entry_group_cached(degree: int, gen_texts: tuple[str, ...]) -> PermGroup:
    gens = [parse_permutation(t, degree) for t in gen_texts]
    return build_group(gens, degree=degree)


def _build_entry_group(e: CatalogEntry) -> PermGroup:
    return _build_entry_group_cached(e.degree, e.generator_texts)


# ---------------------------------------------------------------------------
# loading

def parse_catalog(text: str) -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    seen_ids: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("|")
        if len(parts) not in (6, 7):
            raise CatalogError(f"line {lineno}: expected 6 or 7 fields, "
                               f"got {len(parts)}")
        ident, deg_s, name, order_s, tags_s, gens_s = parts[:6]
        if ident in seen_ids:
            raise CatalogError(f"line {lineno}: duplicate id {ident!r} "
                               f"(first seen on line {seen_ids[ident]})")
        seen_ids[ident] = lineno
        try:
            degree = int(deg_s)
            expected_order = int(order_s)
        except ValueError:
            raise CatalogError(f"line {lineno}: bad integer field") from None
        tags = frozenset(t for t in tags_s.split(",") if t)
        for t in tags:
            if t not in _KNOWN_TAGS and not t.startswith(_KNOWN_TAG_PREFIXES):
                raise CatalogError(f"line {lineno}: unknown tag {t!r}")
        gen_texts = tuple(g for g in gens_s.split(";") if g)
        for g in gen_texts:
            try:
                parse_permutation(g, degree)
            except Exception as exc:
                raise CatalogError(f"line {lineno}: bad generator {g!r}: {exc}")
        expected_s = None
        if len(parts) == 7 and parts[6]:
            try:
                expected_s = int(parts[6])
            except ValueError:
                raise CatalogError(f"line {lineno}: bad expected_s") from None
        entries.append(CatalogEntry(ident, degree, name, expected_order, tags,
                                    gen_texts, expected_s))
    return entries


def load_catalog(source: IO[bytes] | bytes | str) -> list[CatalogEntry]:
    """Parse catalog records from a byte stream, bytes or text."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read().decode("utf-8")
    return parse_catalog(text)


@lru_cache(maxsize=1)
def load_default() -> tuple[CatalogEntry, ...]:
    """The catalog shipped with the package."""
    data = resources.files("setorbits").joinpath("data/groups.cat").read_bytes()
    return tuple(load_catalog(data))


def by_id(ident: str) -> CatalogEntry:
    for e in load_default():
        if e.id == ident:
            return e
    raise KeyError(f"no catalog entry {ident!r}")


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class EntryReport:
    entry_id: str
    checks: tuple[tuple[str, bool, str], ...]  # (check name, passed, detail)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, passed, detail in self.checks
                if not passed]


def verify_entry(e: CatalogEntry, s_degree_limit: int = 14) -> EntryReport:
    """Rebuild the group and check order, tags and recorded s-value."""
    checks: list[tuple[str, bool, str]] = []
    try:
        G = e.group()
    except Exception as exc:
        return EntryReport(e.id, (("build", False, str(exc)),))
    checks.append(("order", G.order == e.expected_order,
                   f"built {G.order}, expected {e.expected_order}"))
    trans = is_transitive(G)
    checks.append(("transitive-tag", trans == ("transitive" in e.tags),
                   f"group {'is' if trans else 'is not'} transitive, tag "
                   f"{'present' if 'transitive' in e.tags else 'absent'}"))
    prim = is_primitive(G)
    checks.append(("primitive-tag", prim == ("primitive" in e.tags),
                   f"group {'is' if prim else 'is not'} primitive, tag "
                   f"{'present' if 'primitive' in e.tags else 'absent'}"))
    if e.expected_s is not None and e.degree <= s_degree_limit:
        s = count_set_orbits(G)
        checks.append(("set-orbits", s == e.expected_s,
                       f"computed {s}, expected {e.expected_s}"))
    return EntryReport(e.id, tuple(checks))


def verify_catalog(entries: Iterable[CatalogEntry] | None = None) -> list[EntryReport]:
    if entries is None:
        entries = load_default()
    return [verify_entry(e) for e in entries]


def check_manifest(entries: Iterable[CatalogEntry] | None = None) -> list[str]:
    """Completeness assertions: primitive counts per degree, transitive deg 8.

    Returns a list of problems (empty = complete).
    """
    if entries is None:
        entries = load_default()
    entries = list(entries)
    problems = []
    for degree, want in PRIMITIVE_COUNTS.items():
        got = sum(1 for e in entries
                  if e.degree == degree and "primitive" in e.tags)
        if got != want:
            problems.append(f"degree {degree}: {got} primitive entries, "
                            f"expected {want}")
    got8 = sum(1 for e in entries
               if e.degree == 8 and "transitive" in e.tags)
    if got8 != TRANSITIVE_8_COUNT:
        problems.append(f"degree 8: {got8} transitive entries, expected "
                        f"{TRANSITIVE_8_COUNT}")
    return problems


# ---------------------------------------------------------------------------
# built-in families

def builtin(family: str, n: int) -> PermGroup:
    """Natural actions: cyclic, dihedral (order 2n on n points, n >= 3),
    symmetric, alternating."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if family == "cyclic":
        if n == 1:
            return build_group([], degree=1)
        return build_group([_cycle(n)])
    if family == "dihedral":
        if n < 3:
            raise ValueError("dihedral needs n >= 3")
        flip = Permutation([0] + list(range(n - 1, 0, -1)))
        return build_group([_cycle(n), flip])
    if family == "symmetric":
        if n == 1:
            return build_group([], degree=1)
        gens = [Permutation([1, 0] + list(range(2, n)))]
        if n >= 3:
            gens.append(_cycle(n))
        return build_group(gens, degree=n)
    if family == "alternating":
        if n <= 2:
            return build_group([], degree=n)
        three = Permutation([1, 2, 0] + list(range(3, n)))
        if n == 3:
            return build_group([three])
        if n % 2:  # an n-cycle is even for odd n
            return build_group([three, _cycle(n)])
        rest = Permutation([0] + list(range(2, n)) + [1])  # (2,3,...,n)
        return build_group([three, rest])
    raise ValueError(f"unknown family {family!r}")


def _cycle(n: int) -> Permutation:
    return Permutation(list(range(1, n)) + [0])


# ---------------------------------------------------------------------------
# candidate selection

def candidates(degree: int, filter: str = "all",
               divisibility: Optional[tuple[int, int]] = None,
               entries: Iterable[CatalogEntry] | None = None) -> list[CatalogEntry]:
    """Catalog entries of one degree passing a tag filter and an optional
    C(n, t) | order test.  ``divisibility`` is (t, C(degree, t))."""
    if filter not in ("all", "transitive", "primitive"):
        raise ValueError(f"unknown filter {filter!r}")
    if entries is None:
        entries = load_default()
    out = []
    for e in entries:
        if e.degree != degree:
            continue
        if filter != "all" and filter not in e.tags:
            continue
        if divisibility is not None:
            t, binom = divisibility
            if math.comb(degree, t) != binom:
                raise ValueError("inconsistent divisibility pair")
            if e.expected_order % binom:
                continue
        out.append(e)
    return out
