import math

import pytest

from setorbits.catalog import (
    CatalogError,
    TRANSITIVE_8_COUNT,
    builtin,
    by_id,
    candidates,
    check_manifest,
    load_catalog,
    load_default,
    parse_catalog,
    verify_entry,
)
from setorbits.orbitcount import count_set_orbits
from setorbits.perm import is_primitive, is_transitive


# ---------------------------------------------------------------------------
# parsing

def test_parse_simple_record():
    entries = parse_catalog("x1|6|PSL(2,5)|60|transitive,primitive|"
                            "(1,2,3,4,5);(1,6)(2,5)|8\n# comment\n")
    (e,) = entries
    assert e.degree == 6 and e.expected_order == 60 and e.expected_s == 8
    assert e.group().order == 60


def test_parse_empty_stream():
    assert load_catalog(b"") == []


def test_duplicate_id_rejected():
    text = ("a|2|X|2|transitive|(1,2)\n"
            "a|2|Y|2|transitive|(1,2)\n")
    with pytest.raises(CatalogError, match="duplicate id"):
        parse_catalog(text)


def test_malformed_record_reports_line():
    with pytest.raises(CatalogError, match="line 2"):
        parse_catalog("# header\nbad|record\n")


def test_generator_out_of_range_rejected():
    with pytest.raises(CatalogError, match="bad generator"):
        parse_catalog("a|3|X|3|transitive|(1,4)\n")


def test_unknown_tag_rejected():
    with pytest.raises(CatalogError, match="unknown tag"):
        parse_catalog("a|2|X|2|shiny|(1,2)\n")


# ---------------------------------------------------------------------------
# verification gate

def test_all_shipped_entries_verify():
    reports = [verify_entry(e) for e in load_default()]
    bad = [r for r in reports if not r.ok]
    assert not bad, [(r.entry_id, r.failures()) for r in bad]


def test_manifest_complete():
    assert check_manifest() == []


def test_corrupted_generator_fails_order_check():
    (e,) = parse_catalog("bad|6|PSL(2,5)-ish|60|transitive,primitive|"
                         "(1,2,3,4,5);(1,6)|8\n")
    rep = verify_entry(e)
    assert not rep.ok
    assert any(name == "order" and not passed
               for name, passed, _ in rep.checks)


def test_wrong_tag_fails():
    (e,) = parse_catalog("bad|4|C4|4|transitive,primitive|(1,2,3,4)\n")
    rep = verify_entry(e)
    assert any(name == "primitive-tag" and not passed
               for name, passed, _ in rep.checks)


def test_named_spot_entries():
    agl18 = by_id("8P1")
    rep = verify_entry(agl18)
    assert rep.ok and agl18.expected_order == 56 and agl18.expected_s == 10
    pgl29 = by_id("10P4")
    assert pgl29.expected_order == 720 and pgl29.expected_s == 14


def test_primitive_entries_are_transitive():
    for e in load_default():
        if "primitive" in e.tags:
            assert "transitive" in e.tags


# ---------------------------------------------------------------------------
# builtins

def test_builtin_cyclic():
    C4 = builtin("cyclic", 4)
    assert C4.order == 4 and count_set_orbits(C4) == 6


def test_builtin_dihedral():
    D8 = builtin("dihedral", 4)
    assert D8.order == 8 and count_set_orbits(D8) == 6
    with pytest.raises(ValueError):
        builtin("dihedral", 2)


def test_builtin_symmetric_and_alternating():
    for n in (1, 2, 3, 5, 8):
        assert builtin("symmetric", n).order == math.factorial(n)
    for n in (3, 4, 6, 8):
        G = builtin("alternating", n)
        assert G.order == math.factorial(n) // 2
    assert count_set_orbits(builtin("alternating", 6)) == 7
    assert builtin("alternating", 2).order == 1


def test_builtin_rejects_unknown():
    with pytest.raises(ValueError):
        builtin("sporadic", 5)


# ---------------------------------------------------------------------------
# candidate filtering

def test_degree8_primitive_with_divisor():
    got = {e.id for e in candidates(8, "primitive", divisibility=(3, 56))}
    assert {"8P1", "8P2", "8P3", "8P4", "8P5"} <= got
    # every remaining degree-8 primitive entry is A_8 or S_8, then 56 | order
    assert got == {"8P1", "8P2", "8P3", "8P4", "8P5", "8X1", "8X2"}


def test_degree9_primitive_with_divisor_36():
    got = {e.name for e in candidates(9, "primitive", divisibility=(2, 36))}
    assert {"ASL(2,3)", "AGL(2,3)"} <= got


def test_transitive_filter_semantics():
    six = candidates(6, "transitive")
    assert {e.id for e in six} == {"6P1", "6X1", "6X2", "6X3"}
    allsix = candidates(6, "all")
    assert len(allsix) == len(six)  # no intransitive degree-6 entries shipped


def test_divisibility_pair_validated():
    with pytest.raises(ValueError):
        candidates(8, "primitive", divisibility=(3, 57))


def test_transitive_degree8_complete():
    assert sum(1 for e in load_default()
               if e.degree == 8 and "transitive" in e.tags) == TRANSITIVE_8_COUNT


def test_tags_match_recomputation_spotwise():
    for ident in ("12P2", "10P6", "9S499", "8S294"):
        e = by_id(ident)
        G = e.group()
        assert is_transitive(G) == ("transitive" in e.tags)
        assert is_primitive(G) == ("primitive" in e.tags)
