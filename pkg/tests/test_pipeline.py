import math

import pytest

from setorbits.pipeline import (
    ClassificationRow,
    DataGapError,
    RunReport,
    candidate_groups,
    classify,
    compare_to_golden,
    forced_transitive_size,
    load_golden,
    parse_golden,
    spot_check_golden,
)


# ---------------------------------------------------------------------------
# forced sizes: every divisor the reference classification uses

@pytest.mark.parametrize("n,r,t", [
    (6, 2, 2), (8, 2, 3), (12, 2, 5),
    (6, 3, 2), (7, 3, 2), (8, 3, 3), (9, 3, 3), (11, 3, 4), (12, 3, 5),
    (8, 4, 2), (10, 4, 3), (12, 4, 4),
    (9, 5, 2), (11, 5, 3), (10, 5, 3),
])
def test_forced_transitive_size_instantiations(n, r, t):
    assert forced_transitive_size(n, r) == t


def test_forced_size_sentinel():
    assert forced_transitive_size(4, 4) is None
    assert forced_transitive_size(3, 5) is None


def test_published_divisors():
    assert math.comb(6, 2) == 15 and math.comb(8, 3) == 56
    assert math.comb(12, 5) == 792 and math.comb(9, 3) == 84
    assert math.comb(11, 4) == 330 and math.comb(10, 3) == 120
    assert math.comb(12, 4) == 495 and math.comb(9, 2) == 36
    assert math.comb(11, 3) == 165 and math.comb(8, 2) == 28


# ---------------------------------------------------------------------------
# candidate regimes

def test_primitive_regime_degree8():
    cands = candidate_groups(8, 2)
    names = {c.name for c in cands}
    assert names == {"AGL(1,8)", "AGammaL(1,8)", "ASL(3,2)", "PSL(2,7)",
                     "PGL(2,7)"}


def test_transitive_regime_degree4():
    cands = candidate_groups(4, 2)
    assert sorted(c.group.order for c in cands) == [4, 4, 8]  # A4/S4 excluded


def test_all_subgroups_regime_degree4():
    cands = candidate_groups(4, 4)
    assert len(cands) == 9  # 11 classes minus A_4 and S_4
    orders = sorted(c.group.order for c in cands)
    assert orders == [1, 2, 2, 3, 4, 4, 4, 6, 8]


def test_degree2_keeps_trivial_group():
    cands = candidate_groups(2, 2)
    assert sorted(c.group.order for c in cands) == [1, 2]


def test_transitive_regime_degree8_uses_catalog():
    cands = candidate_groups(8, 6)
    assert len(cands) == 48  # 50 transitive classes minus A_8 and S_8
    assert all(c.group.degree == 8 for c in cands)


def test_degree9_transitive_regime_is_a_gap():
    with pytest.raises(DataGapError, match="S_9"):
        candidate_groups(9, 7)


# ---------------------------------------------------------------------------
# classification runs

@pytest.mark.parametrize("r,rows", [(2, 9), (3, 8), (4, 10), (5, 10)])
def test_classification_matches_golden(r, rows):
    report = classify(r)
    assert len(report.rows) == rows
    diff = compare_to_golden(report, load_golden(r))
    assert diff.empty, (diff.missing, diff.extra)


def test_classification_row_invariant():
    report = classify(2)
    for row in report.rows:
        assert row.s_value == row.degree + row.r


def test_emitted_rows_recomputed_by_enumeration():
    """Each emitted row's s-value re-derived on the independent 2^n route,
    and no emitted group contains A_n (checked by 3-cycle membership)."""
    from setorbits.orbitcount import profile_from_enumeration
    from setorbits.perm import Permutation
    for r in (2, 3):
        report = classify(r)
        for row in report.rows:
            matches = [c for c in candidate_groups(row.degree, r)
                       if c.label == row.group_label]
            assert len(matches) == 1
            G = matches[0].group
            prof = profile_from_enumeration(G)
            assert prof.total == row.s_value
            assert prof.is_symmetric() and prof.is_monotone_to_middle()
            if row.degree >= 3:
                n = row.degree
                three_cycles = [Permutation.parse(f"(1,2,{k})", n)
                                for k in range(3, n + 1)]
                assert not all(t in G for t in three_cycles)


def test_classification_deterministic():
    assert classify(3).to_tsv() == classify(3).to_tsv()


def test_survivor_sets_match_published_lists():
    assert classify(2).survivors() == [2, 4, 6, 8, 12]
    assert classify(3).survivors() == [3, 4, 5, 6, 7, 8, 9, 11, 12]
    assert classify(4).survivors() == [4, 6, 8, 10, 12]
    assert classify(5).survivors() == [3, 4, 5, 6, 7, 8, 9, 10, 11, 12]


def test_classify_r_out_of_range():
    with pytest.raises(ValueError):
        classify(1)
    with pytest.raises(ValueError):
        classify(12)


def test_classify_r6_runs_clean():
    report = classify(6)
    assert not report.gaps
    assert len(report.rows) == 5
    diff = compare_to_golden(report, load_golden(6))
    assert diff.empty


def test_classify_r7_with_gaps():
    # degree 9 transitive data is out of reach at the default cap
    with pytest.raises(DataGapError):
        classify(7)
    report = classify(7, strict=False)
    assert any("S_9" in g for g in report.gaps)
    # everything except the two degree-9 rows is still found
    assert len(report.rows) == len(load_golden(7)) - 2


# ---------------------------------------------------------------------------
# golden comparison

def test_golden_self_comparison_empty():
    report = classify(2)
    assert compare_to_golden(report, load_golden(2)).empty


def test_golden_negative_control():
    report = classify(2)
    golden = load_golden(2)[:-1]  # drop one row
    diff = compare_to_golden(report, golden)
    assert len(diff.extra) == 1 and not diff.missing


def test_golden_missing_detected():
    report = classify(2)
    golden = load_golden(2) + [parse_golden(
        "9\t9\t9X99\tfake\t999\t11\n")[0]]
    diff = compare_to_golden(report, golden)
    assert len(diff.missing) == 1


def test_ambiguous_signatures_flagged():
    report = classify(4)
    diff = compare_to_golden(report, load_golden(4))
    # two degree-6 order-36 rows share a signature
    assert any(d == 6 and o == 36 and m == 2 for d, o, s, m in diff.ambiguous)


def test_golden_tables_have_expected_row_counts():
    for r, n in [(2, 9), (3, 8), (4, 10), (5, 10), (6, 5), (7, 19), (8, 9),
                 (9, 10), (10, 14), (11, 28)]:
        assert len(load_golden(r)) == n


# ---------------------------------------------------------------------------
# spot checks

@pytest.mark.parametrize("r", [6, 7, 8, 9, 10, 11])
def test_spot_checks_fully_reproduce(r):
    rep = spot_check_golden(r)
    assert rep.ok
    assert not rep.out_of_cap
    assert len(rep.reproduced) == len(load_golden(r))


def test_spot_check_named_rows():
    rep7 = {row.label: row for row, _ in spot_check_golden(7).reproduced}
    assert rep7["12P1"].s_value == 19
    rep10 = {row.label: row for row, _ in spot_check_golden(10).reproduced}
    assert rep10["12T179"].s_value == 22
