import math
from itertools import permutations

import pytest

from setorbits.orbitcount import count_set_orbits, profile_from_enumeration
from setorbits.perm import Permutation, build_group, parse_permutation
from setorbits.subgroups import (
    SubgroupCapError,
    all_subgroups,
    conjugate_in_sn,
    total_subgroup_count,
    transitive_classes,
)

# class and subgroup counts for S_5 / S_6 were computed once by the naive
# join-closure oracle (scripts/subgroup_oracle.py) and frozen here
FROZEN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 19, 6: 56}
FROZEN_TOTAL_COUNTS = {1: 1, 2: 2, 3: 6, 4: 30, 5: 156, 6: 1455}


def brute_subgroup_classes_s3():
    """True brute force for S_3: test every subset of the 6 elements."""
    elems = [tuple(p) for p in permutations(range(3))]
    subgroups = set()
    for mask in range(1, 1 << 6):
        subset = [e for i, e in enumerate(elems) if mask >> i & 1]
        sset = set(subset)
        if tuple(range(3)) not in sset:
            continue
        if all(tuple(a[b[i]] for i in range(3)) in sset
               for a in subset for b in subset):
            subgroups.add(frozenset(sset))

    def conj(H, s):
        sinv = tuple(sorted(range(3), key=s.__getitem__))
        return frozenset(tuple(s[h[sinv[i]]] for i in range(3)) for h in H)

    classes = {min(tuple(sorted(conj(H, s))) for s in elems)
               for H in subgroups}
    return len(subgroups), len(classes)


def test_s3_counts_against_true_brute_force():
    total, classes = brute_subgroup_classes_s3()
    assert total == 6 and classes == 4
    assert len(all_subgroups(3)) == 4
    assert total_subgroup_count(3) == 6


def test_s4_counts_against_pair_closure_oracle():
    """All subgroups of S_4 arise as closures of generator pairs."""
    elems = [tuple(p) for p in permutations(range(4))]
    found = set()
    for a in elems:
        for b in elems:
            G = build_group([Permutation(a), Permutation(b)], degree=4)
            found.add(frozenset(G.iter_element_tuples()))
    assert len(found) == 30
    assert total_subgroup_count(4) == 30
    assert len(all_subgroups(4)) == 11


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_frozen_class_and_total_counts(n):
    assert len(all_subgroups(n)) == FROZEN_CLASS_COUNTS[n]
    assert total_subgroup_count(n) == FROZEN_TOTAL_COUNTS[n]


def test_trivial_and_full_group_present():
    cs = all_subgroups(4)
    assert cs[0].order == 1 and cs[-1].order == 24


def test_orders_divide_factorial():
    for c in all_subgroups(6):
        assert math.factorial(6) % c.order == 0


def test_transitive_classes_s4():
    tc = transitive_classes(4)
    assert [c.order for c in tc] == [4, 4, 8, 12, 24]
    assert all(c.transitive for c in tc)


def test_transitive_classes_s3_and_s5():
    assert [c.order for c in transitive_classes(3)] == [3, 6]
    t5 = [c.order for c in transitive_classes(5)]
    assert t5 == [5, 10, 20, 60, 120]


def test_no_intransitive_class_leaks():
    from setorbits.perm import is_transitive
    for c in transitive_classes(5):
        assert is_transitive(c.representative)
    ids = {c.index for c in transitive_classes(5)}
    for c in all_subgroups(5):
        if c.index not in ids:
            assert not is_transitive(c.representative)


def test_cap_errors():
    with pytest.raises(SubgroupCapError):
        all_subgroups(9, cap=9)
    with pytest.raises(SubgroupCapError):
        all_subgroups(8)  # default cap is 7


def test_class_size_orbit_stabilizer():
    """class_size * |N_{S_n}(H)| = n!, normalizer by brute conjugation."""
    for n in (3, 4, 5):
        elems = [tuple(p) for p in permutations(range(n))]
        for c in all_subgroups(n):
            H = frozenset(c.representative.iter_element_tuples())
            norm = 0
            for s in elems:
                sinv = tuple(sorted(range(n), key=s.__getitem__))
                if all(tuple(s[h[sinv[i]]] for i in range(n)) in H for h in H):
                    norm += 1
            assert c.class_size * norm == math.factorial(n), (n, c.index)


def test_representatives_pairwise_nonconjugate():
    classes = all_subgroups(4)
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            if a.order != b.order:
                continue
            assert conjugate_in_sn(a.representative, b.representative) is None


def test_burnside_vs_enumeration_cross_validation():
    """Classes of S_n, n <= 6: the two counting routes agree everywhere."""
    for n in (4, 5, 6):
        total_b = total_e = 0
        for c in all_subgroups(n):
            total_b += count_set_orbits(c.representative)
            total_e += profile_from_enumeration(c.representative).total
        assert total_b == total_e


def test_deterministic_ordering():
    a = [(c.order, c.canonical_key) for c in all_subgroups(5)]
    assert a == sorted(a)


# ---------------------------------------------------------------------------
# conjugacy search

def test_conjugate_transposition_groups():
    A = build_group([parse_permutation("(1,2)", 4)])
    B = build_group([parse_permutation("(3,4)", 4)])
    g = conjugate_in_sn(A, B)
    assert g is not None
    assert {g(1), g(2)} == {3, 4}


def test_non_conjugate_same_order():
    A = build_group([parse_permutation("(1,2,3,4)", 4)])
    B = build_group([parse_permutation("(1,2)(3,4)", 4),
                     parse_permutation("(1,3)(2,4)", 4)])
    assert A.order == B.order == 4
    assert conjugate_in_sn(A, B) is None


def test_self_conjugacy_identity_acceptable():
    A = build_group([parse_permutation("(1,2,3)", 5)])
    g = conjugate_in_sn(A, A)
    assert g is not None
    gt = g.images
    ginv = tuple(sorted(range(5), key=gt.__getitem__))
    for a in A.generator_tuples():
        conj = tuple(gt[a[ginv[i]]] for i in range(5))
        assert Permutation(conj) in A
