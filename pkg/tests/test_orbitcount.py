from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from setorbits.catalog import builtin
from setorbits.orbitcount import (
    OrbitProfile,
    count_set_orbits,
    dump_orbits,
    enumerate_set_orbits,
    is_set_transitive,
    is_t_set_transitive,
    orbit_profile,
    profile_from_enumeration,
)
from setorbits.perm import (
    GroupTooLargeError,
    Permutation,
    build_group,
    elements,
    parse_permutation,
    transitivity_degree,
)


def brute_profile(G):
    """Oracle: orbits of frozensets under explicit full group multiplication,
    independent of both the Burnside path and the bitmask enumerator."""
    n = G.degree
    elems = [p.images for p in elements(G)]
    left = {frozenset(c) for k in range(n + 1)
            for c in combinations(range(n), k)}
    by_size = [0] * (n + 1)
    while left:
        seed = next(iter(left))
        orbit = {frozenset(g[x] for x in seed) for g in elems}
        by_size[len(seed)] += 1
        left -= orbit
    return tuple(by_size)


def gset(*texts, degree):
    return build_group([parse_permutation(t, degree) for t in texts],
                       degree=degree)


C4 = gset("(1,2,3,4)", degree=4)


# ---------------------------------------------------------------------------
# counts

def test_trivial_group_on_two_points():
    assert count_set_orbits(build_group([], degree=2)) == 4


def test_c4_count_and_profile():
    assert count_set_orbits(C4) == 6
    prof = orbit_profile(C4)
    assert prof.by_size == brute_profile(C4) == (1, 1, 2, 1, 1)
    assert prof.total == 6


def test_m12_count():
    m12 = gset("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
               "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", degree=12)
    assert count_set_orbits(m12) == 14


@pytest.mark.parametrize("n", [2, 3, 4, 6, 9, 20])
def test_symmetric_shortcut(n):
    assert count_set_orbits(builtin("symmetric", n)) == n + 1


@pytest.mark.parametrize("n", [3, 4, 5, 13])
def test_alternating_shortcut(n):
    assert count_set_orbits(builtin("alternating", n)) == n + 1


def test_a2_takes_generic_path():
    # the alternating group on 2 points is trivial: s = 4, not n + 1
    assert count_set_orbits(builtin("alternating", 2)) == 4


def test_s3_profile_all_ones():
    assert orbit_profile(builtin("symmetric", 3)).by_size == (1, 1, 1, 1)


def test_c7_c3_total():
    # (2^7 + 6*2 + 14*2^3) / 21 = 12
    F21 = gset("(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)", degree=7)
    assert F21.order == 21
    assert count_set_orbits(F21) == 12
    assert brute_profile(F21) == orbit_profile(F21).by_size


def test_cap_exceeded_without_shortcut():
    m12 = gset("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
               "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", degree=12)
    with pytest.raises(GroupTooLargeError):
        count_set_orbits(m12, cap=1000)


def test_fixed_point_reduction_matches_oracle():
    # A_4 plus one fixed point: every profile entry convolves with (1, 1)
    G = gset("(1,2,3)", "(2,3,4)", degree=5)
    assert orbit_profile(G).by_size == brute_profile(G)
    assert count_set_orbits(G) == 2 * count_set_orbits(builtin("alternating", 4))


# ---------------------------------------------------------------------------
# enumeration

def test_trivial_enumeration():
    orbs = enumerate_set_orbits(build_group([], degree=2))
    assert orbs == [[0b00], [0b01], [0b10], [0b11]]


def test_c4_two_element_orbits():
    orbs = enumerate_set_orbits(C4)
    two = [o for o in orbs if bin(o[0]).count("1") == 2]
    assert two == [[0b0011, 0b0110, 0b1001, 0b1100], [0b0101, 0b1010]]


def test_psl25_orbit_count():
    psl = gset("(1,2,3,4,5)", "(1,6)(2,5)", degree=6)
    assert len(enumerate_set_orbits(psl)) == 8
    assert count_set_orbits(psl) == 8


def test_orbit_members_share_popcount():
    G = gset("(1,2)(3,4)", "(1,3,5)", degree=6)
    for orb in enumerate_set_orbits(G):
        assert len({bin(m).count("1") for m in orb}) == 1


def test_enumeration_degree_cap():
    with pytest.raises(GroupTooLargeError):
        enumerate_set_orbits(builtin("cyclic", 23))


def test_dump_format():
    lines = dump_orbits(C4)
    assert lines[0] == "{}"
    # within an orbit, subsets appear in ascending mask order
    assert "{1,2} {2,3} {1,4} {3,4}" in lines
    assert "{1,3} {2,4}" in lines


# ---------------------------------------------------------------------------
# predicates

def test_zero_set_transitive_always():
    assert is_t_set_transitive(C4, 0)
    assert is_t_set_transitive(build_group([], degree=3), 0)


def test_c4_not_2_set_transitive():
    assert not is_t_set_transitive(C4, 2)


def test_s6_is_3_set_transitive():
    assert is_t_set_transitive(builtin("symmetric", 6), 3)
    assert is_set_transitive(builtin("symmetric", 6))


def test_t_out_of_range():
    with pytest.raises(ValueError):
        is_t_set_transitive(C4, 5)


# ---------------------------------------------------------------------------
# invariants (property tests)

small_groups = st.lists(
    st.permutations(range(6)).map(Permutation), min_size=1, max_size=2).map(
        lambda gens: build_group(gens, degree=6))


@given(small_groups)
@settings(max_examples=40, deadline=None)
def test_profile_invariants(G):
    prof = orbit_profile(G)
    assert prof.by_size[0] == prof.by_size[-1] == 1
    assert all(v >= 1 for v in prof.by_size)
    assert prof.is_symmetric()
    assert prof.is_monotone_to_middle()
    assert prof.total == sum(prof.by_size)
    assert prof.total >= G.degree + 1
    assert prof.total * G.order >= 2 ** G.degree


@given(small_groups)
@settings(max_examples=25, deadline=None)
def test_burnside_equals_enumeration(G):
    prof = orbit_profile(G)
    assert prof == profile_from_enumeration(G)
    assert prof.by_size == brute_profile(G)


@given(st.lists(st.permutations(range(6)).map(Permutation), min_size=2,
                max_size=2))
@settings(max_examples=25, deadline=None)
def test_subgroup_refinement(gens):
    G = build_group(gens, degree=6)
    H = build_group(gens[:1], degree=6)
    pg, ph = orbit_profile(G), orbit_profile(H)
    assert all(h >= g for h, g in zip(ph.by_size, pg.by_size))


@given(small_groups)
@settings(max_examples=25, deadline=None)
def test_transitivity_bridge(G):
    k = transitivity_degree(G)
    prof = orbit_profile(G)
    for u in range(min(k, G.degree) + 1):
        assert prof.by_size[u] == 1


def test_profile_validation():
    with pytest.raises(ValueError):
        OrbitProfile(2, (1, 1), 2)
    with pytest.raises(ValueError):
        OrbitProfile(2, (1, 1, 1), 4)
