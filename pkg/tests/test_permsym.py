from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfsim.errors import InputError
from selfsim.permsym import (
    OrbitPartition,
    PermGroup,
    centralizer_sym,
    is_rigid,
    is_transitive,
    orbits,
    permutation_type,
    rigid_group,
    symmetric_group,
    trivial_group,
)
from selfsim.treecore import Permutation


def grp(m, *cycles):
    return PermGroup(m, tuple(Permutation.parse(c, m) for c in cycles))


def test_orbit_types():
    assert orbits(grp(4, "(1 2)(3 4)")).orbit_type == (2, 2)
    assert orbits(trivial_group(4)).orbit_type == (1, 1, 1, 1)
    assert orbits(grp(4, "(1 2 3)")).orbit_type == (3, 1)


def test_partition_validation():
    with pytest.raises(InputError):
        OrbitPartition(4, ((1, 2), (2, 3, 4)))
    part = OrbitPartition.parse("3 4 | 1 2", 4)
    assert part.orbits == ((1, 2), (3, 4))


def test_permutation_type_examples():
    P = grp(4, "(1 2)(3 4)")
    f1, f2 = permutation_type(P, orbits(P))
    assert f1.same_elements(grp(4, "(1 2)")) and f2.same_elements(grp(4, "(3 4)"))
    T = grp(3, "(1 2 3)")
    (only,) = permutation_type(T, orbits(T))
    assert only.same_elements(T)
    Q = grp(4, "(1 2)")
    a, b, c = permutation_type(Q, orbits(Q))
    assert a.same_elements(Q) and b.order() == 1 and c.order() == 1


def test_rigid_group_examples():
    assert rigid_group(OrbitPartition.parse("1 2 | 3 4", 4)).same_elements(grp(4, "(1 3)(2 4)"))
    assert rigid_group(OrbitPartition.parse("1 2 3 | 4", 4)).order() == 1
    assert rigid_group(OrbitPartition.parse("1 2 | 3 | 4", 4)).same_elements(grp(4, "(3 4)"))


def test_rigid_members_are_rigid():
    part = OrbitPartition.parse("1 2 | 3 4 | 5 6 | 7", 7)
    S = rigid_group(part)
    assert S.order() == 6
    assert all(is_rigid(x, part) for x in S.elements())
    # rigid group meets the orbit-preserving subgroup only in the identity
    assert [x for x in S.elements() if part.preserved_by(x)] == [Permutation.identity(7)]
    assert not is_rigid(Permutation.parse("(1 4)(2 3)", 4), OrbitPartition.parse("1 2 | 3 4", 4))


def test_centralizer_sym_examples():
    assert centralizer_sym(grp(4, "(1 2)(3 4)")).order() == 8
    assert centralizer_sym(grp(4, "(1 2 3)")).same_elements(grp(4, "(1 2 3)"))
    assert centralizer_sym(trivial_group(5)).same_elements(symmetric_group(5))


@st.composite
def abelian_groups(draw):
    """Cyclic groups, and products of commuting cycles on disjoint supports."""
    m = draw(st.integers(1, 7))
    perm = draw(st.permutations(range(m)))
    gens = [Permutation(perm)]
    if draw(st.booleans()):
        gens.append(Permutation(perm) ** draw(st.integers(2, 5)))
    return PermGroup(m, tuple(gens))


@settings(max_examples=40, deadline=None)
@given(abelian_groups())
def test_structured_centralizer_matches_brute_force(Q):
    brute = {g for g in map(Permutation, permutations(range(Q.m)))
             if all(g * q == q * g for q in Q.generators)}
    assert set(centralizer_sym(Q).elements()) == brute
    assert set(centralizer_sym(Q, brute=True).elements()) == brute


@settings(max_examples=40, deadline=None)
@given(abelian_groups())
def test_permutation_type_factors_are_transitive(P):
    part = orbits(P)
    for block, Pi in zip(part.orbits, permutation_type(P, part)):
        assert is_transitive(Pi, block)
