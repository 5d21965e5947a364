import random

import pytest

from selfsim import catalog as cat
from selfsim.centralizer import centralizer_levelwise, cyclic_centralizer
from selfsim.centralizer.truncated import tree_commutes
from selfsim.errors import InputError
from selfsim.treecore import equal_at_depth, identity, portrait, wreath


def test_adding_entry():
    e = cat.catalog("adding", m=2)
    (a,) = e.generators
    assert a.perm == (1, 0) and a.child(0).is_identity() and a.child(1) == a
    assert e.orbit_type == (2,) and cat.self_check(e).passed


def test_double_adding_entry():
    e = cat.catalog("double-adding")
    (a,) = e.generators
    assert a.perm == (1, 0, 3, 2)
    assert [s.is_identity() for s in a.sections()] == [True, False, True, False]
    assert e.orbit_type == (2, 2)


def test_t4_three_one_entry():
    e = cat.catalog("t4-cyclic", type=(3, 1), exps=(1, 0, 0, 1))
    (a,) = e.generators
    assert a.perm == (1, 2, 0, 3) and e.orbit_type == (3, 1)
    e4 = identity(4)
    assert all(equal_at_depth(s, t, 5) for s, t in zip(a.sections(), [a, e4, e4, a]))
    assert cat.self_check(e).passed


@pytest.mark.parametrize("spec", ["adding:m=3", "adding-left", "rooted:m=4;perm=(1 2)(3 4)",
                                  "multiplicity:m=2;s=3", "cyclic:perm=(1 2 3);exps=1,-1,2",
                                  "t4-cyclic:type=2,1,1;exps=1,0,2,2", "theorem-c:n=5",
                                  "theorem-c:n=3;variant=finite-extension"])
def test_entries_pass_self_check(spec):
    assert cat.self_check(cat.catalog(spec)).passed


def test_bad_catalog_input():
    for spec in ("nosuch", "adding:m=x", "adding:m=1", "t4-cyclic:type=4;exps=1,1,1,1",
                 "t4-cyclic:type=2,2;exps=1,1", "adding:q=3", "adding:m"):
        with pytest.raises(InputError):
            cat.catalog(spec)


@pytest.mark.parametrize("m,s", [(2, 1), (2, 2), (2, 3), (3, 2), (4, 2)])
def test_multiplicity_identities(m, s):
    assert cat.multiplicity_check(m, s).passed


@pytest.mark.parametrize("exps,case", [((1, -1, 1, -1), "i"), ((0, 1, 0, 2), "iii"),
                                       ((0, 1, 0, 1), "ii"), ((1, 2, 3, 0), "ii")])
def test_t4_22_examples(exps, case):
    assert cat.t4_case((2, 2), exps) == case
    rep = cat.t4_analysis((2, 2), exps)
    assert rep.passed and f"case ({case})" in str(rep)


def test_t4_22_case_i_rigid_is_rooted():
    a = cat.t4_cyclic((2, 2), (1, -1, 1, -1)).generators[0]
    r = wreath((2, 3, 0, 1), [identity(4)] * 4)
    assert tree_commutes(portrait(r, 3).tree, portrait(a, 3).tree)


@pytest.mark.parametrize("exps", [(1, 0, 2, 2), (1, 0, 1, 3), (1, 0, 1, 2), (2, 1, 3, 3), (1, 1, 0, 2)])
def test_t4_211(exps):
    rep = cat.t4_analysis((2, 1, 1), exps)
    assert rep.passed
    if exps[2] == exps[3]:
        assert "rooted r = (3 4)" in str(rep)


def test_t4_31():
    assert cat.t4_analysis((3, 1), (1, 0, 0, 1)).passed
    assert cat.t4_analysis((3, 1), (2, -1, 0, 3)).passed


@pytest.mark.parametrize("otype", [(2, 2), (2, 1, 1), (3, 1)])
def test_t4_random_parameterization_agrees_with_solver(otype):
    """The orbit-chain description of Stab_C(1) matches the level-wise solver count."""
    rng = random.Random(7)
    for _ in range(20):
        exps = cat.random_exponents(rng, bound=3)
        rep = cat.t4_analysis(otype, exps)
        assert rep.passed, str(rep)


def test_component_chain_commutes(double_adding):
    """Taking c = a in every orbit component gives an element of Stab_C(1)."""
    desc = cyclic_centralizer(double_adding, depth=3)
    t = portrait(double_adding, 3).tree
    below = portrait(double_adding, 2).tree
    kids = {}
    for comp in desc.stab1_components:
        kids.update(comp.instantiate(below, below, 4, 3))
    x = ((0, 1, 2, 3), tuple(kids[y] for y in range(4)))
    assert tree_commutes(x, t)
    assert x in centralizer_levelwise([double_adding], 4, 3)
