import pytest

from selfsim import catalog as cat
from selfsim.centralizer import (
    ambient_size,
    centralizer_brute,
    centralizer_levelwise,
    conjugator_unit_power,
    cyclic_centralizer,
    exponent_check,
    find_conjugator,
    generated,
    layer_closed_centralizer,
    normal_form_conjugator,
    normal_form_first_term,
    stab1_count_check,
    verify_fix,
    verify_centralizer_structure,
    verify_theorem_A,
    verify_theorem_B,
)
from selfsim.centralizer.truncated import as_tree, tree_commutes
from selfsim.diagmonoid import delta_closure
from selfsim.errors import SizeError
from selfsim.permsym import orbits, activity_group
from selfsim.treecore import (
    Permutation,
    conjugate,
    equal,
    equal_at_depth,
    identity,
    portrait,
    power,
)
from selfsim.treecore.portrait import tree_conj, tree_identity, tree_pow


def t_closure(L):
    return delta_closure(cat.rooted().generators, None, L)


def test_brute_examples(adding):
    assert centralizer_brute([adding], 2, 2).order() == 4
    for k in (1, 2, 3):
        assert centralizer_brute([identity(2)], 2, k).order() == ambient_size(2, k)
    assert centralizer_brute(t_closure(2), 2, 3).order() == 8


def test_brute_guard():
    with pytest.raises(SizeError):
        centralizer_brute([identity(4)], 4, 3)


def test_levelwise_examples(adding):
    C = centralizer_levelwise([adding], 2, 3)
    assert C.elements == generated([adding], 2, 3).elements and C.order() == 8
    assert centralizer_levelwise([identity(2)], 2, 3).order() == ambient_size(2, 3)
    assert centralizer_levelwise([identity(4)], 4, 2).order() == ambient_size(4, 2)


ORACLE_CASES = [
    ("adding", [cat.adding(2).generators[0]]),
    ("t closure", t_closure(2)),
    ("left adding", cat.adding_left().generators),
    ("rooted", cat.rooted().generators),
]


@pytest.mark.parametrize("name,X", ORACLE_CASES, ids=[c[0] for c in ORACLE_CASES])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_oracle_equivalence_binary(name, X, k):
    assert centralizer_levelwise(X, 2, k).elements == centralizer_brute(X, 2, k).elements


@pytest.mark.parametrize("entry", ["double-adding", "rooted:m=4;perm=(1 2)(3 4)", "multiplicity:m=2;s=2",
                                   "t4-cyclic:type=3,1;exps=1,0,0,1", "rooted:m=4;perm=(1 2 3 4)"])
@pytest.mark.parametrize("k", [1, 2])
def test_oracle_equivalence_quaternary(entry, k):
    X = cat.catalog(entry).generators
    assert centralizer_levelwise(X, 4, k).elements == centralizer_brute(X, 4, k).elements


def test_theorem_a_examples(adding, double_adding):
    t = cat.rooted().generators[0]
    assert verify_theorem_A([t], depth=3).passed
    assert verify_theorem_A([adding], depth=3).passed
    assert verify_theorem_A([double_adding], depth=2).passed


def test_theorem_b(adding, double_adding):
    assert verify_theorem_B([adding], depth=3).passed
    assert verify_theorem_B([double_adding], depth=2).passed


def test_layer_closure_history(double_adding):
    part = orbits(activity_group([double_adding]))
    C, e, history = layer_closed_centralizer([double_adding], part, 2)
    assert history == [256, 64, 64] and C.order() == 64 and e == 2


@pytest.mark.parametrize("k", [2, 3, 4])
def test_side_a_self_centralizing(adding, k):
    for gens in ([adding], [cat.rooted().generators[0]]):
        part = orbits(activity_group(gens))
        C, _, _ = layer_closed_centralizer(gens, part, k)
        assert centralizer_brute(sorted(C.elements), 2, k).elements == C.elements


def test_centralizer_structure(double_adding, adding):
    assert verify_centralizer_structure([double_adding], depth=2).passed
    assert verify_centralizer_structure([adding], depth=3).passed
    assert verify_centralizer_structure([cat.rooted("(1 2)(3 4)", 4).generators[0]], depth=2).passed


def test_exponent_examples():
    t = cat.rooted().generators[0]
    for d in range(1, 7):
        assert exponent_check([t], d) == (2, 2)
    assert exponent_check([identity(2)], 3) == (1, 1)
    t4 = cat.rooted("(1 2)(3 4)", 4).generators[0]
    for d in range(1, 5):
        assert exponent_check([t4], d) == (2, 2)


def test_fix(double_adding):
    assert verify_fix(double_adding, [1, 3], 2, 4).passed


# ---------------------------------------------------------------- cyclic groups


def test_double_adding_case_ii(double_adding):
    desc = cyclic_centralizer(double_adding, depth=3)
    assert [c.j for c in desc.stab1_components] == [1, 1]
    (lift,) = desc.rigid_part
    assert lift.xi == Permutation.parse("(1 3)(2 4)", 4) and lift.found
    assert tree_commutes(lift.lift.tree, as_tree(double_adding, 4, 3))


def test_case_iii_has_no_rigid_part():
    a = cat.t4_cyclic((2, 2), (0, 1, 0, 2)).generators[0]
    desc = cyclic_centralizer(a, depth=3)
    assert [c.j for c in desc.stab1_components] == [1, 2]
    assert not any(r.found for r in desc.rigid_part)


def test_three_one_rigid_trivial():
    a = cat.t4_cyclic((3, 1), (1, 0, 0, 1)).generators[0]
    desc = cyclic_centralizer(a, depth=3)
    assert desc.s_candidates == [] and desc.rigid_part == []


def test_stab1_count(double_adding):
    desc = cyclic_centralizer(double_adding, depth=3)
    direct, product = stab1_count_check(double_adding, desc, 3)
    assert direct == product


def test_normal_form_examples(double_adding):
    a = cat.adding_left().generators[0]
    g, b = normal_form_first_term(a)
    assert equal(g.child(0), a) and g.child(1).is_identity() and g.perm == (0, 1)
    assert b.perm == (1, 0) and b.child(0).is_identity() and equal_at_depth(b.child(1), a, 6)
    assert equal_at_depth(conjugate(a, g), b, 6)
    nf = normal_form_conjugator(double_adding, depth=4)
    assert nf.first_term_ok and nf.verified
    assert equal_at_depth(nf.g, identity(4), 6) and equal_at_depth(nf.b, double_adding, 6)
    assert nf.conjugator.is_identity()
    nf = normal_form_conjugator(a, depth=5)
    assert nf.first_term_ok and nf.verified


def test_conjugator_examples(adding):
    g = conjugator_unit_power(adding, 3, 5)
    assert g is not None
    a5 = portrait(adding, 5).tree
    assert tree_conj(tree_pow(a5, 3, 2, 5), g) == a5
    assert conjugator_unit_power(adding, 1, 4) == tree_identity(2, 4)


def test_conjugacy_tester_valuations():
    a = cat.t4_cyclic((2, 2), (0, 1, 0, 2)).generators[0]
    t = portrait(a, 3).tree
    assert find_conjugator(tree_pow(t, 1, 4, 3), tree_pow(t, 2, 4, 3), 4, 3) is None
    assert conjugator_unit_power(a, 2, 3) is None
