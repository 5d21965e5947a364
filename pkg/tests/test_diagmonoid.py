import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfsim import catalog as cat
from selfsim.centralizer import generated
from selfsim.diagmonoid import (
    ConnectingSet,
    DeltaWord,
    apply_delta_word,
    b_group,
    conj_action,
    delta_closure,
    delta_set,
    delta_vertex,
    factor,
    mono_sum,
    product_of,
    x_i,
)
from selfsim.errors import InputError
from selfsim.permsym import OrbitPartition
from selfsim.treecore import (
    act,
    compose,
    equal,
    equal_at_depth,
    identity,
    inverse,
    is_trivial_at_depth,
    portrait,
    power,
    section,
    tree_identity,
    wreath,
)

BIN = OrbitPartition(2, ((1, 2),))
T4 = OrbitPartition(4, ((1, 2), (3, 4)))


def test_delta_vertex_and_set(adding, e2):
    d1 = delta_vertex(adding, "1")
    assert d1.perm == (0, 1) and equal(d1.child(0), adding) and equal(d1.child(1), e2)
    assert equal(delta_set(adding, ["1", "2"]), x_i(adding, BIN, 1))
    assert equal(delta_set(adding, []), e2)
    with pytest.raises(InputError):
        delta_set(adding, ["1", "1 2"])


def test_partial_diagonal_of_adding_machine(adding):
    assert equal(x_i(adding, BIN, 1), power(adding, 2))
    assert equal(apply_delta_word(adding, "x1 x1", BIN), power(adding, 4))
    with pytest.raises(InputError):
        x_i(adding, BIN, 2)


def test_delta_word_parse():
    assert DeltaWord.parse("x1 x2 x1").letters == (1, 2, 1)
    assert str(DeltaWord(())) == "1"
    with pytest.raises(InputError):
        DeltaWord.parse("y1")


def test_connecting_set():
    M = ConnectingSet.of(2, ["1", "2 1", "2 2"])
    assert M.covers(4)
    assert not ConnectingSet.of(2, ["1"]).covers(1)
    with pytest.raises(InputError):
        ConnectingSet.of(2, ["1", "1 2"])


def test_mono_sum_injective(adding):
    op = mono_sum(2, ["1", "2 2"])
    elems = [power(adding, k) for k in range(8)]
    assert op.injective_on(elems, 3)
    assert equal(op(adding), wreath((0, 1), [adding, delta_vertex(adding, "2")]))


def test_conj_action_identity(adding, e2):
    assert equal(conj_action(adding, e2), adding)


def test_permutability_example(adding):
    lhs = conj_action(delta_vertex(adding, "1"), adding)
    assert equal_at_depth(lhs, delta_vertex(adding, "2"), 5)


def test_partial_diagonal_permutability_on_multiplicity_machine():
    a = cat.multiplicity(2, 2).generators[0]
    for r in (wreath((2, 3, 0, 1), [identity(4)] * 4), wreath((2, 3, 0, 1), [a] * 4)):
        assert equal_at_depth(conj_action(x_i(a, T4, 1), r), x_i(a, T4, 2), 4)
        assert equal_at_depth(conj_action(x_i(a, T4, 2), r), x_i(a, T4, 1), 4)


def test_factor_examples(double_adding):
    f1, f2 = factor(double_adding, T4)
    e = identity(4)
    assert f1.perm == (1, 0, 2, 3) and [equal(s, t) for s, t in zip(f1.sections(), [e, double_adding, e, e])] == [True] * 4
    assert f2.perm == (0, 1, 3, 2) and [equal(s, t) for s, t in zip(f2.sections(), [e, e, e, double_adding])] == [True] * 4
    assert equal(compose(f1, f2), double_adding)
    assert equal(compose(f1, f2), compose(f2, f1))
    a = cat.adding(3).generators[0]
    (only,) = factor(a)
    assert equal(only, a)


def test_factor_three_one():
    a = cat.t4_cyclic((3, 1), (1, 0, 0, 1)).generators[0]
    _, f2 = factor(a)
    assert f2.perm == (0, 1, 2, 3)
    assert all(is_trivial_at_depth(s, 6) for s in f2.sections()[:3])
    assert equal_at_depth(f2.child(3), a, 6)


def test_delta_closure_examples(adding):
    t = cat.rooted().generators[0]
    cl = delta_closure([t], None, 2)
    assert len(cl) == 3
    assert generated(cl, 2, 3).order() == 8
    assert delta_closure([t], None, 0) == [t]
    for L in range(4):
        assert generated(delta_closure([adding], None, L), 2, 4).elements == generated([adding], 2, 4).elements


def test_x_i_rejects_foreign_partition(double_adding):
    with pytest.raises(InputError):
        delta_closure([double_adding], OrbitPartition(4, ((1, 3), (2, 4))), 1)


# ---------------------------------------------------------------- properties

words = st.lists(st.integers(1, 2), max_size=3)


@settings(max_examples=50, deadline=None)
@given(words, words)
def test_free_monoid_law(u, v):
    a = cat.adding(2).generators[0]
    assert equal(delta_vertex(delta_vertex(a, u), v), delta_vertex(a, v + u))


@settings(max_examples=40, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.lists(st.integers(1, 2), max_size=3))
def test_permutability_relations(i, j, w):
    base = cat.adding_left().generators[0]
    a = compose(power(base, i), cat.rooted().generators[0])
    r = power(cat.adding(2).generators[0], j)
    lhs = conj_action(delta_vertex(a, w), r)
    rhs = delta_vertex(conj_action(a, section(r, w)), act(r, w))
    assert equal_at_depth(lhs, rhs, 6)


def _tree_x(t, m, block, d):
    """x_i on a depth-d portrait tree: copy into the block, identity elsewhere."""
    e = tree_identity(m, d)
    return (tuple(range(m)), tuple(t if y in block else e for y in range(m)))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_stab_shift(double_adding, k):
    depth = 4
    for i, block in enumerate(T4.blocks, 1):
        shifted = generated([x_i(double_adding, T4, i)], 4, depth).elements
        lower = generated([double_adding], 4, depth - 1).elements
        stab_shifted = {t for t in shifted if portrait_stab(t, k)}
        stab_lower = {_tree_x(t, 4, block, depth - 1) for t in lower if portrait_stab(t, k - 1)}
        assert stab_shifted == stab_lower


def portrait_stab(t, k):
    """Tree t acts trivially on level k."""
    if k == 0 or t == ():
        return True
    perm, kids = t
    return perm == tuple(range(len(perm))) and all(portrait_stab(c, k - 1) for c in kids)


def test_b_of_diagonal_image_is_itself(double_adding):
    for word in ("x1", "x2", "x1 x2"):
        g = apply_delta_word(double_adding, word, T4)
        (only,) = b_group([g], T4)
        assert equal(only, g)


@pytest.mark.parametrize("entry", ["double-adding", "rooted:m=4;perm=(1 2)(3 4)", "multiplicity:m=2;s=2"])
def test_b_of_delta_closure(entry):
    gens = cat.catalog(entry).generators
    depth = 3
    K = delta_closure(gens, None, depth)
    lhs = generated(b_group(K), 4, depth)
    rhs = generated(b_group(gens) + K, 4, depth)
    assert lhs.elements == rhs.elements


def test_closure_images_lie_in_delta_closure(double_adding):
    depth = 3
    target = generated(delta_closure([double_adding], None, depth), 4, depth).elements
    for word in ("x1", "x2", "x1 x2", "x2 x2"):
        letters = DeltaWord.parse(word).letters
        for t in generated([double_adding], 4, depth - len(letters)).elements:
            img, d = t, depth - len(letters)
            for letter in letters:
                img = _tree_x(img, 4, T4.blocks[letter - 1], d)
                d += 1
            assert img in target


def test_product_of(adding):
    assert equal(product_of([adding, inverse(adding)], 2), identity(2))
