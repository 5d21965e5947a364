"""Centralizers of self-similar cyclic groups A = <a>, a = (a^{i_1}, ..., a^{i_m}) sigma.

``Stab_C(1)`` splits over the orbits of sigma: on an orbit with letters
y_1 -> y_2 -> ... (following sigma from its least letter) an element is
``(c, c^{a^{s_2}}, c^{a^{s_3}}, ...)`` with ``s_t`` the exponent sum
``i_{y_1} + ... + i_{y_{t-1}}`` and ``c`` in ``C(a^j)``, j the full orbit sum.
Rigid activities are lifted by solving the commutation system along the
sigma-cycles, with a conjugator search for each orbit base.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..diagmonoid import b_group
from ..errors import InputError
from ..permsym import activity_group, orbits, rigid_group
from ..treecore import (
    Automorphism,
    Permutation,
    Portrait,
    PowerAutomaton,
    compose,
    conjugate,
    equal,
    equal_at_depth,
    identity,
    inverse,
    portrait,
    power,
    wreath,
)
from ..treecore.portrait import tree_conj, tree_identity, tree_inv, tree_mul, tree_pow
from .solver import count_pairs, find_conjugator
from .truncated import as_tree


def cyclic_exponents(a, bound=16, depth=8):
    """Exponents i_y with a_y = a^{i_y}; raises InputError if some section is not a power of a.

    Power machines carry their exponents.  For finite-state input the match is
    exact (bisimulation); otherwise it is checked at ``depth`` and the least
    |i| wins.
    """
    if isinstance(a.automaton, PowerAutomaton):
        A = a.automaton
        return tuple(A.exponent(y, a.state) for y in range(a.m))
    candidates = sorted(range(-bound, bound + 1), key=lambda k: (abs(k), -k))
    powers = {k: power(a, k) for k in candidates}
    out = []
    for y, sec in enumerate(a.sections()):
        for k in candidates:
            p = powers[k]
            ok = equal(sec, p) if (sec.is_finite and p.is_finite) else equal_at_depth(sec, p, depth)
            if ok:
                out.append(k)
                break
        else:
            raise InputError(
                f"section of {a.name} at letter {y + 1} is not a power a^k with |k| <= {bound}; "
                "<a> is not self-similar within the search bound"
            )
    return tuple(out)


def cycle_order(perm, block):
    """Letters of ``block`` in the order y, (y)sigma, ... starting at the least letter."""
    p = perm.images if isinstance(perm, Permutation) else perm
    start = min(block)
    order = [start]
    while p[order[-1]] != start:
        order.append(p[order[-1]])
    if sorted(order) != sorted(block):
        raise InputError("sigma is not a single cycle on this orbit; <a> is not cyclic on it")
    return order


@dataclass(frozen=True)
class OrbitComponent:
    """One factor C_i of Stab_C(1): (c, c^{a^{s_2}}, ...) with c in C(a^j)."""

    orbit: int
    letters: tuple  # 0-based, in cycle order
    shifts: tuple  # exponent s_t conjugating c at letters[t]
    j: int

    def __str__(self):
        if len(self.letters) == 1:
            return f"C_{self.orbit} = C(a^{self.j}) at letter {self.letters[0] + 1}"
        entries = ", ".join("c" if s == 0 else f"c^(a^{s})" for s in self.shifts)
        order = " ".join(str(y + 1) for y in self.letters)
        return f"C_{self.orbit} = {{({entries}) : c in C(a^{self.j})}} on letters {order}"

    def instantiate(self, a_tree, c, m, depth):
        """Sections (depth - 1 trees) for each letter from a choice of c."""
        out = {}
        for y, s in zip(self.letters, self.shifts):
            g = tree_pow(a_tree, s, m, depth - 1)
            out[y] = tree_conj(c, g)
        return out


@dataclass
class RigidLift:
    xi: Permutation
    depth: int
    lift: Portrait = None
    how: str = ""

    @property
    def found(self):
        return self.lift is not None


@dataclass
class CentralizerDescription:
    a: Automorphism
    partition: object
    exponents: tuple
    stab1_components: list
    b_part: list
    s_candidates: list
    rigid_part: list = field(default_factory=list)

    def lines(self):
        out = [f"orbits: {self.partition} (type {self.partition.orbit_type})"]
        out.append("exponents: " + " ".join(str(i) for i in self.exponents))
        out.append("Stab_C(1) = " + " x ".join(f"C_{c.orbit}" for c in self.stab1_components))
        out.extend("  " + str(c) for c in self.stab1_components)
        out.append("B(A) generators:")
        out.extend(f"  {g.name}: {portrait(g, 2)}" for g in self.b_part)
        if not self.s_candidates:
            out.append("S(P) trivial: no rigid candidates, R(A) = 1")
        for r in self.rigid_part:
            if r.found:
                out.append(f"rigid {r.xi.cycle_str()}: lift {r.lift} ({r.how}, depth {r.depth})")
            else:
                out.append(f"rigid {r.xi.cycle_str()}: no lift at depth {r.depth} ({r.how})")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _rooted(perm, m, depth):
    if depth == 0:
        return ()
    return (tuple(perm), (tree_identity(m, depth - 1),) * m)


def rigid_lift(a, xi, partition, depth):
    """A lift r = (r_1, ..., r_m) xi commuting with a modulo Stab(depth), or a failed RigidLift."""
    m = a.m
    xi = xi if isinstance(xi, Permutation) else Permutation(xi)
    t = as_tree(a, m, depth)
    rooted = _rooted(xi.images, m, depth)
    if tree_mul(rooted, t) == tree_mul(t, rooted):
        return RigidLift(xi, depth, Portrait(m, depth, rooted), "identity sections")
    sigma = t[0]
    secs = t[1]
    kids = [None] * m
    base_val = {}
    how = "conjugator search"
    for block in partition.blocks:
        order = cycle_order(sigma, block)
        b = order[0]
        target = xi.images[b]
        tb = partition.block_of(target)
        if target == b:
            rb = tree_identity(m, depth - 1)
        else:
            back = partition.block_of(b)
            if tb in base_val and xi.images[target] == b:
                # order-2 swap of two orbits: take r at the partner base to be the inverse
                rb = tree_inv(base_val[tb])
                how = "conjugator search, partner base inverted"
            else:
                loop = tree_pow(t, len(order), m, depth)[1]
                rb = find_conjugator(loop[b], loop[target], m, depth - 1)
                if rb is None:
                    return RigidLift(xi, depth, None, f"a^{len(order)} sections at {b + 1} and {target + 1} not conjugate")
            base_val[back] = rb
        kids[b] = rb
        # r_{(y)sigma} = a_y^{-1} r_y a_{(y)xi}
        for y in order[:-1]:
            kids[sigma[y]] = tree_mul(tree_mul(tree_inv(secs[y]), kids[y]), secs[xi.images[y]])
    r = (tuple(xi.images), tuple(kids))
    if tree_mul(r, t) != tree_mul(t, r):
        return RigidLift(xi, depth, None, "chain does not close")
    return RigidLift(xi, depth, Portrait(m, depth, r), how)


def cyclic_centralizer(a, partition=None, depth=3):
    """Step-1 parameterization of Stab_C(1), B(A) generators and rigid lifts at ``depth``."""
    exps = cyclic_exponents(a)
    partition = partition or orbits(activity_group([a]))
    sigma = a.perm
    comps = []
    for k, block in enumerate(partition.blocks, 1):
        order = cycle_order(sigma, block)
        shifts = [0]
        for y in order[:-1]:
            shifts.append(shifts[-1] + exps[y])
        comps.append(OrbitComponent(k, tuple(order), tuple(shifts), sum(exps[y] for y in order)))
    S = rigid_group(partition)
    cands = [x for x in S.elements() if not x.is_identity()]
    desc = CentralizerDescription(a, partition, exps, comps, b_group([a], partition), cands)
    desc.rigid_part = [rigid_lift(a, xi, partition, depth) for xi in cands]
    return desc


def stab1_count_check(a, desc, depth):
    """|Stab_C(1)| at ``depth`` from the solver versus the product of |C(a^j)| at depth - 1."""
    m = a.m
    t = as_tree(a, m, depth)
    direct = count_pairs([(t, t)], m, depth, roots={tuple(range(m))})
    below = portrait(a, depth - 1).tree
    product = 1
    for c in desc.stab1_components:
        aj = tree_pow(below, c.j, m, depth - 1)
        product *= count_pairs([(aj, aj)], m, depth - 1)
    return direct, product


def normal_form_first_term(a, partition=None):
    """(g, b) with b = a^g exactly, b_(i) = (e, ..., e, c_i) on each orbit in cycle order.

    g is (a_{y_1}, e, a_{y_2}^{-1}, (a_{y_2} a_{y_3})^{-1}, ...) on each orbit listed
    from its least letter along sigma; on a one-letter orbit g is trivial.
    """
    partition = partition or orbits(activity_group([a]))
    m = a.m
    secs = a.sections()
    sigma = a.perm
    e = identity(m)
    g_secs = [e] * m
    for block in partition.blocks:
        order = cycle_order(sigma, block)
        if len(order) == 1:
            continue
        g_secs[order[0]] = secs[order[0]]
        acc = e
        for t in range(1, len(order)):
            if t >= 2:
                acc = compose(acc, secs[order[t - 1]])
            g_secs[order[t]] = inverse(acc) if t >= 2 else e
    g = wreath(tuple(range(m)), g_secs)
    return g, conjugate(a, g)


def _cycle_products(x, partition):
    """c_i = x_{y_2} ... x_{y_n} x_{y_1} for each orbit."""
    secs = x.sections()
    out = []
    for block in partition.blocks:
        order = cycle_order(x.perm, block)
        c = identity(x.m)
        for y in order[1:] + order[:1]:
            c = compose(c, secs[y])
        out.append((order, c))
    return out


def _normal_form_trees(x, depth):
    m = x.m
    if depth == 0:
        return (), ()
    part = orbits(activity_group([x]))
    g, _ = normal_form_first_term(x, part)
    h_kids = [tree_identity(m, depth - 1)] * m
    b_kids = [tree_identity(m, depth - 1)] * m
    for order, c in _cycle_products(x, part):
        H, B = _normal_form_trees(c, depth - 1)
        for y in order:
            h_kids[y] = H
        b_kids[order[-1]] = B
    h = (tuple(range(m)), tuple(h_kids))
    G = tree_mul(portrait(g, depth).tree, h)
    return G, (x.perm, tuple(b_kids))


@dataclass
class NormalForm:
    g: Automorphism  # first term of the conjugator
    b: Automorphism  # a^g
    conjugator: Portrait  # the iterated product, truncated
    normal: Portrait  # a conjugated by it: normal form at every level
    first_term_ok: bool
    verified: bool


def normal_form_conjugator(a, partition=None, depth=4):
    partition = partition or orbits(activity_group([a]))
    g, b = normal_form_first_term(a, partition)
    secs = b.sections()
    ok = True
    for block in partition.blocks:
        order = cycle_order(a.perm, block)
        for y in order[:-1]:
            ok &= equal_at_depth(secs[y], identity(a.m), depth)
    G, B = _normal_form_trees(a, depth)
    verified = tree_conj(portrait(a, depth).tree, G) == B
    return NormalForm(g, b, Portrait(a.m, depth, G), Portrait(a.m, depth, B), bool(ok), verified)
