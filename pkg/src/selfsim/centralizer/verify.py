"""Truncated checks of the centralizer theorems for abelian self-similar groups.

Every statement is checked modulo Stab(k) only; reports carry the depth.
"""

from __future__ import annotations

from ..diagmonoid import b_group, delta_closure, factor
from ..errors import InputError
from ..permsym import (
    PermGroup,
    activity_group,
    centralizer_sym,
    is_rigid,
    orbits,
    permutation_type,
    projection,
)
from ..report import Report
from ..treecore import Permutation, portrait, power
from ..treecore.portrait import tree_identity, tree_is_identity, tree_mul
from .solver import centralizer_levelwise, centralizer_projected, count_pairs, solver_for
from .truncated import TruncatedGroup, generated, tree_commutes, trees_of


def _orbit_preserving(perm, partition):
    return partition.preserved_by(perm)


def _check_same_group(report, name, side_a, side_b):
    """side_b is enumerated; side_a may be given by order plus membership."""
    inside = all(g in side_a for g in side_b.generators)
    same_order = side_a.order() == side_b.order()
    detail = f"|side a| = {side_a.order()}, |side b| = {side_b.order()}"
    if side_a.elements is not None:
        return report.check(name, side_a.elements == side_b.elements, detail)
    return report.check(name, inside and same_order, detail + " (generators inside, orders equal)")


def _rigid_part_trivial(report, C, partition, depth):
    bad = [t for t in C.elements if depth > 0 and not _orbit_preserving(t[0], partition)]
    return report.check("R trivial (every element leaves each orbit invariant)", not bad,
                        f"{len(bad)} elements move an orbit")


def choose_h(gens, partition=None):
    """Lifts beta_ij in B(A) whose activities generate each P_(i): the finitely generated H."""
    gens = list(gens)
    partition = partition or orbits(activity_group(gens))
    P = activity_group(gens)
    chosen = []
    for i, (block, Pi) in enumerate(zip(partition.blocks, permutation_type(P, partition))):
        target = set(Pi.elements())
        span = PermGroup(partition.m, ())
        for g in gens:
            if set(span.elements()) == target:
                break
            f = factor(g, partition)[i]
            act = Permutation(f.perm)
            if act in set(span.elements()):
                continue
            span = PermGroup(partition.m, span.generators + (act,))
            chosen.append(f)
    return chosen


def layer_closed_centralizer(gens, partition, depth, max_lookahead=3):
    """Centralizer of Delta(A) modulo Stab(depth), keeping only elements that extend deeper.

    The plain truncated centralizer can contain elements with no commuting
    extension one level down.  Lookahead e projects the centralizer computed at
    depth + e (Delta-words up to that length) back to ``depth``; e grows until
    two consecutive projections agree.  Returns (group, e, orders seen).
    """
    m = gens[0].m
    history = []
    prev = None
    for e in range(max_lookahead + 1):
        K = delta_closure(gens, partition, depth + e)
        C = centralizer_projected(K, m, depth, e)
        history.append(C.order())
        if prev is not None and C.elements == prev.elements:
            return C, e, history
        prev = C
    return prev, max_lookahead, history


def _theorem_common(title, gens, partition, depth, hgens, max_lookahead=3):
    gens = list(gens)
    if not gens:
        raise InputError("empty generator list")
    m = gens[0].m
    partition = partition or orbits(activity_group(gens))
    report = Report(title)
    report.info(f"depth {depth}, orbits {partition} (type {partition.orbit_type})")
    C, e, history = layer_closed_centralizer(gens, partition, depth, max_lookahead)
    report.info("side a: centralizer of the Delta-closure, orders by lookahead " + " ".join(map(str, history)))
    report.check("side a stable under deeper lookahead", len(history) >= 2 and history[-1] == history[-2],
                 f"lookahead {e}")
    D = delta_closure(hgens, partition, depth)
    G = generated(D, m, depth)
    report.info(f"side b: generated by {len(D)} Delta-closure generators of {len(hgens)} elements, order {G.order()}")
    _check_same_group(report, "centralizer equals generated closure", C, G)
    _rigid_part_trivial(report, C, partition, depth)
    return report, C, G, partition, e


def verify_theorem_A(gens, partition=None, depth=3):
    """C(Delta(A)) = closure of Delta(B(A)), modulo Stab(depth)."""
    gens = list(gens)
    partition = partition or orbits(activity_group(gens))
    B = b_group(gens, partition)
    report, C, G, partition, e = _theorem_common(f"theorem A at depth {depth}", gens, partition, depth, B)
    m = gens[0].m
    if C.elements is not None:
        report.check("side a abelian", C.is_abelian())
        _stab_split(report, C, gens, partition, depth, e)
        if m == 2 and depth <= 4:
            CC = centralizer_levelwise(list(C.elements), m, depth)
            report.check("side a is self-centralizing in the truncated ambient", CC.elements == C.elements,
                         f"|C(C)| = {CC.order()}")
    return report


def verify_theorem_B(gens, partition=None, depth=3):
    """Same equality with a finitely generated H <= B(A) chosen by activities."""
    gens = list(gens)
    partition = partition or orbits(activity_group(gens))
    H = choose_h(gens, partition)
    report, *_ = _theorem_common(f"theorem B at depth {depth}", gens, partition, depth, H)
    report.info("H generators: " + ", ".join(f"{h.name} [{portrait(h, 1)}]" for h in H))
    return report


def _stab_split(report, C, gens, partition, depth, lookahead):
    """Stab_C(1) = C^{x_1} ... C^{x_s} at truncation: sections constant per orbit, lying in C one level down."""
    m = C.m
    if depth < 1:
        return
    ident = tuple(range(m))
    stab = [t for t in C.elements if t[0] == ident]
    lower = centralizer_projected(delta_closure(gens, partition, depth - 1 + lookahead), m, depth - 1, lookahead)
    const = all(len({t[1][y] for y in b}) == 1 for t in stab for b in partition.blocks)
    inside = all(t[1][b[0]] in lower for t in stab for b in partition.blocks)
    full = len(stab) == lower.order() ** partition.s
    report.check("Stab_C(1) = C^x1 ... C^xs one level down", const and inside and full,
                 f"|Stab_C(1)| = {len(stab)}, |C at depth {depth - 1}|^{partition.s} = {lower.order() ** partition.s}")


def exponent_check(gens, depth, partition=None):
    """Exponent of the truncated Delta(B(A)) closure next to the exponent of H."""
    gens = list(gens)
    m = gens[0].m
    partition = partition or orbits(activity_group(gens))
    B = b_group(gens, partition)
    closure = TruncatedGroup(m, depth, None, tuple(dict.fromkeys(trees_of(delta_closure(B, partition, depth), m, depth))))
    H = choose_h(gens, partition)
    h_group = generated(H, m, depth)
    return closure.exponent(), h_group.exponent()


def fix_check(a, letters, depth):
    """<a> modulo Stab(depth) and, per 1-based letter y, its stabilizer Fix_A(y)."""
    m = a.m
    A = generated([a], m, depth)
    out = {}
    for y in letters:
        fix = frozenset(t for t in A.elements if depth == 0 or t[0][y - 1] == y - 1)
        out[y] = fix
    return A, out


def verify_fix(a, letters, expected_power, depth):
    report = Report(f"Fix checks at depth {depth}")
    A, fixes = fix_check(a, letters, depth)
    target = generated([power(a, expected_power)], a.m, depth)
    report.info(f"|<a>| = {A.order()} modulo Stab({depth})")
    for y, fix in fixes.items():
        report.check(f"Fix_A({y}) = <a^{expected_power}>", fix == target.elements,
                     f"|Fix| = {len(fix)}, |<a^{expected_power}>| = {target.order()}")
    return report


def verify_centralizer_structure(gens, partition=None, depth=3):
    """Structure of C(A) for abelian self-similar A, checked modulo Stab(depth)."""
    gens = list(gens)
    m = gens[0].m
    partition = partition or orbits(activity_group(gens))
    report = Report(f"structure of C(A) at depth {depth}")
    P = activity_group(gens)
    A = generated(gens, m, depth)
    ident = tuple(range(m))
    stabA = [t for t in A.elements if t[0] == ident]
    report.check("(i) elements of Stab_A(1) have constant sections on each orbit",
                 all(len({t[1][y] for y in b}) == 1 for t in stabA for b in partition.blocks),
                 f"{len(stabA)} elements")
    gt = trees_of(gens, m, depth)
    C = centralizer_levelwise(gt, m, depth)
    B = b_group(gens, partition)
    bt = trees_of(B, m, depth)
    report.check("B(A) lies in C(A)", all(b in C for b in bt))
    csym = centralizer_sym(P)
    realized = []
    for pi in csym.elements():
        if count_pairs([(x, x) for x in gt], m, depth, roots={pi.images}) > 0:
            realized.append(pi)
    pb = PermGroup(m, tuple(Permutation(f.perm) for f in B))
    rigid = [x for x in realized if is_rigid(x, partition)]
    product = {p * r for p in pb.elements() for r in rigid}
    report.check("(ii) activities of C(A) = P(B(A)) times rigid activities S(A)", set(realized) == product,
                 f"{len(realized)} activities realized, S(A) = {{{', '.join(r.cycle_str() for r in rigid)}}}")
    stabC = None
    if C.elements is not None:
        stabC = [t for t in C.elements if t[0] == ident]
        report.check("(iv) B(A) centralizes Stab_C(1)",
                     all(tree_commutes(b, s) for b in bt for s in stabC), f"{len(stabC)} elements of Stab_C(1)")
    else:
        report.info(f"(iv) skipped: |C(A)| = {C.order()} not enumerated")
    K = trees_of(delta_closure(gens, partition, depth), m, depth)
    KB = trees_of(delta_closure(B, partition, depth), m, depth)
    report.check("(vi) Delta(A) abelian", all(tree_commutes(x, y) for x in K for y in K))
    report.check("(vi) Delta(B(A)) abelian", all(tree_commutes(x, y) for x in KB for y in KB))
    P_delta = PermGroup(m, tuple({Permutation(t[0]) for t in KB if depth > 0} - {Permutation.identity(m)}))
    same_type = [f.same_elements(g) for f, g in zip(permutation_type(P, partition), permutation_type(P_delta, partition))]
    report.check("(vi) Delta(B(A)) has the permutation-type of A", all(same_type) and orbits(P_delta) == partition)
    return report
