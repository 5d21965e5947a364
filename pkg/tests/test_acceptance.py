"""The ten acceptance criteria, one test each, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import random
import sys
import time

import pytest

from selfsim import catalog as cat
from selfsim.centralizer import (
    centralizer_brute,
    centralizer_levelwise,
    cyclic_centralizer,
    exponent_check,
    find_conjugator,
    layer_closed_centralizer,
    verify_fix,
    verify_theorem_A,
)
from selfsim.centralizer.truncated import tree_commutes
from selfsim.diagmonoid import conj_action, delta_closure, delta_vertex
from selfsim.gdata import (
    adding_data,
    commutation_check,
    delta_invariance_check,
    double_adding_data,
    independence_check,
    induced_representation,
    is_recurrent,
    is_strongly_recurrent,
    random_gdata,
    realize,
    theorem_c_family,
)
from selfsim.permsym import activity_group, orbits
from selfsim.treecore import (
    act,
    compose,
    equal,
    equal_at_depth,
    inverse,
    is_trivial_at_depth,
    portrait,
    power,
    section,
    state_list,
)
from selfsim.treecore.portrait import tree_pow


def emit(capsys, n, ok, detail, started):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} ({time.perf_counter() - started:.2f} s)"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


# ---------------------------------------------------------------- criteria


def criterion_1():
    """Level-wise solver and brute force agree as element sets at depths 2..4."""
    cases = {
        "adding machine": cat.adding(2).generators,
        "<(1 2)> closure L=2": delta_closure(cat.rooted().generators, None, 2),
        "(a, e)(1 2)": cat.adding_left().generators,
    }
    bad, orders = [], []
    for name, X in cases.items():
        for k in (2, 3, 4):
            lw = centralizer_levelwise(X, 2, k)
            br = centralizer_brute(X, 2, k)
            orders.append(br.order())
            if lw.elements != br.elements:
                bad.append(f"{name} at depth {k}")
    return not bad, f"9 comparisons, orders {orders}" + (f"; mismatches {bad}" if bad else "")


def criterion_2():
    """Theorem A reports at desk scale, with the expected side orders for <(1 2)>."""
    t = cat.rooted().generators[0]
    cases = [("<(1 2)>", [t], 3), ("adding", cat.adding(2).generators, 3),
             ("double adding", cat.double_adding().generators, 2)]
    out, ok = [], True
    for name, gens, k in cases:
        rep = verify_theorem_A(gens, depth=k)
        ok &= rep.passed
        out.append(f"{name}@{k} {'ok' if rep.passed else 'FAIL'}")
    C, _, _ = layer_closed_centralizer([t], orbits(activity_group([t])), 3)
    ok &= C.order() == 8
    return ok, "; ".join(out) + f"; |side a| for <(1 2)> = {C.order()}"


def criterion_3():
    """(2,2) trichotomy on 20 seeded random exponent vectors."""
    rng = random.Random(20)
    counts = {"i": 0, "ii": 0, "iii": 0}
    bad = []
    for _ in range(20):
        exps = cat.random_exponents(rng, bound=3)
        case = cat.t4_case((2, 2), exps)
        counts[case] += 1
        rep = cat.t4_analysis((2, 2), exps, depth=3)
        a = cat.t4_cyclic((2, 2), exps).generators[0]
        j1, j3 = exps[0] + exps[1], exps[2] + exps[3]
        ok = rep.passed
        if case == "i":
            ok &= is_trivial_at_depth(power(a, 2), 4)
            ok &= is_trivial_at_depth(power(a, j1), 4) and is_trivial_at_depth(power(a, j3), 4)
        elif case == "ii":
            lift = cyclic_centralizer(a, depth=3).rigid_part[0]
            t = portrait(a, 3).tree
            ok &= lift.found and tree_commutes(lift.lift.tree, t)
        else:
            lift = cyclic_centralizer(a, depth=3).rigid_part[0]
            t = portrait(a, 3).tree
            ok &= not lift.found
            ok &= find_conjugator(tree_pow(t, j1, 4, 3), tree_pow(t, j3, 4, 3), 4, 3) is None
        if not ok:
            bad.append(exps)
    return not bad, f"cases {counts}" + (f"; failing {bad}" if bad else "")


def criterion_4():
    D = double_adding_data()
    rec, strong = is_recurrent(D), is_strongly_recurrent(D)
    fix = verify_fix(cat.double_adding().generators[0], [1, 3], 2, 4)
    ok = rec is True and strong is False and fix.passed
    return ok, f"recurrent {rec}, strongly recurrent {strong}, Fix(1) = Fix(3) = <a^2> at depth 4: {fix.passed}"


def _words(rng, m, upto):
    return [rng.randint(1, m) for _ in range(rng.randint(0, upto))]


def criterion_5():
    """delta_u delta_v = delta_vu exactly, and the permutability relations at depth 6."""
    rng = random.Random(5)
    pools = {
        2: cat.adding(2).generators + cat.adding_left().generators + cat.rooted().generators,
        4: cat.double_adding().generators + cat.multiplicity(2, 2).generators + cat.rooted("(1 3)(2 4)", 4).generators,
    }

    def element(m):
        x = rng.choice(pools[m])
        for _ in range(rng.randint(0, 2)):
            g = rng.choice(pools[m])
            x = compose(x, inverse(g) if rng.random() < 0.5 else g)
        return x

    mono_bad = 0
    for _ in range(100):
        m = rng.choice((2, 4))
        a = element(m)
        u, v = _words(rng, m, 3), _words(rng, m, 3)
        if not equal(delta_vertex(delta_vertex(a, u), v), delta_vertex(a, v + u)):
            mono_bad += 1
    perm_bad = 0
    for _ in range(50):
        m = rng.choice((2, 4))
        a, r = element(m), element(m)
        w = _words(rng, m, 3)
        lhs = conj_action(delta_vertex(a, w), r)
        rhs = delta_vertex(conj_action(a, section(r, w)), act(r, w))
        if not equal_at_depth(lhs, rhs, 6):
            perm_bad += 1
    return mono_bad == 0 and perm_bad == 0, f"free-monoid law 100 pairs ({mono_bad} bad), permutability 50 triples ({perm_bad} bad)"


def criterion_6():
    (a,) = induced_representation(adding_data(2))
    (d,) = induced_representation(double_adding_data())
    ok1 = equal_at_depth(a, cat.adding(2).generators[0], 6)
    ok2 = equal_at_depth(d, cat.double_adding().generators[0], 6)
    return ok1 and ok2, f"adding machine {ok1}, double adding machine {ok2} (depth 6)"


def criterion_7():
    F = theorem_c_family(2)
    reps = [delta_invariance_check(F, 8), commutation_check(F, 6, 8), independence_check(F, 3, 10)]
    n_states = len(state_list(realize(F, 4)))
    ok = all(r.passed for r in reps) and n_states == 4
    return ok, f"Delta-invariance {reps[0].passed}, commutation {reps[1].passed}, independence {reps[2].passed}, |states(alpha_4)| = {n_states}"


def criterion_8():
    rep = cat.multiplicity_check(2, 2, depth=2)
    return rep.passed, f"{sum(1 for ln in str(rep).splitlines() if ln.startswith('PASS'))} checks passed" if rep.passed else str(rep)


def criterion_9():
    gens = {"<(1 2)>": cat.rooted().generators, "<(1 2)(3 4)>": cat.rooted("(1 2)(3 4)", 4).generators}
    bad = []
    for name, g in gens.items():
        for d in range(1, 6):
            ex = exponent_check(g, d)
            if ex != (2, 2):
                bad.append(f"{name} depth {d}: {ex}")
    return not bad, "exponent 2 = exponent of H at depths 1..5 for both groups" if not bad else "; ".join(bad)


def criterion_10():
    rng = random.Random(10)
    verdicts = {"True": 0, "False": 0, "None": 0}
    strong_true = 0
    for k in range(50):
        D = random_gdata(rng, rank=rng.randint(1, 4), s=2, epimorphic=bool(k % 2))
        verdicts[str(is_recurrent(D))] += 1
        if is_strongly_recurrent(D) is True:
            strong_true += 1
    return strong_true == 0, f"50 instances, recurrent verdicts {verdicts}, strongly recurrent true: {strong_true}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    started = time.perf_counter()
    ok, detail = CRITERIA[n - 1]()
    assert emit(capsys, n, ok, detail, started), detail


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        t0 = time.perf_counter()
        ok, detail = fn()
        results.append(emit(None, i, ok, detail, t0))
    sys.exit(0 if all(results) else 1)
