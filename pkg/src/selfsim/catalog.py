"""Named example machines, their property self-checks, and the T_4 case analysis for cyclic groups."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .centralizer import (
    cyclic_centralizer,
    find_conjugator,
    generated,
    solver_for,
    stab1_count_check,
)
from .centralizer.truncated import tree_commutes
from .diagmonoid import factor, x_i
from .errors import InputError, SizeError
from .gdata import realize, theorem_c_family
from .permsym import activity_group, centralizer_sym, orbits, rigid_group
from .report import Report
from .treecore import (
    Permutation,
    equal,
    from_recursion,
    is_trivial_at_depth,
    portrait,
    power,
    power_recursion,
    state_list,
)
from .treecore.portrait import tree_identity, tree_inv, tree_mul, tree_pow

T4_PERMS = {(2, 2): "(1 2)(3 4)", (2, 1, 1): "(1 2)", (3, 1): "(1 2 3)"}


@dataclass
class CatalogEntry:
    name: str
    params: dict
    generators: list
    orbit_type: tuple
    self_similar: bool = True
    abelian: bool = True
    notes: list = field(default_factory=list)

    @property
    def m(self):
        return self.generators[0].m

    def describe(self):
        out = [f"{self.name} {_fmt_params(self.params)}".rstrip(),
               f"alphabet 1..{self.m}, orbit-type {self.orbit_type}"]
        for g in self.generators:
            out.append(f"  {g.name}: {portrait(g, 1)}" + ("" if g.is_finite else " (lazy)"))
        out.extend(self.notes)
        return out


def _fmt_params(params):
    return " ".join(f"{k}={v}" for k, v in params.items())


def _cycle_images(m, offset=0, length=None):
    length = length or m
    return {offset + y: offset + (y + 1) % length for y in range(length)}


# ---------------------------------------------------------------- constructors


def adding(m=2):
    """a = (e, ..., e, a)(1 2 ... m)."""
    if m < 2:
        raise InputError("adding machine needs m >= 2")
    perm = [_cycle_images(m)[y] for y in range(m)]
    a = from_recursion(m, {"a": (perm, ["e"] * (m - 1) + ["a"])}, "a")
    return CatalogEntry("adding", {"m": m}, [a], (m,))


def double_adding():
    a = from_recursion(4, {"a": ((1, 0, 3, 2), ["e", "a", "e", "a"])}, "a")
    return CatalogEntry("double-adding", {}, [a], (2, 2))


def adding_left():
    """a = (a, e)(1 2): the odometer carrying through the first letter."""
    a = from_recursion(2, {"a": ((1, 0), ["a", "e"])}, "a")
    return CatalogEntry("adding-left", {}, [a], (2,))


def rooted(perm="(1 2)", m=2):
    """t = (e, ..., e) perm, a finite group of rooted automorphisms."""
    p = Permutation.parse(perm, m)
    t = from_recursion(m, {"t": (p, ["e"] * m)}, "t")
    return CatalogEntry("rooted", {"perm": perm, "m": m}, [t], orbits(activity_group([t])).orbit_type)


def multiplicity(m=2, s=2):
    """a = (a_(1), ..., a_(s)) sigma with a_(i) = (e, ..., e, a) and sigma a product of s m-cycles."""
    if m < 2 or s < 1:
        raise InputError("multiplicity machine needs m >= 2 and s >= 1")
    deg = m * s
    perm = [0] * deg
    kids = ["e"] * deg
    for i in range(s):
        for y, z in _cycle_images(m, i * m).items():
            perm[y] = z
        kids[i * m + m - 1] = "a"
    a = from_recursion(deg, {"a": (perm, kids)}, "a")
    return CatalogEntry("multiplicity", {"m": m, "s": s}, [a], (m,) * s)


def cyclic(perm, exps, name="cyclic"):
    """a = (a^{i_1}, ..., a^{i_m}) sigma as a power machine.

    Every section is a power of a by construction, so <a> is self-similar for
    every integer exponent vector; non-integer exponents are rejected.
    """
    try:
        exps = tuple(int(i) for i in exps)
    except (TypeError, ValueError) as exc:
        raise InputError(f"exponents must be integers: {exps!r}") from exc
    a = power_recursion(perm, exps)
    otype = orbits(activity_group([a])).orbit_type
    return CatalogEntry(name, {"perm": str(perm), "exps": ",".join(map(str, exps))}, [a], otype)


def t4_cyclic(type=(2, 2), exps=(0, 1, 0, 1)):
    type = tuple(int(x) for x in type)
    if type not in T4_PERMS:
        raise InputError(f"orbit-type {type} not one of {', '.join(map(str, T4_PERMS))}")
    if len(exps) != 4:
        raise InputError("T_4 cyclic machines take 4 exponents")
    entry = cyclic(T4_PERMS[type], exps, "t4-cyclic")
    entry.params = {"type": ",".join(map(str, type)), "exps": entry.params["exps"]}
    return entry


def theorem_c(m=2, n=4, variant="infinite-rank"):
    F = theorem_c_family(m, variant)
    gens = [realize(F, i) for i in range(1, n + 1)]
    return CatalogEntry("theorem-c", {"m": m, "n": n, "variant": variant}, gens, (m, 1))


CATALOG = {
    "adding": (adding, "binary (or m-ary) adding machine (e, ..., e, a)(1 2 ... m)"),
    "adding-left": (adding_left, "a = (a, e)(1 2)"),
    "double-adding": (double_adding, "a = (e, a, e, a)(1 2)(3 4)"),
    "rooted": (rooted, "rooted automorphism t = (e, ..., e) perm"),
    "multiplicity": (multiplicity, "m-adding machine of multiplicity s"),
    "cyclic": (cyclic, "power machine (a^{i_1}, ..., a^{i_m}) perm"),
    "t4-cyclic": (t4_cyclic, "power machine on T_4 of orbit-type (2,2), (2,1,1) or (3,1)"),
    "theorem-c": (theorem_c, "generators 1..n of the free abelian index-map family"),
}

_INT_PARAMS = {"m", "s", "n"}
_TUPLE_PARAMS = {"type", "exps"}


def parse_spec(spec):
    """``name`` or ``name:key=value;key=value`` into (name, params)."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, (p.strip() for p in rest.split(";"))):
        key, eq, val = item.partition("=")
        if not eq:
            raise InputError(f"bad catalog parameter {item!r}; expected key=value")
        key = key.strip()
        val = val.strip()
        try:
            if key in _INT_PARAMS:
                val = int(val)
            elif key in _TUPLE_PARAMS:
                val = tuple(int(x) for x in val.replace(",", " ").split())
        except ValueError as exc:
            raise InputError(f"catalog parameter {key} needs integers, got {val!r}") from exc
        params[key] = val
    return name.strip(), params


def catalog(name, **params):
    if ":" in name and not params:
        name, params = parse_spec(name)
    if name not in CATALOG:
        raise InputError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}")
    try:
        return CATALOG[name][0](**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {name}: {exc}") from exc


# ---------------------------------------------------------------- self-check


def _word_portraits(gens, m, depth, length=6):
    """Depth-``depth`` portraits of all words of length <= ``length`` in the generators and inverses."""
    ts = [portrait(g, depth).tree for g in gens]
    ts += [tree_inv(t) for t in ts]
    layer = {tree_identity(m, depth)}
    seen = set(layer)
    for _ in range(length):
        layer = {tree_mul(x, t) for x in layer for t in ts} - seen
        seen |= layer
    return seen


def self_check(entry, depth=4):
    rep = Report(f"self-check of {entry.name} {_fmt_params(entry.params)}".rstrip())
    gens = entry.generators
    m = entry.m
    otype = orbits(activity_group(gens)).orbit_type
    rep.check("orbit-type", otype == entry.orbit_type, f"{otype}")
    if entry.abelian:
        ts = [portrait(g, depth).tree for g in gens]
        rep.check(f"generators commute at depth {depth}",
                  all(tree_commutes(x, y) for i, x in enumerate(ts) for y in ts[i + 1:]))
    if entry.self_similar:
        try:
            group = generated(gens, m, depth, limit=200_000).elements
            how = "truncated group"
        except SizeError:
            group = _word_portraits(gens, m, depth)
            how = "words of length <= 6"
        bad = []
        for g in gens:
            sts = state_list(g) if g.is_finite else list(g.sections())
            for q in sts:
                if portrait(q, depth).tree not in group:
                    bad.append(q.name)
        kind = "states" if all(g.is_finite for g in gens) else "first-level sections"
        rep.check(f"{kind} lie in the generated group at depth {depth} ({how})", not bad,
                  f"outside: {', '.join(bad)}" if bad else "")
    return rep


# ---------------------------------------------------------------- multiplicity machine


def multiplicity_check(m=2, s=2, depth=2):
    """(a_[i])^m = a^{x_i} exactly, and the rigid lifts realize Sym(s) on the orbit blocks."""
    entry = multiplicity(m, s)
    a = entry.generators[0]
    part = orbits(activity_group([a]))
    rep = Report(f"multiplicity machine m={m}, s={s}")
    fac = factor(a, part)
    for i in range(1, s + 1):
        rep.check(f"(a_[{i}])^{m} = a^x{i} (exact)", equal(power(fac[i - 1], m), x_i(a, part, i)))
    desc = cyclic_centralizer(a, part, depth)
    S = rigid_group(part)
    lifts = {r.xi: r for r in desc.rigid_part}
    missing = [x.cycle_str() for x in S.elements() if not x.is_identity() and not lifts[x].found]
    rep.check(f"every rigid permutation lifts into C(A) at depth {depth} (R(A) realizes Sym({s}))",
              not missing and S.order() == _factorial(s), f"|S| = {S.order()}" + (f", missing {missing}" if missing else ""))
    t = portrait(a, depth).tree
    ok = all(tree_commutes(r.lift.tree, t) for r in lifts.values() if r.found)
    rep.check(f"rigid lifts commute with a at depth {depth}", ok)
    # conjugating by a lift permutes the factors like its activity permutes the blocks
    ftrees = [portrait(f, depth).tree for f in fac]
    perm_ok = True
    for r in lifts.values():
        if not r.found:
            continue
        for i, block in enumerate(part.blocks):
            target = part.block_of(r.xi.images[block[0]])
            rt = r.lift.tree
            perm_ok &= tree_mul(tree_mul(tree_inv(rt), ftrees[i]), rt) == ftrees[target]
    rep.check("rigid lifts permute the factors a_[i] by conjugation", perm_ok)
    return rep


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------- T_4 case analysis


def _v2(j):
    """2-adic valuation, None standing for infinity (j = 0)."""
    if j == 0:
        return None
    k = 0
    while j % 2 == 0:
        j //= 2
        k += 1
    return k


def _component_samples(a, j, m, depth, limit=20_000, take=6):
    """A few elements of C(a^j) modulo Stab(depth): small powers of a plus solver solutions."""
    t = portrait(a, depth).tree
    aj = tree_pow(t, j, m, depth)
    out = {tree_pow(t, k, m, depth) for k in range(4)}
    solver = solver_for(m)
    pairs = solver.normalize([(aj, aj)], depth)
    if solver.count(pairs, depth) <= limit:
        sols = solver.enumerate(pairs, depth)
        out.update(sols[:: max(1, len(sols) // take)][:take])
    return sorted(out)


def _stab_instances(a, desc, depth):
    """Elements of Stab_C(1) built from the component parameterization, one component at a time."""
    m = a.m
    below = portrait(a, depth - 1).tree
    ident = tree_identity(m, depth - 1)
    out = []
    for comp in desc.stab1_components:
        for c in _component_samples(a, comp.j, m, depth - 1):
            kids = [ident] * m
            for y, sec in comp.instantiate(below, c, m, depth).items():
                kids[y] = sec
            out.append((tuple(range(m)), tuple(kids)))
    return out


def t4_case(orbit_type, exps):
    """Which branch of the case analysis applies, from the exponents alone."""
    i1, i2, i3, i4 = exps
    if orbit_type == (2, 2):
        j1, j3 = i1 + i2, i3 + i4
        if j1 % 2 == 0 and j3 % 2 == 0:
            return "i"
        if j1 % 2 and j3 % 2:
            return "ii"
        return "iii"
    if orbit_type == (2, 1, 1):
        return "i" if _v2(i3) == _v2(i4) else "ii"
    return "-"


def t4_analysis(orbit_type, exps, depth=3):
    """Symbolic description of C(<a>) on T_4 plus commutation checks at ``depth``."""
    orbit_type = tuple(orbit_type)
    entry = t4_cyclic(orbit_type, exps)
    a = entry.generators[0]
    m = 4
    exps = tuple(int(i) for i in exps)
    i1, i2, i3, i4 = exps
    rep = Report(f"T_4 cyclic group, orbit-type {orbit_type}, exponents {exps}, depth {depth}")
    desc = cyclic_centralizer(a, depth=depth)
    case = t4_case(orbit_type, exps)
    rep.info(f"case ({case})" if case != "-" else "single case: C_Sym(4)(P) = P")
    for line in desc.lines():
        rep.info(line)
    t = portrait(a, depth).tree

    rep.check(f"B(A) generators commute with a at depth {depth}",
              all(tree_commutes(portrait(g, depth).tree, t) for g in desc.b_part))
    inst = _stab_instances(a, desc, depth)
    rep.check(f"Stab_C(1) instances commute with a at depth {depth}",
              all(tree_commutes(x, t) for x in inst), f"{len(inst)} instances")
    direct, prod = stab1_count_check(a, desc, depth)
    rep.check("|Stab_C(1)| matches the product of the component centralizers", direct == prod,
              f"{direct} = {prod}" if direct == prod else f"{direct} != {prod}")
    for r in desc.rigid_part:
        if r.found:
            rep.check(f"rigid lift for {r.xi.cycle_str()} commutes with a at depth {depth}",
                      tree_commutes(r.lift.tree, t))

    if orbit_type == (2, 2):
        _case_22(rep, a, desc, exps, case, depth)
    elif orbit_type == (2, 1, 1):
        _case_211(rep, a, desc, exps, depth)
    else:
        P = activity_group([a])
        rep.check("C_Sym(4)(P) = P, so no rigid candidates and R(A) trivial",
                  centralizer_sym(P).same_elements(P) and not desc.s_candidates)
    return rep


def _case_22(rep, a, desc, exps, case, depth):
    i1, i2, i3, i4 = exps
    j1, j3 = i1 + i2, i3 + i4
    m = 4
    r = desc.rigid_part[0] if desc.rigid_part else None
    if case == "i":
        deep = max(depth, 4)
        rep.check(f"a^2 trivial at depth {deep}", is_trivial_at_depth(power(a, 2), deep))
        rep.check(f"a^{j1} and a^{j3} trivial at depth {deep} (j_1 = j_3 = 0 modulo the order of a)",
                  is_trivial_at_depth(power(a, j1), deep) and is_trivial_at_depth(power(a, j3), deep))
        below = portrait(a, depth - 1).tree
        ident = tree_identity(m, depth - 1)
        formula = ((2, 3, 0, 1), (ident, tree_pow(below, -i1 + i3, m, depth - 1),
                                  ident, tree_pow(below, i1 - i3, m, depth - 1)))
        rep.check(f"r = (e, a^{-i1 + i3}, e, a^{i1 - i3})(1 3)(2 4) commutes with a at depth {depth}",
                  tree_commutes(formula, portrait(a, depth).tree))
    elif case == "ii":
        rep.check(f"rigid r found at depth {depth}", r is not None and r.found, r.how if r else "")
        if r is not None and r.found:
            below = portrait(a, depth - 1).tree
            k = r.lift.tree[1]
            p = lambda n: tree_pow(below, n, m, depth - 1)  # noqa: E731
            shape = (k[2] == tree_inv(k[0])
                     and k[1] == tree_mul(tree_mul(p(-i1), k[0]), p(i3))
                     and k[3] == tree_mul(tree_mul(p(-i3), tree_inv(k[0])), p(i1)))
            rep.check("r = (g, a^-i1 g a^i3, g^-1, a^-i3 g^-1 a^i1)(1 3)(2 4)", shape)
            aj1 = tree_pow(below, j1, m, depth - 1)
            aj3 = tree_pow(below, j3, m, depth - 1)
            g = k[0]
            rep.check(f"(a^{j1})^g = a^{j3} at depth {depth - 1}", tree_mul(tree_mul(tree_inv(g), aj1), g) == aj3)
    else:
        rep.check(f"no rigid lift at depth {depth}: R(A) empty", r is None or not r.found)
        t = portrait(a, depth).tree
        found = find_conjugator(tree_pow(t, j1, m, depth), tree_pow(t, j3, m, depth), m, depth)
        rep.check(f"tester: a^{j1} and a^{j3} not conjugate at depth {depth}", found is None)


def _case_211(rep, a, desc, exps, depth):
    i1, i2, i3, i4 = exps
    m = 4
    r = desc.rigid_part[0] if desc.rigid_part else None
    k3, k4 = _v2(i3), _v2(i4)
    t = portrait(a, depth - 1).tree
    tester = find_conjugator(tree_pow(t, i3, m, depth - 1), tree_pow(t, i4, m, depth - 1), m, depth - 1)
    rep.info(f"2-adic valuations k_3 = {_inf(k3)}, k_4 = {_inf(k4)}; "
             f"tester at depth {depth - 1}: {'conjugate' if tester is not None else 'not conjugate'}")
    if (k3 == k4) != (tester is not None):
        rep.info("valuation rule and tester disagree: the rule assumes a of infinite order")
    rep.check("rigid r exists exactly when a^i3 and a^i4 are conjugate (tester)",
              (r is not None and r.found) == (tester is not None))
    if r is not None and r.found:
        k = r.lift.tree[1]
        ident = tree_identity(m, depth - 1)
        rep.check("r = (e, e, g, g^-1)(3 4)", k[0] == ident and k[1] == ident and k[3] == tree_inv(k[2]))
        if i3 == i4:
            rep.check("i_3 = i_4 gives the rooted r = (3 4)", r.lift.tree[1] == (ident,) * m)


def _inf(k):
    return "inf" if k is None else str(k)


def random_exponents(rng=None, bound=3, n=4):
    rng = rng or random.Random()
    return tuple(rng.randint(-bound, bound) for _ in range(n))
