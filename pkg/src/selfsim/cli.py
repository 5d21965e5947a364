"""Command-line interface.

Exit codes: 0 all checks passed, 1 some check failed, 2 input error, 3 resource or guard error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog as cat
from . import gdata as gd
from .centralizer import (
    centralizer_brute,
    centralizer_levelwise,
    conjugator_unit_power,
    verify_fix,
    verify_centralizer_structure,
    verify_theorem_A,
    verify_theorem_B,
)
from .centralizer.truncated import small_generating_set
from .diagmonoid import delta_closure, factor
from .dot import export_dot
from .errors import InputError, ResourceError
from .permsym import activity_group, orbits, permutation_type, rigid_group
from .report import Report
from .treecore import (
    act,
    compose,
    format_automaton,
    inverse,
    parse_automaton,
    portrait,
    section,
    state_list,
)
from .treecore.portrait import tree_str


def load_automata(specs):
    """Each spec is a path to an automaton file or a catalog spec; returns all generators."""
    out = []
    for spec in specs:
        if os.path.isfile(spec):
            with open(spec, encoding="utf-8") as fh:
                out.append(parse_automaton(fh.read()))
        else:
            out.extend(cat.catalog(spec).generators)
    if not out:
        raise InputError("no automorphism given")
    return out


def load_one(args):
    """The automorphism selected by ``--aut`` and the 1-based ``--gen`` index."""
    gens = load_automata([args.aut])
    if not 1 <= args.gen <= len(gens):
        raise InputError(f"--gen {args.gen} outside 1..{len(gens)}")
    return gens[args.gen - 1]


def load_gdata(spec):
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            return gd.parse_gdata(fh.read())
    name, params = cat.parse_spec(spec)
    if name == "adding":
        return gd.adding_data(params.get("m", 2))
    if name == "double-adding":
        return gd.double_adding_data()
    if name == "theorem-c":
        F = gd.theorem_c_family(params.get("m", 2), params.get("variant", "infinite-rank"))
        return gd.family_data(F, params.get("n", 6))
    raise InputError(f"{spec!r} is neither a file nor a built-in G-data (adding, double-adding, theorem-c)")


def _show(alpha, depth, out):
    if alpha.is_finite:
        out.write(format_automaton(alpha))
    else:
        out.write(f"portrait at depth {depth}: {portrait(alpha, depth)}\n")


def _tuple_arg(text):
    return tuple(int(x) for x in text.replace(",", " ").split())


# ---------------------------------------------------------------- handlers


def cmd_act(args, out):
    a = load_one(args)
    out.write(" ".join(map(str, act(a, args.word))) + "\n")
    return True


def cmd_mul(args, out):
    gens = load_automata(args.aut)
    prod = gens[0]
    for g in gens[1:]:
        prod = compose(prod, g)
    _show(prod, args.depth, out)
    return True


def cmd_inv(args, out):
    a = load_one(args)
    _show(inverse(a), args.depth, out)
    return True


def cmd_section(args, out):
    a = load_one(args)
    _show(section(a, args.word), args.depth, out)
    return True


def cmd_states(args, out):
    a = load_one(args)
    sts = state_list(a)
    out.write(f"{len(sts)} states\n")
    for q in sts:
        out.write(f"{q.name}: {portrait(q, 1)}\n")
    return True


def cmd_orbits(args, out):
    gens = load_automata(args.aut)
    P = activity_group(gens)
    part = orbits(P)
    out.write(f"orbits {part}\norbit-type {part.orbit_type}\n")
    for i, Pi in enumerate(permutation_type(P, part), 1):
        out.write(f"P_({i}) = <{', '.join(g.cycle_str() for g in Pi.generators) or 'e'}>\n")
    S = rigid_group(part)
    out.write(f"rigid group of order {S.order()}\n")
    return True


def cmd_factor(args, out):
    a = load_one(args)
    part = orbits(activity_group([a]))
    for f in factor(a, part):
        out.write(f"{f.name}: {portrait(f, args.depth)}\n")
    return True


def cmd_delta_close(args, out):
    gens = load_automata(args.aut)
    closure = delta_closure(gens, None, args.len)
    out.write(f"{len(closure)} generators up to word length {args.len}\n")
    for g in closure:
        out.write(f"{g.name}: {portrait(g, args.depth)}\n")
    return True


def cmd_centralizer(args, out):
    gens = load_automata(args.aut)
    m = gens[0].m
    X = delta_closure(gens, None, args.delta_len) if args.delta_len else gens
    C = centralizer_levelwise(X, m, args.depth)
    out.write(f"centralizer of {len(X)} elements modulo Stab({args.depth}): order {C.order()}\n")
    if C.elements is not None and C.order() <= 4096:
        for g in small_generating_set(C.elements, m, args.depth):
            out.write(f"  generator {tree_str(g)}\n")
    ok = True
    if args.brute:
        B = centralizer_brute(X, m, args.depth)
        rep = Report("brute-force oracle")
        ok = rep.check("level-wise solver equals brute force", B.elements == C.elements,
                       f"|brute| = {B.order()}, |solver| = {C.order()}")
        out.write(str(rep) + "\n")
    return ok


def cmd_conjugate(args, out):
    a = load_one(args)
    g = conjugator_unit_power(a, args.power, args.depth)
    if g is None:
        out.write(f"a^{args.power} is not conjugate to a modulo Stab({args.depth})\n")
    else:
        out.write(f"conjugator modulo Stab({args.depth}): {tree_str(g)}\n")
    return True


def cmd_verify(args, out):
    if args.what == "t4":
        if args.type is None or args.exps is None:
            raise InputError("verify t4 needs --type and --exps")
        rep = cat.t4_analysis(args.type, args.exps, args.depth)
    elif args.what == "multiplicity":
        rep = cat.multiplicity_check(args.m, args.s, args.depth)
    elif args.what == "theorem-c":
        F = gd.theorem_c_family(args.m, "infinite-rank")
        rep = Report(f"family checks, m = {args.m}")
        rep.extend(gd.delta_invariance_check(F, 8))
        rep.extend(gd.commutation_check(F, 6, 8))
        rep.extend(gd.independence_check(F, 3, 10))
    else:
        gens = load_automata(args.aut or [])
        if args.what == "theorem-a":
            rep = verify_theorem_A(gens, depth=args.depth)
        elif args.what == "theorem-b":
            rep = verify_theorem_B(gens, depth=args.depth)
        elif args.what in ("prop-4-2", "structure"):
            rep = verify_centralizer_structure(gens, depth=args.depth)
        else:  # fix
            rep = verify_fix(gens[0], args.letters or [1], args.power, args.depth)
    out.write(str(rep) + "\n")
    return rep.passed


def cmd_gdata(args, out):
    D = load_gdata(args.file)
    if args.action == "check":
        rep = gd.check(D, depth=args.depth)
        out.write(str(rep) + "\n")
        return rep.passed
    if args.action == "core":
        out.write(str(gd.f_core(D)) + "\n")
        return True
    for i, g in enumerate(gd.induced_representation(D), 1):
        out.write(f"phi(e_{i}) at depth {args.depth}: {portrait(g, args.depth)}\n")
    return True


def cmd_catalog(args, out):
    if args.action == "list":
        for name, (_, doc) in cat.CATALOG.items():
            out.write(f"{name}: {doc}\n")
        return True
    if not args.name:
        raise InputError("catalog show needs an entry name")
    entry = cat.catalog(args.name)
    out.write("\n".join(entry.describe()) + "\n")
    rep = cat.self_check(entry, args.depth)
    out.write(str(rep) + "\n")
    return rep.passed


def cmd_export_dot(args, out):
    gens = load_automata(args.aut)
    out.write(export_dot(gens, merge=not args.no_merge))
    return True


# ---------------------------------------------------------------- parser


def build_parser():
    p = argparse.ArgumentParser(prog="selfsim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, aut="one"):
        sp = sub.add_parser(name, help=help_text)
        if aut == "one":
            sp.add_argument("--aut", required=True, help="automaton file or catalog spec")
            sp.add_argument("--gen", type=int, default=1, help="which generator of a multi-generator entry")
        elif aut == "many":
            sp.add_argument("--aut", required=True, action="append", help="automaton file or catalog spec (repeatable)")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("act", cmd_act, "image of a vertex word")
    sp.add_argument("--word", required=True)
    sp = add("mul", cmd_mul, "product of automorphisms, left to right", "many")
    sp.add_argument("--depth", type=int, default=3)
    sp = add("inv", cmd_inv, "inverse")
    sp.add_argument("--depth", type=int, default=3)
    sp = add("section", cmd_section, "section at a vertex")
    sp.add_argument("--word", required=True)
    sp.add_argument("--depth", type=int, default=3)
    add("states", cmd_states, "the set of states")
    add("orbits", cmd_orbits, "orbits, orbit-type and permutation-type", "many")
    sp = add("factor", cmd_factor, "per-orbit factors a_[i]")
    sp.add_argument("--depth", type=int, default=2)
    sp = add("delta-close", cmd_delta_close, "Delta-closure generators up to a word length", "many")
    sp.add_argument("--len", type=int, default=1)
    sp.add_argument("--depth", type=int, default=2)
    sp = add("centralizer", cmd_centralizer, "truncated centralizer", "many")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--delta-len", type=int, default=0)
    sp.add_argument("--brute", action="store_true", help="cross-check against the brute-force oracle")
    sp = add("conjugate", cmd_conjugate, "conjugator from a^xi to a")
    sp.add_argument("--power", type=int, required=True)
    sp.add_argument("--depth", type=int, required=True)

    sp = add("verify", cmd_verify, "verification reports", aut="none")
    sp.add_argument("what", choices=["theorem-a", "theorem-b", "prop-4-2", "structure", "t4", "fix", "multiplicity", "theorem-c"])
    sp.add_argument("--aut", action="append")
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--type", type=_tuple_arg)
    sp.add_argument("--exps", type=_tuple_arg)
    sp.add_argument("--letters", type=int, nargs="+")
    sp.add_argument("--power", type=int, default=2)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--s", type=int, default=2)

    sp = add("gdata", cmd_gdata, "G-data checks", aut="none")
    sp.add_argument("action", choices=["check", "core", "represent"])
    sp.add_argument("file", help="G-data file or built-in: adding[:m=M], double-adding, theorem-c[:m=M;n=R;variant=V]")
    sp.add_argument("--depth", type=int, default=2)

    sp = add("catalog", cmd_catalog, "catalog of example machines", aut="none")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--depth", type=int, default=4)

    sp = add("export-dot", cmd_export_dot, "Graphviz DOT state diagram", "many")
    sp.add_argument("--no-merge", action="store_true", help="one edge per (state, letter)")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        ok = args.fn(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
