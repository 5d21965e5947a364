"""How the truncated centralizer of a Delta-closure settles as the lookahead grows.

Prints the order of the projected centralizer for lookahead e = 0, 1, ...
and compares the settled group with the group generated by Delta(B(A)).
"""

import argparse

from selfsim import catalog as cat
from selfsim.centralizer import layer_closed_centralizer, verify_theorem_A
from selfsim.permsym import activity_group, orbits

CASES = {
    "rooted": ("rooted", (1, 2, 3)),
    "adding": ("adding", (1, 2, 3, 4)),
    "double-adding": ("double-adding", (1, 2)),
    "multiplicity": ("multiplicity:m=2;s=2", (1, 2)),
    "t4-211": ("t4-cyclic:type=2,1,1;exps=1,0,2,2", (1, 2)),
}


def run(names):
    for key in names:
        spec, depths = CASES[key]
        gens = cat.catalog(spec).generators
        part = orbits(activity_group(gens))
        for k in depths:
            C, e, hist = layer_closed_centralizer(gens, part, k)
            verdict = "PASS" if verify_theorem_A(gens, depth=k).passed else "FAIL"
            print(f"{spec:36} k={k} orders by lookahead {hist} settled at e={e}, |C| = {C.order()}, theorem A {verdict}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("cases", nargs="*", help=f"any of {', '.join(CASES)} (default: all)")
    names = p.parse_args().cases or list(CASES)
    unknown = [n for n in names if n not in CASES]
    if unknown:
        p.error(f"unknown cases {unknown}")
    run(names)
