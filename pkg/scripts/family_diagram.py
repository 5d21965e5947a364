"""DOT diagram and state counts for the index-map family generators.

    python3 scripts/family_diagram.py --upto 8 > family.dot
"""

import argparse
import sys

from selfsim.dot import export_dot
from selfsim.gdata import realize, theorem_c_family
from selfsim.treecore import state_list


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--upto", type=int, default=6)
    p.add_argument("--variant", default="infinite-rank")
    a = p.parse_args(argv)
    F = theorem_c_family(a.m, a.variant)
    gens = [realize(F, i) for i in range(1, a.upto + 1)]
    for g in gens:
        print(f"# {g.name}: {len(state_list(g))} states", file=sys.stderr)
    sys.stdout.write(export_dot(gens, name=f"{F.symbol} family m={a.m}"))


if __name__ == "__main__":
    main()
