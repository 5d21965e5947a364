"""Case census of the T_4 cyclic groups over a grid of exponent vectors.

For every exponent vector in [-B, B]^4 and each orbit-type this runs the
case analysis and tallies which branch applies and whether all checks passed.
"""

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from selfsim import catalog as cat


@dataclass
class Config:
    bound: int = 2
    depth: int = 3
    types: tuple = ((2, 2), (2, 1, 1), (3, 1))


def run(cfg):
    failures = []
    for otype in cfg.types:
        tally = Counter()
        rng = range(-cfg.bound, cfg.bound + 1)
        for exps in itertools.product(rng, repeat=4):
            rep = cat.t4_analysis(otype, exps, cfg.depth)
            tally[(cat.t4_case(otype, exps), rep.passed)] += 1
            if not rep.passed:
                failures.append((otype, exps))
        cells = ", ".join(f"case {c or '-'} {'pass' if ok else 'FAIL'}: {n}" for (c, ok), n in sorted(tally.items()))
        print(f"{otype}: {cells}")
    for otype, exps in failures[:10]:
        print(f"failed: {otype} {exps}")
    return not failures


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--bound", type=int, default=Config.bound)
    p.add_argument("--depth", type=int, default=Config.depth)
    a = p.parse_args()
    raise SystemExit(0 if run(Config(a.bound, a.depth)) else 1)
