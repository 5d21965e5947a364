"""Time the level-wise centralizer solver against brute-force enumeration.

    python3 scripts/oracle_timing.py --max-depth 4
"""

import argparse
import time
from dataclasses import dataclass

from selfsim import catalog as cat
from selfsim.centralizer import ambient_size, centralizer_brute, centralizer_levelwise
from selfsim.diagmonoid import delta_closure


@dataclass
class Config:
    max_depth: int = 4
    repeats: int = 1


def cases():
    yield "adding", cat.adding(2).generators, 2
    yield "<(1 2)> closure L=2", delta_closure(cat.rooted().generators, None, 2), 2
    yield "(a, e)(1 2)", cat.adding_left().generators, 2
    yield "double adding", cat.double_adding().generators, 4
    yield "multiplicity m=2 s=2", cat.multiplicity(2, 2).generators, 4


def timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def run(cfg):
    print(f"{'case':24} {'k':>2} {'ambient':>12} {'|C|':>8} {'solver s':>9} {'brute s':>9} agree")
    for name, X, m in cases():
        for k in range(1, cfg.max_depth + 1):
            if ambient_size(m, k) > 10 ** 7:
                break
            lw, t_lw = timed(lambda: centralizer_levelwise(X, m, k), cfg.repeats)
            br, t_br = timed(lambda: centralizer_brute(X, m, k), cfg.repeats)
            print(f"{name:24} {k:>2} {ambient_size(m, k):>12} {br.order():>8} {t_lw:>9.4f} {t_br:>9.4f} "
                  f"{lw.elements == br.elements}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-depth", type=int, default=Config.max_depth)
    p.add_argument("--repeats", type=int, default=Config.repeats)
    a = p.parse_args()
    run(Config(a.max_depth, a.repeats))
