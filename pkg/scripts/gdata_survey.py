"""Recurrence verdicts over random G-data.

Draws N random data over Z^n (n <= 4) with s orbits and tabulates the
F-core verdicts, recurrence and strong recurrence.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from selfsim.gdata import f_core, is_recurrent, is_strongly_recurrent, random_gdata


@dataclass
class Config:
    samples: int = 200
    orbits: int = 2
    seed: int = 0
    epimorphic_share: float = 0.5


def run(cfg):
    rng = random.Random(cfg.seed)
    core = Counter()
    rec = Counter()
    strong = Counter()
    for _ in range(cfg.samples):
        D = random_gdata(rng, rank=rng.randint(1, 4), s=cfg.orbits, epimorphic=rng.random() < cfg.epimorphic_share)
        core[f_core(D).verdict] += 1
        rec[str(is_recurrent(D))] += 1
        strong[str(is_strongly_recurrent(D))] += 1
    print(f"{cfg.samples} samples, s = {cfg.orbits}, seed {cfg.seed}")
    print(f"F-core verdicts: {dict(core)}")
    print(f"recurrent: {dict(rec)}")
    print(f"strongly recurrent: {dict(strong)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--orbits", type=int, default=Config.orbits)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.samples, a.orbits, a.seed))
