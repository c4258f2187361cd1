"""Sweep the main congruence over constant and random sequences.

    python3 scripts/run_theorem_sweep.py --n-max 100 --random 50 --seed 2024
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from mary.mseq import MSequence
from mary.verify import theorem_sweep


@dataclass
class SweepConfig:
    r_max: int = 5
    n_max: int = 100
    constants: tuple = (2, 3, 4, 5, 6)
    random_count: int = 50
    seed: int = 2024
    low: int = 2
    high: int = 9
    length: int = 8


def sequences(cfg: SweepConfig):
    for m in cfg.constants:
        yield MSequence.constant(m)
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random_count):
        yield MSequence.finite([rng.randint(cfg.low, cfg.high) for _ in range(cfg.length)])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=SweepConfig.r_max)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    ap.add_argument("--random", type=int, default=SweepConfig.random_count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    cfg = SweepConfig(r_max=a.r_max, n_max=a.n_max, random_count=a.random, seed=a.seed)

    t0 = time.perf_counter()
    cells = failing = 0
    for M in sequences(cfg):
        rs = [r for r in range(1, cfg.r_max + 1) if M.has_entry(r)]
        for rep in theorem_sweep(M, rs, cfg.n_max):
            cells += 1
            if rep.violations:
                failing += 1
                print(f"FAIL {M} r={rep.params['r']} modulus={rep.modulus} n={rep.violations[:5]}")
    print(f"{cells} (sequence, r) cells, {failing} failing, {time.perf_counter() - t0:.1f} s")
    return 1 if failing else 0


if __name__ == "__main__":
    raise SystemExit(main())
