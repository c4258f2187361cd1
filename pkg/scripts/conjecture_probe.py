"""Compare both readings of the general conjecture over small sequences.

For each (sequence, r, eps, c) cell, count the n <= n_max where the residue
is nonzero under the aligned and the literal indexing.
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from mary.mseq import MSequence
from mary.verify import INDEXINGS, ConjectureParams, check_conjecture_general


@dataclass
class ProbeConfig:
    r_max: int = 3
    n_max: int = 30
    constants: tuple = (2, 3, 4, 5)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=ProbeConfig.r_max)
    ap.add_argument("--n-max", type=int, default=ProbeConfig.n_max)
    a = ap.parse_args()
    cfg = ProbeConfig(r_max=a.r_max, n_max=a.n_max)

    seqs = [MSequence.constant(m) for m in cfg.constants] + [MSequence.factorial()]
    for indexing in INDEXINGS:
        cells = bad = 0
        zero_sigma_bad = 0
        for M in seqs:
            for r in range(1, cfg.r_max + 1):
                for eps in itertools.product((0, 1), repeat=r - 1):
                    for c in range(M.entry(1)):
                        rep = check_conjecture_general(ConjectureParams(M, r, eps, c, indexing), cfg.n_max)
                        cells += 1
                        if rep.violations:
                            bad += 1
                            zero_sigma_bad += not any(eps)
        print(f"{indexing:>8}: {cells} cells, {bad} with violations ({zero_sigma_bad} of them with sigma = 0)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
