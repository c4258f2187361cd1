"""Residues of p_M(120 n - 26) mod 20 with factorial parts, for n = 1..N.

The six reported n are marked; the others are shown for context only.
"""
from __future__ import annotations

import argparse

from mary.verify import COUNTEREXAMPLE_N, reproduce_counterexample


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=20)
    a = ap.parse_args()
    rep = reproduce_counterexample(range(1, a.n_max + 1))
    for s in rep.samples:
        mark = "*" if s.n in COUNTEREXAMPLE_N else " "
        print(f"{mark} n={s.n:>3}  arg={s.arg:>6}  residue={s.residue}")
    print(f"reported n all give residue 10: {rep.passed}")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
