"""The integers alpha_{m,r}(i) with C(mn + r - 1, r) = sum_i alpha_{m,r}(i) C(n + i - 1, i).

They describe how U_m acts on the basis h_r = q / (1 - q)^(r + 1):
U_m h_r = sum_{i=1}^{r} alpha_{m,r}(i) h_i.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .mseq import mu
from .reports import CongruenceReport


class AlphaConsistencyError(ArithmeticError):
    """A step that must divide exactly did not."""


@dataclass(frozen=True)
class AlphaTable:
    m: int
    r: int
    values: Tuple[int, ...]  # alpha(1), ..., alpha(r)

    def __getitem__(self, i: int) -> int:
        """alpha(i), with alpha(i) = 0 outside 1..r."""
        if 1 <= i <= self.r:
            return self.values[i - 1]
        return 0

    def evaluate(self, n: int) -> int:
        """sum_i alpha(i) C(n + i - 1, i)."""
        return sum(a * math.comb(n + i - 1, i) for i, a in enumerate(self.values, start=1))


def alpha_rows(m: int, r: int) -> List[List[int]]:
    """Rows alpha_s(0..s) for s = 0..r.

    Built from alpha_s(i) = (m i alpha_{s-1}(i-1) - (m i - s + 1) alpha_{s-1}(i)) / s
    starting at alpha_0(0) = 1 (the s = 0 identity C(mn - 1, 0) = C(n - 1, 0)),
    which yields alpha_1(1) = m and alpha_s(0) = 0 for s >= 1.
    """
    if m < 2 or r < 0:
        raise ValueError("need m >= 2 and r >= 0")
    rows = [[1]]
    for s in range(1, r + 1):
        prev = rows[-1]

        def a(i: int) -> int:
            return prev[i] if 0 <= i < len(prev) else 0

        row = []
        for i in range(s + 1):
            num = m * i * a(i - 1) - (m * i - s + 1) * a(i)
            q, rem = divmod(num, s)
            if rem:
                raise AlphaConsistencyError(f"row {s}, i = {i}: {num} not divisible by {s}")
            row.append(q)
        rows.append(row)
    return rows


_cache: Dict[Tuple[int, int], AlphaTable] = {}


def alpha_table(m: int, r: int) -> AlphaTable:
    if r < 1:
        raise ValueError("r must be >= 1")
    key = (m, r)
    if key not in _cache:
        _cache[key] = AlphaTable(m, r, tuple(alpha_rows(m, r)[r][1:]))
    return _cache[key]


def alpha_oracle(m: int, r: int) -> AlphaTable:
    """Solve the r x r system given by the identity at n = 1..r over the rationals."""
    if r < 1:
        raise ValueError("r must be >= 1")
    A = [[Fraction(math.comb(n + i - 1, i)) for i in range(1, r + 1)] + [Fraction(math.comb(m * n + r - 1, r))]
         for n in range(1, r + 1)]
    for col in range(r):
        piv = next((k for k in range(col, r) if A[k][col] != 0), None)
        if piv is None:
            raise AlphaConsistencyError(f"singular system for m = {m}, r = {r}")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for k in range(r):
            if k != col and A[k][col] != 0:
                f = A[k][col]
                A[k] = [x - f * y for x, y in zip(A[k], A[col])]
    sol = [A[i][r] for i in range(r)]
    if any(x.denominator != 1 for x in sol):
        raise AlphaConsistencyError(f"non-integral solution for m = {m}, r = {r}: {sol}")
    return AlphaTable(m, r, tuple(int(x) for x in sol))


def alpha_divisibility_report(m: int, r: int) -> CongruenceReport:
    """mu(m i, r) | alpha(i) for each i, and the weaker mu(m, r) | alpha(i)."""
    t = alpha_table(m, r)
    rep = CongruenceReport("alpha-divisibility", mu(m, r), params={"m": m, "r": r})
    for i in range(1, r + 1):
        rep.add(i, t[i], t[i], modulus=mu(m * i, r), label=f"mu({m * i},{r})")
        if t[i] % rep.modulus and i not in rep.violations:
            rep.violations.append(i)
    return rep


def alpha_csv(tables) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "r", "i", "alpha"])
    for t in tables:
        for i, a in enumerate(t.values, start=1):
            w.writerow([t.m, t.r, i, a])
    return buf.getvalue()
