"""Counting M-ary partitions.

Four routes to p_M(n), kept separate so they can check each other:

* :func:`count_pm` / :func:`pm_dp_table`: the unbounded-parts (coin change) table;
* :func:`pm_series`: the product of 1 / (1 - q^{M_j}) built from series ops;
* :func:`brute_force_count`: explicit enumeration, small n only;
* :func:`pm_table` / :func:`pm_values`: prefix sums along
  F_M(q) = F_{M'}(q^{m_1}) / (1 - q), which only ever touches tables of length
  n / m_1 and is what the large sweeps use.
"""
from __future__ import annotations

import math
from itertools import accumulate, chain, repeat
from typing import Dict, Iterable, List, Sequence

from .mseq import MSequence, partial_product
from .series import TruncatedSeries, divide, shift, u_op

BRUTE_FORCE_CAP = 60
DEFAULT_MAX_BASE_ORDER = 2_000_000


class OrderBudgetError(ValueError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"series needs base order {required}, budget is {budget}")
        self.required = required
        self.budget = budget


def parts_up_to(M: MSequence, limit: int) -> List[int]:
    """All partial products M_r <= limit, increasing."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    parts = []
    for p in M.partial_products():
        if p > limit:
            break
        parts.append(p)
    return parts


def pm_dp_table(M: MSequence, limit: int) -> List[int]:
    """[p_M(0), ..., p_M(limit)] by the unbounded-parts table."""
    table = [0] * (limit + 1)
    table[0] = 1
    if limit == 0:
        return table
    for p in parts_up_to(M, limit):
        for n in range(p, limit + 1):
            table[n] += table[n - p]
    return table


def count_pm(M: MSequence, n: int) -> int:
    if n < 0:
        return 0
    return pm_dp_table(M, n)[n]


def brute_force_count(M: MSequence, n: int) -> int:
    """Enumerate multisets of parts summing to n, largest part first."""
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force refuses n = {n} > {BRUTE_FORCE_CAP}")
    if n < 0:
        return 0
    if n == 0:
        return 1
    parts = parts_up_to(M, n)

    def walk(rest: int, top: int) -> int:
        if rest == 0:
            return 1
        total = 0
        for k in range(top, -1, -1):
            if parts[k] <= rest:
                total += walk(rest - parts[k], k)
        return total

    return walk(n, len(parts) - 1)


def pm_series(M: MSequence, order: int) -> TruncatedSeries:
    """F_M(q) truncated at ``order``."""
    f = TruncatedSeries.one(order)
    if order == 0:
        return f
    for p in parts_up_to(M, order):
        f = divide(f, TruncatedSeries.one(order) - TruncatedSeries.monomial(p, order))
    return f


def _expand(values: Sequence[int], m: int, length: int) -> List[int]:
    # out[k] = values[k // m]
    return list(chain.from_iterable(repeat(v, m) for v in values))[:length]


def pm_table(M: MSequence, limit: int) -> List[int]:
    """[p_M(0), ..., p_M(limit)] via p_M(n) = sum_{k <= n // m_1} p_{M'}(k)."""
    if limit < 0:
        return []
    if not M.has_entry(1) or M.entry(1) > limit:
        return [1] * (limit + 1)
    m = M.entry(1)
    sums = list(accumulate(pm_table(M.shifted(1), limit // m)))
    return _expand(sums, m, limit + 1)


def pm_values(M: MSequence, args: Iterable[int]) -> Dict[int, int]:
    """p_M at each argument (0 for negative ones), without a full-length table."""
    args = list(args)
    top = max((a for a in args if a >= 0), default=-1)
    if top < 0:
        return {a: 0 for a in args}
    if not M.has_entry(1) or M.entry(1) > top:
        return {a: (1 if a >= 0 else 0) for a in args}
    m = M.entry(1)
    sums = list(accumulate(pm_table(M.shifted(1), top // m)))
    return {a: (sums[a // m] if a >= 0 else 0) for a in args}


def shifted_series(M: MSequence, r: int, order: int,
                   max_base_order: int = DEFAULT_MAX_BASE_ORDER) -> TruncatedSeries:
    """U_{m_r} ... U_{m_1}(q F_M(q)) to ``order``: coefficient n is p_M(m_1...m_r n - 1)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    ms = M.entries_upto(r)
    base = order * math.prod(ms)
    if base > max_base_order:
        raise OrderBudgetError(base, max_base_order)
    f = shift(pm_series(M, base))
    for m in ms:
        f = u_op(f, m)
    return f


def shifted_direct(M: MSequence, r: int, order: int) -> TruncatedSeries:
    """Same coefficients as :func:`shifted_series`, read off the prefix-sum table."""
    Mr = partial_product(M, r)
    args = [Mr * n - 1 for n in range(1, order + 1)]
    vals = pm_values(M, args)
    return TruncatedSeries(tuple([0] + [vals[a] for a in args]))
