"""The H-series family and its beta coefficients.

H_() = h_0 = q / (1 - q) and H_(m_1..m_r) = U_{m_r}(H_(m_1..m_{r-1}) / (1 - q)).
Each H expands as

    H_(m_1..m_r) = m_1 m_2^2 ... m_r^r h_r - sum_T beta_T(m_1..m_r) H_(m_T)

over strictly increasing index tuples T of length 1..r-1.  Such expansions are
not unique; :func:`beta_map` produces the canonical one obtained by pushing the
expansion of H_(m_1..m_{r-1}) through U_{m_r}.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .alpha import alpha_table
from .mseq import cal_m, mu
from .partitions import DEFAULT_MAX_BASE_ORDER, OrderBudgetError
from .reports import CongruenceReport
from .series import TruncatedSeries, compare, geometric_sum, h, scale, u_op

Index = Tuple[int, ...]


@dataclass(frozen=True)
class HSeries:
    ms: Tuple[int, ...]
    series: TruncatedSeries
    inflation: int = 1  # base order / final order


def build_h(ms: Sequence[int], order: int, max_base_order: int = DEFAULT_MAX_BASE_ORDER) -> HSeries:
    ms = tuple(ms)
    if any(m < 2 for m in ms):
        raise ValueError("every m_j must be >= 2")
    inflation = math.prod(ms)
    base = order * inflation
    if base > max_base_order:
        raise OrderBudgetError(base, max_base_order)
    f = h(0, base)
    for m in ms:
        f = u_op(geometric_sum(f), m)
    return HSeries(ms, f, inflation)


def leading_coefficient(ms: Sequence[int]) -> int:
    """m_1 m_2^2 ... m_r^r."""
    return math.prod(m**j for j, m in enumerate(ms, start=1))


@dataclass
class BetaMap:
    ms: Tuple[int, ...]
    entries: Dict[Index, int] = field(default_factory=dict)  # nonzero entries only

    def __getitem__(self, T: Index) -> int:
        return self.entries.get(tuple(T), 0)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_dict(self) -> dict:
        return {"ms": list(self.ms), "entries": [{"tuple": list(T), "value": v} for T, v in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _coefficient(ms: Tuple[int, ...], i: int) -> int:
    # prod_{j=1}^{r-i-1} m_j^j * prod_{j=r-i}^{r-1} m_j^{r-i-1}, with ms 0-based
    r = len(ms)
    c = 1
    for j in range(1, r - i):
        c *= ms[j - 1] ** j
    for j in range(r - i, r):
        c *= ms[j - 1] ** (r - i - 1)
    return c


def beta_map(ms: Sequence[int], _cache: Optional[Dict[Tuple[int, ...], BetaMap]] = None) -> BetaMap:
    ms = tuple(ms)
    r = len(ms)
    if r < 1:
        raise ValueError("beta needs at least one entry")
    cache = {} if _cache is None else _cache
    if ms in cache:
        return cache[ms]
    out = BetaMap(ms)
    if r == 1:
        cache[ms] = out
        return out

    prev = beta_map(ms[:-1], cache)
    # tuples ending in r inherit the predecessor's coefficient; beta_(r) = 0
    for T, v in prev.entries.items():
        out.entries[T + (r,)] = v

    alpha = alpha_table(ms[-1], r)
    coeff = {i: _coefficient(ms, i) for i in range(1, r)}
    subs = {i: beta_map(ms[r - i - 1 : r - 1], cache) for i in range(2, r)}

    # tuples inside 1..r-1: collect the h_i -> H expansion terms, then negate
    acc: Dict[Index, int] = {}
    for i in range(1, r):
        w = coeff[i] * alpha[i]
        if not w:
            continue
        suffix = tuple(range(r - i, r))
        acc[suffix] = acc.get(suffix, 0) + w
        if i >= 2:
            offset = r - i - 1  # sub-tuple index k maps to k + offset
            for K, v in subs[i].entries.items():
                T = tuple(k + offset for k in K)
                acc[T] = acc.get(T, 0) + w * v
    for T, v in acc.items():
        if v:
            out.entries[T] = -v
    cache[ms] = out
    return out


def iter_tuples(r: int) -> Iterator[Index]:
    """Strictly increasing tuples in 1..r of length 1..r-1."""
    from itertools import combinations

    for s in range(1, r):
        yield from combinations(range(1, r + 1), s)


@dataclass
class ExpansionCheck:
    ms: Tuple[int, ...]
    equal: bool
    order: int
    mismatches: List[int]


def expansion_rhs(ms: Sequence[int], betas: Dict[Index, int], order: int,
                  cache: Optional[Dict[Tuple[int, ...], TruncatedSeries]] = None) -> TruncatedSeries:
    """lead * h_r - sum beta_T H_(m_T) for an arbitrary coefficient assignment."""
    ms = tuple(ms)
    cache = {} if cache is None else cache
    total = scale(h(len(ms), order), leading_coefficient(ms))
    for T, v in betas.items():
        if not v:
            continue
        sub = tuple(ms[j - 1] for j in T)
        if sub not in cache:
            cache[sub] = build_h(sub, order).series
        total = total - scale(cache[sub], v)
    return total


def expansion_check(ms: Sequence[int], order: int) -> ExpansionCheck:
    ms = tuple(ms)
    lhs = build_h(ms, order).series
    rhs = expansion_rhs(ms, beta_map(ms).entries, order)
    c = compare(lhs, rhs)
    return ExpansionCheck(ms, c.equal, c.order, c.mismatches)


def example_three_betas(m1: int, m2: int, m3: int) -> Dict[Index, int]:
    """The explicit r = 3 decomposition written out by hand (a different valid choice)."""
    c2 = math.comb(m2, 2)
    return {
        (1, 2): m3**2 * (m3 - 1),
        (1, 3): c2,
        (1,): m3**2 * (m3 - 1) * c2 - m2**2 * math.comb(m3, 3),
    }


def beta_modulus(ms: Sequence[int], T: Index) -> int:
    """prod over t not in T of mu(m_t, t)."""
    return math.prod(mu(m, t) for t, m in enumerate(ms, start=1) if t not in T)


def beta_divisibility_report(ms: Sequence[int]) -> CongruenceReport:
    """beta_T = 0 mod prod_{t not in T} mu(m_t, t), plus m^{r-s}/(m,2) for constant ms."""
    ms = tuple(ms)
    r = len(ms)
    bm = beta_map(ms)
    constant = len(set(ms)) == 1
    rep = CongruenceReport("beta-divisibility", 1, params={"ms": list(ms), "constant": constant})
    for k, T in enumerate(iter_tuples(r), start=1):
        v = bm[T]
        label = "(" + ",".join(map(str, T)) + ")"
        rep.add(k, v, v, modulus=beta_modulus(ms, T), label=label)
        if constant:
            m = ms[0]
            strong = m ** (r - len(T)) // math.gcd(m, 2)
            if v % strong and k not in rep.violations:
                rep.violations.append(k)
    return rep


def h_modulus(ms: Sequence[int]) -> int:
    """prod_{t=1}^{r} cal_m(m_t, t)."""
    return math.prod(cal_m(m, t) for t, m in enumerate(ms, start=1))


def h_divisibility_report(ms: Sequence[int], order: int) -> CongruenceReport:
    ms = tuple(ms)
    f = build_h(ms, order).series
    rep = CongruenceReport("h-divisibility", h_modulus(ms), params={"ms": list(ms), "order": order})
    for n, a in enumerate(f.coeffs):
        rep.add(n, n, a)
    return rep
