"""Truncated power series over the integers.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients a(0..N) exactly
(Python ints).  Binary operations truncate to the smaller order, and
:func:`u_op` maps order N to N // m, so orders are always carried explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, List, NamedTuple, Optional, Tuple


class InvertibilityError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: Optional[int] = None) -> "TruncatedSeries":
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1 - len(c)))[: order + 1]
        return cls(tuple(c))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, c: int = 1) -> "TruncatedSeries":
        a = [0] * (order + 1)
        if k <= order:
            a[k] = c
        return cls(tuple(a))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, scale(other, -1))

    def __neg__(self) -> "TruncatedSeries":
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    N = min(f.order, g.order)
    return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs[: N + 1], g.coeffs[: N + 1])))


def scale(f: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(c * a for a in f.coeffs))


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(order f, order g)."""
    N = min(f.order, g.order)
    a, b = f.coeffs[: N + 1], g.coeffs[: N + 1]
    # iterate over the sparser factor
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [0] * (N + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(N + 1 - i):
                out[i + j] += ai * b[j]
    return TruncatedSeries(tuple(out))


def inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal of a series with constant term +-1, to the same order."""
    f0 = f.coeffs[0]
    if f0 not in (1, -1):
        raise InvertibilityError(f"constant term {f0} is not a unit")
    return divide(TruncatedSeries.one(f.order), f)


def divide(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f / g for g with unit constant term, via the reciprocal recurrence."""
    g0 = g.coeffs[0]
    if g0 not in (1, -1):
        raise InvertibilityError(f"constant term {g0} is not a unit")
    N = min(f.order, g.order)
    nz = [(k, c) for k, c in enumerate(g.coeffs[1 : N + 1], start=1) if c]
    out = list(f.coeffs[: N + 1])
    for n in range(N + 1):
        s = out[n]
        for k, c in nz:
            if k > n:
                break
            s -= c * out[n - k]
        out[n] = s * g0
    return TruncatedSeries(tuple(out))


def geometric_sum(f: TruncatedSeries) -> TruncatedSeries:
    """f / (1 - q), i.e. partial sums of the coefficients."""
    return TruncatedSeries(tuple(accumulate(f.coeffs)))


def shift(f: TruncatedSeries, k: int = 1) -> TruncatedSeries:
    """q^k f, same order."""
    return TruncatedSeries(((0,) * k + f.coeffs)[: f.order + 1])


def h(r: int, order: int) -> TruncatedSeries:
    """q / (1 - q)^(r + 1): coefficient C(n - 1 + r, r) at n >= 1, 0 at n = 0."""
    a = (0,) + (1,) * order
    for _ in range(r):
        a = tuple(accumulate(a))
    return TruncatedSeries(a)


def subst_power(f: TruncatedSeries, m: int) -> TruncatedSeries:
    """f(q^m), truncated to the order of f."""
    N = f.order
    a = [0] * (N + 1)
    for n in range(0, N // m + 1):
        a[n * m] = f.coeffs[n]
    return TruncatedSeries(tuple(a))


def u_op(f: TruncatedSeries, m: int) -> TruncatedSeries:
    """sum a(n) q^n -> sum a(mn) q^n; order N becomes N // m."""
    if m < 1:
        raise ValueError("U_m needs m >= 1")
    return TruncatedSeries(f.coeffs[::m])


class Comparison(NamedTuple):
    equal: bool
    order: int
    mismatches: List[int]


def compare(f: TruncatedSeries, g: TruncatedSeries, limit: int = 20) -> Comparison:
    """Coefficientwise comparison up to the smaller of the two orders."""
    N = min(f.order, g.order)
    bad = [n for n in range(N + 1) if f.coeffs[n] != g.coeffs[n]]
    return Comparison(not bad, N, bad[:limit])


def dumps(f: TruncatedSeries) -> str:
    """One ``index value`` line per coefficient."""
    return "".join(f"{n} {a}\n" for n, a in enumerate(f.coeffs))


def loads(text: str) -> TruncatedSeries:
    coeffs = []
    for line in text.splitlines():
        if not line.strip():
            continue
        idx, val = line.split()
        if int(idx) != len(coeffs):
            raise ValueError(f"expected index {len(coeffs)}, got {idx}")
        coeffs.append(int(val))
    return TruncatedSeries(tuple(coeffs))

