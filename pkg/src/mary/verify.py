"""Congruence checks: the main theorem, its series identity, the classical
m-ary results, and probes of the conjectured stronger congruences.

Every check returns a :class:`~mary.reports.CongruenceReport`.  Theorem-type
checks expect zero violations; conjecture probes are observational and their
violations are findings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .hbeta import build_h
from .mseq import MSequence, d_r, mu, partial_product, primorial, theorem_modulus
from .partitions import pm_dp_table, pm_series, pm_values, shifted_direct, shifted_series
from .reports import CongruenceReport
from .series import compare, mul

# n for which p_M(5! n - 2 - 4!) = 10 (mod 20) is claimed, parts = factorials
COUNTEREXAMPLE_N = (2, 6, 8, 10, 12, 16)
COUNTEREXAMPLE_MODULUS = 20
COUNTEREXAMPLE_RESIDUE = 10

INDEXINGS = ("aligned", "literal")


def _params(M: MSequence, **kw) -> dict:
    return {"seq": str(M), **kw}


def verify_main_theorem(M: MSequence, r: int, n_max: int) -> CongruenceReport:
    """p_M(m_1...m_r n - 1) = 0 mod prod_{t=2}^{r} cal_m(m_t, t-1) for n = 1..n_max."""
    return theorem_sweep(M, [r], n_max)[0]


def theorem_sweep(M: MSequence, rs: Iterable[int], n_max: int) -> List[CongruenceReport]:
    """One report per r, sharing a single table of p_M values."""
    rs = list(rs)
    if any(r < 1 for r in rs) or n_max < 1:
        raise ValueError("need r >= 1 and n_max >= 1")
    args = {r: [partial_product(M, r) * n - 1 for n in range(1, n_max + 1)] for r in rs}
    values = pm_values(M, (a for r in rs for a in args[r]))
    reports = []
    for r in rs:
        rep = CongruenceReport("main-theorem", theorem_modulus(M, r), params=_params(M, r=r, n_max=n_max))
        for n, a in enumerate(args[r], start=1):
            rep.add(n, a, values[a])
        reports.append(rep)
    return reports


def verify_large_prime_corollary(M: MSequence, r: int, n_max: int) -> CongruenceReport:
    """For m_t whose prime factors are all >= t: residues vanish mod prod_{t=2}^{r} m_t."""
    for t in range(1, r + 1):
        m = M.entry(t)
        small = [p for p in range(2, t) if m % p == 0]
        if small:
            raise ValueError(f"m_{t} = {m} has prime factor {small[0]} < {t}")
    modulus = math.prod(M.entry(t) for t in range(2, r + 1))
    Mr = partial_product(M, r)
    args = [Mr * n - 1 for n in range(1, n_max + 1)]
    values = pm_values(M, args)
    rep = CongruenceReport("large-prime-corollary", modulus, params=_params(M, r=r, n_max=n_max))
    for n, a in enumerate(args, start=1):
        rep.add(n, a, values[a])
    return rep


@dataclass
class IdentityCheck:
    equal: bool
    order: int
    mismatches: List[int]
    direct_equal: bool  # operator pipeline vs prefix-sum table

    @property
    def passed(self) -> bool:
        return self.equal and self.direct_equal

    def to_dict(self) -> dict:
        return {"equal": self.equal, "order": self.order, "mismatches": self.mismatches,
                "direct_equal": self.direct_equal, "verdict": "pass" if self.passed else "fail"}


def verify_identity(M: MSequence, r: int, order: int) -> IdentityCheck:
    """sum_n p_M(m_1...m_r n - 1) q^n = H_(m_2..m_r)(q) * F_{(m_{r+1}, ...)}(q) to ``order``."""
    if r < 2:
        raise ValueError("the identity needs r >= 2")
    lhs = shifted_series(M, r, order)
    hs = build_h(M.entries_upto(r)[1:], order).series
    rhs = mul(hs, pm_series(M.shifted(r), order))
    c = compare(lhs, rhs)
    direct = compare(lhs, shifted_direct(M, r, order)).equal
    return IdentityCheck(c.equal, c.order, c.mismatches, direct)


@dataclass
class ConjectureParams:
    M: MSequence
    r: int
    eps: Tuple[int, ...] = ()
    c: int = 0
    indexing: str = "aligned"

    def __post_init__(self):
        self.eps = tuple(self.eps) or (0,) * (self.r - 1)
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if len(self.eps) != self.r - 1 or any(e not in (0, 1) for e in self.eps):
            raise ValueError(f"eps must be r - 1 = {self.r - 1} values in {{0, 1}}")
        if not 0 <= self.c <= self.M.entry(1) - 1:
            raise ValueError(f"c must lie in [0, m_1 - 1] = [0, {self.M.entry(1) - 1}]")
        if self.indexing not in INDEXINGS:
            raise ValueError(f"indexing must be one of {INDEXINGS}")

    @property
    def sigma(self) -> int:
        """sum_{j=1}^{r-1} eps_j M_j."""
        return sum(e * partial_product(self.M, j) for j, e in enumerate(self.eps, start=1))

    @property
    def mus(self) -> Tuple[int, ...]:
        """The r factors mu_j = m / gcd(m, P_j), with m = m_j (literal) or m_{j+1} (aligned)."""
        k = 1 if self.indexing == "aligned" else 0
        return tuple(mu(self.M.entry(j + k), primorial(j)) for j in range(1, self.r + 1))

    @property
    def modulus(self) -> int:
        return math.prod(self.mus)

    def argument(self, n: int) -> int:
        m1 = self.M.entry(1)
        if self.indexing == "aligned":
            return partial_product(self.M, self.r + 1) * n - self.sigma - m1 + self.c
        return partial_product(self.M, self.r) * n - self.sigma - m1 - self.c


def check_conjecture_general(params: ConjectureParams, n_max: int) -> CongruenceReport:
    """Residues of p_M at the conjectured arguments; violations are findings."""
    p = params
    rep = CongruenceReport(
        "conjecture-general", p.modulus,
        params=_params(p.M, r=p.r, eps=list(p.eps), c=p.c, sigma=p.sigma, indexing=p.indexing, n_max=n_max),
    )
    args = {n: p.argument(n) for n in range(1, n_max + 1)}
    values = pm_values(p.M, [a for a in args.values() if a >= 0])
    for n, a in args.items():
        if a < 0:
            rep.skipped.append(n)
            continue
        rep.add(n, a, values[a])
    return rep


def factorial_sigma(eps: Sequence[int], indexing: str = "aligned") -> int:
    """sigma for the factorial sequence: sum eps_j (j+1)! (aligned, m_j = j + 1) or eps_j j! (literal, m_j = j)."""
    k = 1 if indexing == "aligned" else 0
    return sum(e * math.factorial(j + k) for j, e in enumerate(eps, start=1))


def check_factorial_conjecture(r: int, eps: Sequence[int], c: int, n_max: int,
                               indexing: str = "aligned") -> CongruenceReport:
    """p_M(r! n - sigma - c) = 0 mod r!/D_r with factorial parts and c in {1, 2}."""
    if c not in (1, 2):
        raise ValueError("c must be 1 or 2")
    eps = tuple(eps) or (0,) * (r - 1)
    if len(eps) != r - 1:
        raise ValueError("eps must have r - 1 entries")
    sigma = factorial_sigma(eps, indexing)
    modulus = math.factorial(r) // d_r(r)
    M = MSequence.factorial()
    rep = CongruenceReport("conjecture-factorial", modulus,
                           params=_params(M, r=r, eps=list(eps), c=c, sigma=sigma, indexing=indexing, n_max=n_max))
    args = {n: math.factorial(r) * n - sigma - c for n in range(1, n_max + 1)}
    values = pm_values(M, [a for a in args.values() if a >= 0])
    for n, a in args.items():
        if a < 0:
            rep.skipped.append(n)
            continue
        rep.add(n, a, values[a])
    return rep


def reproduce_counterexample(n_list: Iterable[int] = COUNTEREXAMPLE_N) -> CongruenceReport:
    """p_M(120 n - 26) mod 20 with factorial parts.

    Residue 10 is asserted only for the n in COUNTEREXAMPLE_N; other n are
    reported without an expectation.
    """
    n_list = list(n_list)
    M = MSequence.factorial()
    rep = CongruenceReport("counterexample", COUNTEREXAMPLE_MODULUS,
                           params={"seq": str(M), "expression": "120*n - 26", "asserted_n": list(COUNTEREXAMPLE_N)},
                           expected_residue=COUNTEREXAMPLE_RESIDUE)
    args = {n: 120 * n - 26 for n in n_list}
    values = pm_values(M, [a for a in args.values() if a >= 0])
    for n in n_list:
        a = args[n]
        if a < 0:
            rep.skipped.append(n)
            continue
        rep.add(n, a, values[a], assert_it=n in COUNTEREXAMPLE_N)
    return rep


def classical_modulus(m: int, r: int) -> int:
    """m^r / c_r with c_r = 1 for odd m and 2^(r-1) for even m."""
    c_r = 1 if m % 2 else 2 ** (r - 1)
    return m**r // c_r


SIGMA_INDEXINGS = ("printed", "shifted")


def classical_sigma(m: int, eps: Sequence[int], indexing: str = "printed") -> int:
    """sum_{j=1}^{r-1} eps_j m^j (printed) or eps_j m^(j+1) (shifted)."""
    if indexing not in SIGMA_INDEXINGS:
        raise ValueError(f"sigma indexing must be one of {SIGMA_INDEXINGS}")
    k = 1 if indexing == "shifted" else 0
    return sum(e * m ** (j + k) for j, e in enumerate(eps, start=1))


def verify_classical_mary(m: int, r: int, eps: Sequence[int] = (), n_max: int = 50,
                          sigma_indexing: str = "printed") -> CongruenceReport:
    """b_m(m^(r+1) n - sigma - m) = 0 mod m^r / c_r for the constant sequence m."""
    eps = tuple(eps) or (0,) * (r - 1)
    if len(eps) != r - 1 or any(e not in (0, 1) for e in eps):
        raise ValueError("eps must be r - 1 values in {0, 1}")
    sigma = classical_sigma(m, eps, sigma_indexing)
    M = MSequence.constant(m)
    rep = CongruenceReport("classical-mary", classical_modulus(m, r),
                           params={"m": m, "r": r, "eps": list(eps), "sigma": sigma,
                                   "sigma_indexing": sigma_indexing, "n_max": n_max})
    args = [m ** (r + 1) * n - sigma - m for n in range(1, n_max + 1)]
    values = pm_values(M, args)
    for n, a in enumerate(args, start=1):
        rep.add(n, a, values[a])
    return rep


CHURCHHOUSE_VARIANTS = ("printed", "classical")


def verify_churchhouse(k: int, n_max: int, variant: str = "printed") -> CongruenceReport:
    """Binary-partition supercongruences.

    First family, n = 1..n_max:
      printed:   b_2(2^(k+2) n) = b_2(2^k n)     mod 2^(3k+2)
      classical: b_2(2^(2k+2) n) = b_2(2^(2k) n) mod 2^(3k+2)
    Second family, one sample recorded with n = 0:
      b_2(2^(2k+1)) = b_2(2^(2k-1)) mod 2^(3k)
    Sample ``arg`` is the larger argument, ``residue`` the difference's residue.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if variant not in CHURCHHOUSE_VARIANTS:
        raise ValueError(f"variant must be one of {CHURCHHOUSE_VARIANTS}")
    hi, lo = (2 ** (k + 2), 2**k) if variant == "printed" else (2 ** (2 * k + 2), 2 ** (2 * k))
    M = MSequence.constant(2)
    b = pm_dp_table(M, max(hi * n_max, 2 ** (2 * k + 1)))
    rep = CongruenceReport("churchhouse", 2 ** (3 * k + 2), params={"k": k, "n_max": n_max, "variant": variant})
    for n in range(1, n_max + 1):
        rep.add(n, hi * n, b[hi * n] - b[lo * n])
    rep.add(0, 2 ** (2 * k + 1), b[2 ** (2 * k + 1)] - b[2 ** (2 * k - 1)], modulus=2 ** (3 * k), label="second-family")
    return rep


@dataclass
class RemarkCheck:
    holds: bool
    difference_failures: List[int] = field(default_factory=list)
    flat_failures: List[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def remark_identity_check(M: MSequence, n_max: int) -> RemarkCheck:
    """p_M(m_1 n) - p_M(m_1(n-1)) = p_{M'}(n) and p_M(m_1 n - 1) = p_M(m_1(n-1)), n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    m1 = M.entry(1)
    p = pm_dp_table(M, m1 * n_max)
    p_tail = pm_dp_table(M.shifted(1), n_max)
    diff = [n for n in range(1, n_max + 1) if p[m1 * n] - p[m1 * (n - 1)] != p_tail[n]]
    flat = [n for n in range(1, n_max + 1) if p[m1 * n - 1] != p[m1 * (n - 1)]]
    return RemarkCheck(not diff and not flat, diff, flat)
