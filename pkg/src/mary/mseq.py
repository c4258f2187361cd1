"""The sequence M = (1, m_1, m_2, ...) and the small arithmetic helpers built on it.

A sequence is stored as its explicit entries ``m_1 .. m_L`` plus a tail policy
telling what comes after them:

* ``finite``: nothing, the sequence ends at ``m_L``;
* ``const``: every later entry equals ``tail_value``;
* ``succ``: entries keep growing by one, ``m_{L+k} = m_L + k``.

``m_0 = 1`` is implicit and never stored.

Sequence specs (used by the CLI) are parsed by :func:`parse_sequence`::

    const:m            m, m, m, ...
    const:m,len        m repeated len times, then finite
    fact               2, 3, 4, ...  (parts are the factorials)
    list:a,b,c         finite explicit list
    list:a,b,c,tail=const   ... then c forever
    list:a,b,c,tail=succ    ... then c+1, c+2, ...

:func:`format_sequence` prints the canonical form, and
``parse_sequence(format_sequence(s)) == s`` for every sequence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Optional, Sequence, Tuple

TAILS = ("finite", "const", "succ")


class SequenceRangeError(IndexError):
    """An entry past the end of a finite sequence was requested."""

    def __init__(self, index: int, length: int):
        super().__init__(f"entry m_{index} requested but the sequence is finite with {length} entries")
        self.index = index
        self.length = length


class SequenceSpecError(ValueError):
    """A sequence spec string could not be parsed."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


def _normalize(entries: Tuple[int, ...], tail: str, tail_value: Optional[int]):
    # strip explicit entries the tail would reproduce anyway, so equal sequences compare equal
    if tail == "const":
        while entries and entries[-1] == tail_value:
            entries = entries[:-1]
    elif tail == "succ":
        while len(entries) > 1 and entries[-1] == entries[-2] + 1:
            entries = entries[:-1]
    return entries


@dataclass(frozen=True)
class MSequence:
    entries: Tuple[int, ...] = ()
    tail: str = "finite"
    tail_value: Optional[int] = None

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if self.tail not in TAILS:
            raise ValueError(f"unknown tail policy {self.tail!r}")
        for j, e in enumerate(entries, start=1):
            if e < 2:
                raise ValueError(f"m_{j} = {e} but every entry must be >= 2")
        tail_value = self.tail_value
        if self.tail == "const":
            if tail_value is None or tail_value < 2:
                raise ValueError("const tail needs a value >= 2")
        elif self.tail == "succ":
            if not entries:
                raise ValueError("succ tail needs at least one explicit entry")
            tail_value = None
        else:
            tail_value = None
        object.__setattr__(self, "entries", _normalize(entries, self.tail, tail_value))
        object.__setattr__(self, "tail_value", tail_value)

    # constructors

    @classmethod
    def constant(cls, m: int, length: Optional[int] = None) -> "MSequence":
        if length is None:
            return cls((), "const", m)
        return cls((m,) * length, "finite")

    @classmethod
    def factorial(cls) -> "MSequence":
        return cls((2,), "succ")

    @classmethod
    def finite(cls, entries: Sequence[int]) -> "MSequence":
        return cls(tuple(entries), "finite")

    # access

    @property
    def length(self) -> Optional[int]:
        """Number of entries m_1.., or None for an infinite sequence."""
        return len(self.entries) if self.tail == "finite" else None

    def has_entry(self, j: int) -> bool:
        return j >= 0 and (self.tail != "finite" or j <= len(self.entries))

    def entry(self, j: int) -> int:
        """Return m_j; m_0 is always 1."""
        if j < 0:
            raise IndexError(f"negative index {j}")
        if j == 0:
            return 1
        L = len(self.entries)
        if j <= L:
            return self.entries[j - 1]
        if self.tail == "const":
            return self.tail_value
        if self.tail == "succ":
            return self.entries[-1] + (j - L)
        raise SequenceRangeError(j, L)

    def entries_upto(self, r: int) -> Tuple[int, ...]:
        """(m_1, ..., m_r)."""
        return tuple(self.entry(j) for j in range(1, r + 1))

    def shifted(self, k: int) -> "MSequence":
        """The sequence (1, m_{k+1}, m_{k+2}, ...), i.e. M with its first k entries dropped."""
        if k == 0:
            return self
        L = len(self.entries)
        if self.tail == "finite":
            return MSequence(self.entries[k:], "finite")
        if self.tail == "const":
            return MSequence(self.entries[k:], "const", self.tail_value)
        return MSequence((self.entry(k + 1),) + self.entries[k + 1:L], "succ")

    def partial_products(self) -> Iterator[int]:
        """Yield M_0 = 1, M_1, M_2, ... (stops for finite sequences)."""
        prod = 1
        j = 0
        while True:
            yield prod
            j += 1
            if not self.has_entry(j):
                return
            prod *= self.entry(j)

    def __str__(self) -> str:
        return format_sequence(self)


def partial_product(M: MSequence, r: int) -> int:
    """M_r = m_0 m_1 ... m_r."""
    if r < 0:
        raise IndexError(f"negative index {r}")
    return math.prod(M.entries_upto(r))


def mu(a: int, b: int) -> int:
    """a / gcd(a, b)."""
    if a < 1 or b < 1:
        raise ValueError("mu needs positive arguments")
    return a // math.gcd(a, b)


def lcm_upto(r: int) -> int:
    return reduce(math.lcm, range(1, r + 1), 1)


def cal_m(m: int, r: int) -> int:
    """m / gcd(m, lcm(1..r)): the per-factor modulus of the main congruence."""
    if m < 1 or r < 1:
        raise ValueError("cal_m needs positive arguments")
    return m // math.gcd(m, lcm_upto(r))


def primes_upto(n: int) -> list:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]


def primorial(j: int) -> int:
    """Product of all primes <= j (1 for j < 2)."""
    return math.prod(primes_upto(j))


def d_r(r: int) -> int:
    """prod over primes p <= r - 2 of p ** floor((r - 2) / p)."""
    return math.prod(p ** ((r - 2) // p) for p in primes_upto(r - 2))


def theorem_modulus(M: MSequence, r: int) -> int:
    """prod_{t=2}^{r} cal_m(m_t, t - 1); 1 when r = 1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return math.prod(cal_m(M.entry(t), t - 1) for t in range(2, r + 1))


# spec mini-language


def _int_token(token: str, position: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise SequenceSpecError(f"expected an integer {what}", token, position) from None
    return value


def parse_sequence(spec: str) -> MSequence:
    """Parse a sequence spec string; see the module docstring for the grammar."""
    text = spec.strip()
    if text == "fact":
        return MSequence.factorial()
    kind, sep, body = text.partition(":")
    if not sep:
        raise SequenceSpecError("unknown sequence kind", text, 0)
    tokens = []
    pos = len(kind) + 1
    for tok in body.split(","):
        tokens.append((tok.strip(), pos))
        pos += len(tok) + 1
    if kind == "const":
        if not 1 <= len(tokens) <= 2:
            raise SequenceSpecError("const takes m[,len]", body, len(kind) + 1)
        m = _int_token(*tokens[0], "m")
        if m < 2:
            raise SequenceSpecError("entries must be >= 2", *tokens[0])
        if len(tokens) == 1:
            return MSequence.constant(m)
        length = _int_token(*tokens[1], "length")
        if length < 0:
            raise SequenceSpecError("length must be >= 0", *tokens[1])
        return MSequence.constant(m, length)
    if kind == "list":
        tail = "finite"
        if tokens and tokens[-1][0].startswith("tail="):
            tok, tpos = tokens.pop()
            tail = {"tail=const": "const", "tail=succ": "succ", "tail=finite": "finite"}.get(tok)
            if tail is None:
                raise SequenceSpecError("unknown tail", tok, tpos)
        entries = []
        for tok, tpos in tokens:
            if tok == "":
                if len(tokens) == 1:
                    break
                raise SequenceSpecError("empty entry", tok, tpos)
            e = _int_token(tok, tpos, "entry")
            if e < 2:
                raise SequenceSpecError("entries must be >= 2", tok, tpos)
            entries.append(e)
        if tail != "finite" and not entries:
            raise SequenceSpecError("a tail needs at least one entry", body, len(kind) + 1)
        if tail == "const":
            return MSequence(tuple(entries), "const", entries[-1])
        return MSequence(tuple(entries), tail)
    raise SequenceSpecError("unknown sequence kind", kind, 0)


def format_sequence(M: MSequence) -> str:
    """Canonical spec string for M."""
    if M.tail == "succ" and M.entries == (2,):
        return "fact"
    if M.tail == "const" and not M.entries:
        return f"const:{M.tail_value}"
    if M.tail == "finite" and M.entries and len(set(M.entries)) == 1:
        return f"const:{M.entries[0]},{len(M.entries)}"
    body = ",".join(str(e) for e in M.entries)
    if M.tail == "finite":
        return f"list:{body}"
    if M.tail == "succ":
        return f"list:{body},tail=succ"
    # const tail with a differing explicit prefix
    return f"list:{body},{M.tail_value},tail=const"
