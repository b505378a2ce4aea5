"""Exact character degrees of S_n from the hook length formula.

A degree is held as its prime factorisation (:class:`DegreeVector`), built
from Legendre's formula for ``n!`` minus the prime exponents of each hook
length, so equality tests never need the big integer.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from .partitions import hook_multiset

__all__ = [
    "PrimeSieve",
    "DegreeVector",
    "legendre_exponent",
    "degree_vector",
    "degree_bigint",
    "compare_degrees",
    "degree",
    "LOG_MARGIN",
]

# Natural-log gap below which compare_degrees falls back to exact arithmetic.
LOG_MARGIN = 1e-6


class PrimeSieve:
    """All primes up to ``bound`` (sieve of Eratosthenes)."""

    __slots__ = ("bound", "primes", "_spf")

    def __init__(self, bound: int):
        if bound < 1:
            raise ValueError("sieve bound must be positive")
        self.bound = bound
        spf = list(range(bound + 1))
        for i in range(2, math.isqrt(bound) + 1):
            if spf[i] == i:
                for j in range(i * i, bound + 1, i):
                    if spf[j] == j:
                        spf[j] = i
        self._spf = spf
        self.primes: Tuple[int, ...] = tuple(i for i in range(2, bound + 1) if spf[i] == i)

    def factor(self, m: int) -> Dict[int, int]:
        """Prime factorisation of ``1 <= m <= bound``."""
        if not 1 <= m <= self.bound:
            raise ValueError(f"{m} outside sieve range 1..{self.bound}")
        out: Dict[int, int] = {}
        spf = self._spf
        while m > 1:
            p = spf[m]
            m //= p
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"PrimeSieve(bound={self.bound})"


@lru_cache(maxsize=8)
def _sieve(bound: int) -> PrimeSieve:
    return PrimeSieve(bound)


def legendre_exponent(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n!``."""
    e = 0
    while n:
        n //= p
        e += n
    return e


@dataclass(frozen=True)
class DegreeVector:
    """Prime exponents of a character degree of S_n; zero exponents are omitted."""

    n: int
    exponents: Tuple[Tuple[int, int], ...]
    digest: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        exps = tuple(sorted((p, e) for p, e in self.exponents if e))
        for p, e in exps:
            if e < 0:
                raise ValueError(f"negative exponent for prime {p}: degree is not an integer")
            if p > self.n:
                raise ValueError(f"prime {p} exceeds n={self.n}")
        object.__setattr__(self, "exponents", exps)
        raw = ",".join(f"{p}^{e}" for p, e in exps).encode()
        object.__setattr__(self, "digest", int.from_bytes(hashlib.blake2b(raw, digest_size=16).digest(), "little"))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    def log(self) -> float:
        return sum(e * math.log(p) for p, e in self.exponents)

    def __int__(self) -> int:
        return degree_bigint(self)


def degree_vector(lam: Iterable[int], sieve: PrimeSieve = None) -> DegreeVector:
    lam = tuple(lam)
    n = sum(lam)
    if sieve is None:
        sieve = _sieve(max(n, 1))
    if sieve.bound < n:
        raise ValueError(f"sieve bound {sieve.bound} is smaller than n={n}")
    exps = {p: legendre_exponent(n, p) for p in sieve.primes if p <= n}
    for h in hook_multiset(lam):
        for p, e in sieve.factor(h).items():
            exps[p] -= e
    return DegreeVector(n, tuple(exps.items()))


def degree_bigint(v: DegreeVector) -> int:
    out = 1
    for p, e in v.exponents:
        out *= p**e
    return out


def compare_degrees(a: DegreeVector, b: DegreeVector) -> int:
    """Return -1, 0 or 1 as degree ``a`` is less than, equal to or greater than ``b``."""
    if a.n != b.n:
        raise ValueError("degree vectors over different n")
    if a.exponents == b.exponents:
        return 0
    diff = a.log() - b.log()
    if diff > LOG_MARGIN:
        return 1
    if diff < -LOG_MARGIN:
        return -1
    x, y = degree_bigint(a), degree_bigint(b)
    return (x > y) - (x < y)


def degree(lam: Iterable[int]) -> int:
    """``n! / prod(H(lam))`` as an integer."""
    lam = tuple(lam)
    return math.factorial(sum(lam)) // hook_multiset(lam).product()
