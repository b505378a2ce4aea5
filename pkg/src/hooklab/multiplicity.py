"""Maximal and average multiplicities of character degrees and class sizes of S_n."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .degrees import degree_vector
from .partitions import (
    Partition,
    is_self_conjugate,
    partition_count,
    self_conjugate_partitions,
    hook_multiset,
)
from .scan import beta_to_partition, hook_products, map_shards

__all__ = [
    "CapExceeded",
    "DEFAULT_CAP",
    "MultiplicityReport",
    "CycleType",
    "check_cap",
    "degree_counts",
    "max_multiplicity",
    "multiplicity_at_least",
    "avg_cd_ratio",
    "class_size",
    "centralizer_orders",
    "avg_cc_ratio",
]

DEFAULT_CAP = 70


class CapExceeded(ValueError):
    pass


def check_cap(n: int, cap: int, stretch: bool, what: str = "exhaustive scans") -> None:
    if n > cap and not stretch:
        raise CapExceeded(
            f"n={n} is above the cap n<={cap} for {what}; pass --stretch to run it anyway "
            f"(use --threads to spread the largest-part shards over several processes)"
        )


@dataclass(frozen=True)
class MultiplicityReport:
    n: int
    max_multiplicity: int
    witness_degree: int
    witness_partitions: Tuple[Partition, ...]
    ignore_self_conjugate: bool = False


def _count_shard(n, shard):
    return Counter(hook_products(n, shard, with_beta=False))


def degree_counts(n: int, ignore_self_conjugate: bool = False, threads: int = 1) -> Counter:
    """Map hook product -> number of partitions of ``n`` with that product.

    Equal hook products are exactly equal degrees ``n!/prod(H)``.
    """
    counts: Counter = Counter()
    for part in map_shards(_count_shard, n, threads):
        counts.update(part)
    if ignore_self_conjugate:
        for lam in self_conjugate_partitions(n):
            hp = hook_multiset(lam).product()
            counts[hp] -= 1
            if not counts[hp]:
                del counts[hp]
    return counts


def _witnesses(n: int, hp: int, ignore_self_conjugate: bool, limit: Optional[int] = None) -> List[Partition]:
    out = []
    for beta, h in hook_products(n):
        if h == hp:
            lam = beta_to_partition(beta)
            if ignore_self_conjugate and is_self_conjugate(lam):
                continue
            out.append(lam)
            if limit is not None and len(out) >= limit:
                break
    out.sort(reverse=True)
    return out


def _verified(witnesses: Sequence[Partition]) -> None:
    vectors = {degree_vector(lam) for lam in witnesses}
    if len(vectors) != 1:
        raise AssertionError("witness partitions do not share one degree vector")


def max_multiplicity(
    n: int,
    ignore_self_conjugate: bool = False,
    threads: int = 1,
    cap: int = DEFAULT_CAP,
    stretch: bool = False,
) -> MultiplicityReport:
    """m(n) with one witness group.

    Pass one tallies partitions per degree; pass two re-derives the members of
    the winning degree only. Ties go to the largest degree.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    check_cap(n, cap, stretch)
    counts = degree_counts(n, ignore_self_conjugate, threads)
    if not counts:
        return MultiplicityReport(n, 0, 0, (), ignore_self_conjugate)
    best = max(counts.values())
    hp = min(h for h, c in counts.items() if c == best)
    witnesses = _witnesses(n, hp, ignore_self_conjugate)
    if len(witnesses) != best:
        raise AssertionError("witness count does not match tally")
    _verified(witnesses)
    return MultiplicityReport(n, best, factorial(n) // hp, tuple(witnesses), ignore_self_conjugate)


def multiplicity_at_least(
    n: int, k: int, ignore_self_conjugate: bool = False
) -> Tuple[bool, Optional[Tuple[Partition, ...]]]:
    """Whether some degree of S_n is shared by ``k`` characters, stopping at the first hit."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    sc_products = set()
    if ignore_self_conjugate:
        sc_products = {hook_multiset(lam).product() for lam in self_conjugate_partitions(n)}
    counts: Dict[int, int] = {}
    hit = None
    for beta, hp in hook_products(n):
        if hp in sc_products and is_self_conjugate(beta_to_partition(beta)):
            continue
        c = counts.get(hp, 0) + 1
        counts[hp] = c
        if c >= k:
            hit = hp
            break
    if hit is None:
        return False, None
    witnesses = _witnesses(n, hit, ignore_self_conjugate, limit=k)
    _verified(witnesses)
    return True, tuple(witnesses)


def avg_cd_ratio(n: int, threads: int = 1) -> Fraction:
    """k(S_n) / |cd(S_n)|: partitions per distinct character degree."""
    if n < 1:
        raise ValueError("n must be at least 1")
    distinct = set()
    for part in map_shards(_distinct_shard, n, threads):
        distinct |= part
    return Fraction(partition_count(n), len(distinct))


def _distinct_shard(n, shard):
    return set(hook_products(n, shard, with_beta=False))


class CycleType:
    """A partition of ``n`` read as the cycle lengths of a permutation."""

    __slots__ = ("partition", "multiplicities")

    def __init__(self, parts):
        self.partition = parts if isinstance(parts, Partition) else Partition(sorted(parts, reverse=True))
        self.multiplicities: Dict[int, int] = dict(Counter(self.partition))

    @classmethod
    def of(cls, n: int, *cycles: int) -> "CycleType":
        """Cycle type with the given nontrivial cycles, padded with fixed points."""
        rest = n - sum(cycles)
        if rest < 0:
            raise ValueError("cycles exceed n")
        return cls(sorted(cycles, reverse=True) + [1] * rest)

    @property
    def n(self) -> int:
        return sum(self.partition)

    def centralizer_order(self) -> int:
        z = 1
        for i, m in self.multiplicities.items():
            z *= i**m * factorial(m)
        return z

    def sign(self) -> int:
        return -1 if (self.n - len(self.partition)) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.partition == other.partition

    def __hash__(self):
        return hash(self.partition)

    def __repr__(self) -> str:
        return f"CycleType({list(self.partition)})"

    def __str__(self) -> str:
        return str(self.partition)


def class_size(t) -> int:
    """Size of the conjugacy class of S_n with cycle type ``t``: ``n!/z(t)``."""
    if not isinstance(t, CycleType):
        t = CycleType(t)
    z = t.centralizer_order()
    size, rem = divmod(factorial(t.n), z)
    assert rem == 0
    return size


def centralizer_orders(n: int) -> Iterator[int]:
    """Yield ``z(t)`` for every cycle type ``t`` of ``n`` (one value per partition)."""
    if n == 0:
        yield 1
        return
    fact = [factorial(i) for i in range(n + 1)]
    stack = [(n + 1, n, 1)]
    while stack:
        bound, rem, z = stack.pop()
        for v in range(min(bound - 1, rem), 0, -1):
            if v == 1:
                yield z * fact[rem]
                continue
            zz, left = z, rem
            for m in range(1, rem // v + 1):
                zz *= v * m
                left -= v
                if left == 0:
                    yield zz
                else:
                    stack.append((v, left, zz))


def avg_cc_ratio(n: int) -> Fraction:
    """k(S_n) / |cc(S_n)|, comparing class sizes exactly."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(partition_count(n), len(set(centralizer_orders(n))))
