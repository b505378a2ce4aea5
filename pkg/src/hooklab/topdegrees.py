"""Largest character degrees b_1(n) > b_2(n) > ... of S_n and inequalities among them."""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from .partitions import Partition, add_box, addable_boxes, is_self_conjugate, self_conjugate_defect
from .scan import beta_to_partition, hook_products, map_shards

__all__ = [
    "TopDegreeEntry",
    "TopDegreeTable",
    "top_degrees",
    "merge_tables",
    "Clause",
    "InequalityReport",
    "check_inequalities",
    "DefectRow",
    "b1_defect_profile",
    "CLAUSE_I_EXCLUDED",
    "CLAUSE_II_EXCLUDED",
]

CLAUSE_I_EXCLUDED = frozenset({6, 7, 11})
CLAUSE_II_EXCLUDED = frozenset({6, 7, 11, 16, 38})


@dataclass(frozen=True)
class TopDegreeEntry:
    rank: int
    degree: int
    witnesses: Tuple[Partition, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)


@dataclass(frozen=True)
class TopDegreeTable:
    n: int
    entries: Tuple[TopDegreeEntry, ...]

    def degree(self, rank: int) -> int:
        return self.entries[rank - 1].degree

    def witnesses(self, rank: int) -> Tuple[Partition, ...]:
        return self.entries[rank - 1].witnesses

    def ratio(self, rank: int) -> Fraction:
        return Fraction(self.degree(rank), self.degree(1))


def _best_products(n: int, shard, k: int) -> Dict[int, List[tuple]]:
    # The k smallest distinct hook products (= k largest degrees) with witnesses.
    best: List[int] = []
    found: Dict[int, List[tuple]] = {}
    worst = None
    for beta, hp in hook_products(n, shard):
        if worst is not None and hp > worst:
            continue
        bucket = found.get(hp)
        if bucket is not None:
            bucket.append(beta)
            continue
        found[hp] = [beta]
        insort(best, hp)
        if len(best) > k:
            del found[best.pop()]
        if len(best) == k:
            worst = best[-1]
    return found


def merge_tables(parts: List[Dict[int, List[tuple]]], k: int) -> Dict[int, List[tuple]]:
    merged: Dict[int, List[tuple]] = {}
    for part in parts:
        for hp, betas in part.items():
            merged.setdefault(hp, []).extend(betas)
    keep = sorted(merged)[:k]
    return {hp: merged[hp] for hp in keep}


def top_degrees(n: int, k: int = 3, threads: int = 1) -> TopDegreeTable:
    """The ``k`` largest distinct degrees of S_n, each with all of its partitions."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    found = merge_tables(map_shards(_best_products, n, threads, (k,)), k)
    nf = factorial(n)
    entries = []
    for rank, hp in enumerate(sorted(found), 1):
        wit = tuple(sorted((beta_to_partition(b) for b in found[hp]), reverse=True))
        entries.append(TopDegreeEntry(rank, nf // hp, wit))
    return TopDegreeTable(n, tuple(entries))


@dataclass(frozen=True)
class Clause:
    name: str
    applicable: bool
    holds: bool
    lhs: int
    rhs: int

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds


@dataclass(frozen=True)
class InequalityReport:
    n: int
    table: TopDegreeTable
    clauses: Dict[str, Clause]

    @property
    def conjecture_holds(self) -> bool:
        return not any(c.violated for c in self.clauses.values())


def check_inequalities(n: int, table: Optional[TopDegreeTable] = None, threads: int = 1) -> InequalityReport:
    """Evaluate the top-degree inequalities for S_n in exact integer arithmetic.

    ``holds`` is the truth of each inequality; ``applicable`` says whether
    the conjectured statement covers this ``n``. Witness counts include
    conjugates, a self-conjugate partition counting once.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    if table is None or len(table.entries) < 4:
        table = top_degrees(n, 4, threads)
    (b1, c1), (b2, c2), (b3, c3), (b4, c4) = [(e.degree, e.count) for e in table.entries[:4]]
    base = n >= 5 and n not in (6, 7)
    sq1 = b1 * b1
    clauses = {}
    clauses["i"] = Clause("i", base and n not in CLAUSE_I_EXCLUDED, sq1 <= b2 * b2 + b3 * b3, sq1, b2 * b2 + b3 * b3)
    some_repeated = c2 >= 2 or c3 >= 2
    s23 = c2 * b2 * b2 + c3 * b3 * b3
    clauses["ii"] = Clause("ii", base and n not in CLAUSE_II_EXCLUDED and some_repeated, s23 > 2 * sq1, s23, 2 * sq1)
    s234 = s23 + c4 * b4 * b4
    clauses["iii"] = Clause("iii", base and c2 == 1 and c3 == 1, s234 > 2 * sq1, s234, 2 * sq1)
    plain = b2 * b2 + b3 * b3 + b4 * b4
    clauses["iv"] = Clause("iv", base and n >= 62, 2 * sq1 <= plain, 2 * sq1, plain)
    # Sum of squares of all degrees is n!, so the degrees below b_1 contribute n! - c1*b1^2.
    below = factorial(n) - c1 * sq1
    clauses["hhn"] = Clause("hhn", n >= 7, below > 2 * sq1, below, 2 * sq1)
    return InequalityReport(n, table, clauses)


@dataclass(frozen=True)
class DefectRow:
    n: int
    b1: int
    witnesses: Tuple[Partition, ...]
    defects: Tuple[int, ...]
    self_conjugate: Tuple[bool, ...]
    from_previous: Optional[bool]

    @property
    def defect(self) -> int:
        """Defect of the b_1 witnesses (conjugate witnesses share it; the largest is reported)."""
        return max(self.defects)


def _grown_from(prev: Tuple[Partition, ...], current: Tuple[Partition, ...]) -> bool:
    targets = set(current)
    return any(add_box(mu, box) in targets for mu in prev for box in addable_boxes(mu))


def b1_defect_profile(n_min: int, n_max: int, threads: int = 1) -> List[DefectRow]:
    """Self-conjugate defects of the partitions achieving b_1(n), ``n_min <= n <= n_max``.

    ``from_previous`` tells whether some b_1(n) partition is a b_1(n-1)
    partition with one box added (``None`` for n = 1).
    """
    if n_min < 1 or n_max < n_min:
        raise ValueError("bad range")
    rows = []
    prev = top_degrees(n_min - 1, 1, threads).witnesses(1) if n_min > 1 else None
    for n in range(n_min, n_max + 1):
        table = top_degrees(n, 1, threads)
        wit = table.witnesses(1)
        rows.append(
            DefectRow(
                n,
                table.degree(1),
                wit,
                tuple(self_conjugate_defect(w) for w in wit),
                tuple(is_self_conjugate(w) for w in wit),
                None if prev is None else _grown_from(prev, wit),
            )
        )
        prev = wit
    return rows
