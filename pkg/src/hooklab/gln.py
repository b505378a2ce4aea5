"""Unipotent characters of GL_n(q): Lusztig's a-function and generic degrees.

The generic degree of the unipotent character labelled by ``lam`` is

    q^a(lam) * prod_{i=1..n} (q^i - 1) / prod_{h in H(lam)} (q^h - 1)

so two partitions have the same generic degree exactly when they share both
the hook multiset and the a-value. Degrees are compared through that pair
rather than by expanding polynomials.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .clusters import find_clusters
from .partitions import HookMultiset, Partition, conjugate, enumerate_partitions, hook_multiset

__all__ = [
    "GenericDegreeSignature",
    "a_function",
    "a_function_by_columns",
    "self_dual_a_pairs",
    "generic_degree_signature",
    "evaluate_generic_degree",
    "signature_coincidences",
]


def a_function(lam: Iterable[int]) -> int:
    """``sum (i - 1) * lam_i`` over rows."""
    return sum(i * x for i, x in enumerate(lam))


def a_function_by_columns(lam: Iterable[int]) -> int:
    """The same value summed down columns: ``sum C(lam'_j, 2)``."""
    return sum(c * (c - 1) // 2 for c in conjugate(lam))


@dataclass(frozen=True)
class GenericDegreeSignature:
    a_value: int
    hooks: HookMultiset
    n: int


def generic_degree_signature(lam: Iterable[int]) -> GenericDegreeSignature:
    lam = tuple(lam)
    return GenericDegreeSignature(a_function(lam), hook_multiset(lam), sum(lam))


def evaluate_generic_degree(lam: Iterable[int], q: int) -> int:
    """The generic degree of ``lam`` at an integer ``q >= 2``, exactly."""
    if q < 2:
        raise ValueError("q must be at least 2")
    lam = tuple(lam)
    n = sum(lam)
    num = q ** a_function(lam)
    for i in range(1, n + 1):
        num *= q**i - 1
    den = 1
    for h in hook_multiset(lam):
        den *= q**h - 1
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"generic degree of {lam} at q={q} is not an integer")
    return value


def self_dual_a_pairs(n: int) -> Tuple[int, List[Tuple[Partition, Partition]]]:
    """Unordered pairs ``{lam, lam'}`` with ``lam != lam'`` and ``a(lam) == a(lam')``.

    Each pair is listed once, larger partition (reverse-lex) first.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs = []
    for lam in enumerate_partitions(n):
        # a(lam') is the column sum of lam.
        a_row = 0
        a_col = 0
        for i, x in enumerate(lam):
            a_row += i * x
            a_col += x * (x - 1) // 2
        if a_row == a_col:
            conj = conjugate(lam)
            if lam > conj:
                pairs.append((lam, conj))
    return len(pairs), pairs


def signature_coincidences(n: int) -> List[Tuple[Partition, ...]]:
    """Groups of two or more partitions of ``n`` with identical generic degree."""
    groups = []
    for cluster in find_clusters(n, 2):
        by_a: Dict[int, List[Partition]] = defaultdict(list)
        for lam in cluster.members:
            by_a[a_function(lam)].append(lam)
        groups.extend(tuple(ms) for ms in by_a.values() if len(ms) > 1)
    groups.sort(reverse=True)
    return groups
