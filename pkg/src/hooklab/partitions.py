"""Integer partitions, Young diagram operations and hook lengths.

Partitions are immutable tuples of weakly decreasing positive integers.
Enumeration is streaming and deterministic (reverse-lexicographic), and can
be restricted to a range of largest parts so long scans can be split into
independent shards.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple

__all__ = [
    "Partition",
    "HookMultiset",
    "BoxPosition",
    "parse_partition",
    "enumerate_partitions",
    "partition_count",
    "partition_count_bounded",
    "conjugate",
    "hook_lengths",
    "hook_multiset",
    "hook_fingerprint",
    "removable_boxes",
    "addable_boxes",
    "remove_box",
    "add_box",
    "self_conjugate_defect",
    "is_self_conjugate",
    "contents",
    "self_conjugate_partitions",
]

MAX_PART = 1 << 16


class Partition(tuple):
    """A partition of ``size`` stored as its parts, largest first."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        prev = MAX_PART
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if p > prev:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
            prev = p
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ".".join(map(str, self)) if self else "()"


class BoxPosition(NamedTuple):
    row: int
    column: int


def hook_fingerprint(lengths: Iterable[int]) -> int:
    """128-bit digest of a multiset of hook lengths.

    Additive over the multiset (sum of per-length weights mod 2**128), so it
    can be accumulated box by box during enumeration.
    """
    total = 0
    for h in lengths:
        total += _hook_weight(h)
    return total & _MASK128


_MASK128 = (1 << 128) - 1


@lru_cache(maxsize=None)
def _hook_weight(h: int) -> int:
    digest = hashlib.blake2b(h.to_bytes(4, "little"), digest_size=16, person=b"hooklab-h").digest()
    return int.from_bytes(digest, "little")


@dataclass(frozen=True)
class HookMultiset:
    """Sorted (descending) multiset of hook lengths of a partition."""

    lengths: Tuple[int, ...]
    fingerprint: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths, reverse=True)))
        object.__setattr__(self, "fingerprint", hook_fingerprint(self.lengths))

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def product(self) -> int:
        p = 1
        for h in self.lengths:
            p *= h
        return p


def parse_partition(text: str) -> Partition:
    """Parse the dot-separated literal used on the command line, e.g. ``"4.4.4"``."""
    text = text.strip()
    if text in ("", "()", "0"):
        return Partition(())
    try:
        parts = [int(t) for t in text.split(".")]
    except ValueError:
        raise ValueError(f"bad partition literal {text!r}") from None
    return Partition(parts)


def _desc(n: int, m: int) -> Iterator[Tuple[int, ...]]:
    # Partitions of n with parts <= m, reverse-lexicographic.
    if n == 0:
        yield ()
        return
    m = min(m, n)
    if m < 1:
        return
    q, r = divmod(n, m)
    a = [m] * q
    if r:
        a.append(r)
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        v = a.pop() - 1
        q, r = divmod(ones + 1 + v, v)
        a.extend([v] * q)
        if r:
            a.append(r)


def enumerate_partitions(n: int, shard: Optional[Tuple[int, int]] = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    ``shard=(lo, hi)`` restricts to partitions whose largest part lies in
    ``[lo, hi]``; disjoint shards covering ``1..n`` partition the stream.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if shard is None:
        lo, hi = 1, n
    else:
        lo, hi = shard
        if not 1 <= lo <= hi:
            raise ValueError(f"bad shard {shard}")
    if n == 0:
        if shard is None:
            yield Partition._trusted(())
        return
    make = Partition._trusted
    for top in range(min(hi, n), lo - 1, -1):
        for rest in _desc(n - top, top):
            yield make((top,) + rest)


@lru_cache(maxsize=None)
def partition_count_bounded(n: int, m: int) -> int:
    """Number of partitions of ``n`` with all parts at most ``m``."""
    if n == 0:
        return 1
    if m <= 0:
        return 0
    m = min(m, n)
    # Iterative table avoids deep recursion for large n.
    row = [1] + [0] * n
    for part in range(1, m + 1):
        for s in range(part, n + 1):
            row[s] += row[s - part]
    return row[n]


def partition_count(n: int) -> int:
    return partition_count_bounded(n, n)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    cols = []
    r = len(lam)
    for j in range(1, lam[0] + 1):
        while lam[r - 1] < j:
            r -= 1
        cols.append(r)
    return Partition._trusted(cols)


def is_self_conjugate(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return conjugate(lam) == lam


def hook_lengths(lam: Iterable[int]) -> list:
    """Hook lengths row by row: entry ``[i][j]`` is the hook at box (i+1, j+1)."""
    lam = tuple(lam)
    conj = conjugate(lam)
    return [[(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(lam)]


def hook_multiset(lam: Iterable[int]) -> HookMultiset:
    return HookMultiset(tuple(h for row in hook_lengths(lam) for h in row))


def contents(lam: Iterable[int]) -> int:
    """Sum of contents ``j - i`` over all boxes."""
    total = 0
    for i, row in enumerate(lam):
        total += row * (row - 1) // 2 - i * row
    return total


def removable_boxes(lam: Iterable[int]) -> list:
    lam = tuple(lam)
    r = len(lam)
    return [BoxPosition(i + 1, lam[i]) for i in range(r) if i == r - 1 or lam[i] > lam[i + 1]]


def addable_boxes(lam: Iterable[int]) -> list:
    lam = tuple(lam)
    out = [BoxPosition(i + 1, lam[i] + 1) for i in range(len(lam)) if i == 0 or lam[i - 1] > lam[i]]
    out.append(BoxPosition(len(lam) + 1, 1))
    return out


def remove_box(lam: Iterable[int], box: BoxPosition) -> Partition:
    parts = list(lam)
    i = box.row - 1
    if not (0 <= i < len(parts)) or parts[i] != box.column or (i + 1 < len(parts) and parts[i + 1] == parts[i]):
        raise ValueError(f"{box} is not removable from {tuple(lam)}")
    parts[i] -= 1
    if parts[i] == 0:
        parts.pop()
    return Partition._trusted(parts)


def add_box(lam: Iterable[int], box: BoxPosition) -> Partition:
    parts = list(lam)
    i = box.row - 1
    if i == len(parts) and box.column == 1:
        parts.append(1)
    elif 0 <= i < len(parts) and parts[i] + 1 == box.column and (i == 0 or parts[i - 1] > parts[i]):
        parts[i] += 1
    else:
        raise ValueError(f"{box} is not addable to {tuple(lam)}")
    return Partition._trusted(parts)


def self_conjugate_defect(lam: Iterable[int]) -> int:
    """Fewest boxes to delete from ``lam`` to leave a self-conjugate sub-partition.

    The largest self-conjugate partition inside ``lam`` is the meet of ``lam``
    with its conjugate, taken row by row.
    """
    lam = tuple(lam)
    conj = conjugate(lam)
    meet = sum(min(a, b) for a, b in zip(lam, conj))
    return sum(lam) - meet


def self_conjugate_partitions(n: int) -> Iterator[Partition]:
    """Self-conjugate partitions of ``n``, built from distinct odd diagonal hooks."""

    def distinct_odd(rem, bound):
        if rem == 0:
            yield ()
            return
        h = min(bound, rem)
        if h % 2 == 0:
            h -= 1
        while h >= 1:
            for rest in distinct_odd(rem - h, h - 2):
                yield (h,) + rest
            h -= 2

    for hooks in distinct_odd(n, n):
        # Diagonal hook k has arm = leg = (hooks[k]-1)//2.
        rows = [0] * ((hooks[0] + 1) // 2 if hooks else 0)
        for k, h in enumerate(hooks):
            arm = (h - 1) // 2
            rows[k] += arm + 1
            for i in range(k + 1, k + 1 + arm):
                if i >= len(rows):
                    rows.append(0)
                rows[i] += 1
        yield Partition._trusted(tuple(x for x in rows if x))
