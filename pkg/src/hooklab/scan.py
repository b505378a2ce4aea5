"""Fast exhaustive scans over the partitions of ``n``.

Partitions are grown from the bottom row upward. Putting a new row on top of
a diagram leaves every existing hook length unchanged, so the hook product
(and the additive hook fingerprint) of a partition is its parent's value
times (plus) the contribution of the new top row alone.

Internally a partition with ``r`` rows is carried as its first-column hook
lengths ``beta[i] = lam[i] + r - 1 - i`` (descending). With ``l`` the
first-column hook of a new top row, the new row's hooks are
``{l - k : 0 <= k < l, k not in beta}``, whose product is
``l! / prod(l - b for b in beta)``.

Scans are sharded by largest part: shard ``(lo, hi)`` covers partitions whose
top row has length in ``[lo, hi]``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .partitions import Partition, _hook_weight, _MASK128, partition_count_bounded

Shard = Tuple[int, int]


def beta_to_partition(beta: Sequence[int]) -> Partition:
    r = len(beta)
    return Partition._trusted(tuple(b - (r - 1 - i) for i, b in enumerate(beta)))


def hook_products(n: int, shard: Optional[Shard] = None, with_beta: bool = True) -> Iterator:
    """Yield ``(beta, prod(H(lam)))`` for every partition ``lam`` of ``n``.

    With ``with_beta=False`` only the products are yielded. Convert ``beta``
    with :func:`beta_to_partition` when the parts are needed.
    """
    if n == 0:
        if shard is None:
            yield ((), 1) if with_beta else 1
        return
    lo, hi = shard if shard is not None else (1, n)
    fact = [factorial(i) for i in range(2 * n + 2)]
    stack = [(n, 1, (), 1)]
    pop = stack.pop
    push = stack.append
    while stack:
        rem, low, beta, hp = pop()
        r = len(beta)
        for x in range(low, min(hi, rem) + 1):
            left = rem - x
            if left and (left < x or left < lo):
                # Later rows are >= x and the top row must reach lo: only
                # finishing with a single row of length rem is still possible.
                if rem <= hi:
                    x = rem
                    left = 0
                else:
                    break
            l = x + r
            d = 1
            for b in beta:
                d *= l - b
            h = hp * (fact[l] // d)
            if left == 0:
                if x >= lo:
                    yield ((l,) + beta, h) if with_beta else h
                break
            push((left, x, (l,) + beta, h))


def _weights(n: int):
    w = [0] + [_hook_weight(h) for h in range(1, 2 * n + 2)]
    prefix = [0] * len(w)
    for h in range(1, len(w)):
        prefix[h] = prefix[h - 1] + w[h]
    return w, prefix


def hook_fingerprints(n: int, shard: Optional[Shard] = None) -> Iterator[Tuple[tuple, int]]:
    """Yield ``(beta, fingerprint of H(lam))`` for every partition of ``n``.

    The fingerprint equals :func:`hooklab.partitions.hook_fingerprint`.
    """
    if n == 0:
        if shard is None:
            yield (), 0
        return
    lo, hi = shard if shard is not None else (1, n)
    w, prefix = _weights(n)
    stack = [(n, 1, (), 0)]
    pop = stack.pop
    push = stack.append
    while stack:
        rem, low, beta, fp = pop()
        r = len(beta)
        for x in range(low, min(hi, rem) + 1):
            left = rem - x
            if left and (left < x or left < lo):
                if rem <= hi:
                    x = rem
                    left = 0
                else:
                    break
            l = x + r
            f = fp + prefix[l]
            for b in beta:
                f -= w[l - b]
            if left == 0:
                if x >= lo:
                    yield (l,) + beta, f & _MASK128
                break
            push((left, x, (l,) + beta, f))


def balanced_shards(n: int, count: int) -> List[Shard]:
    """Split largest-part range ``1..n`` into at most ``count`` shards of similar size."""
    if n <= 0:
        return [(1, 1)]
    sizes = [partition_count_bounded(n - top, top) for top in range(1, n + 1)]
    total = sum(sizes)
    target = total / max(1, count)
    shards: List[Shard] = []
    start, acc = 1, 0
    for top in range(1, n + 1):
        acc += sizes[top - 1]
        if acc >= target and len(shards) < count - 1:
            shards.append((start, top))
            start, acc = top + 1, 0
    if start <= n:
        shards.append((start, n))
    return shards


def map_shards(func: Callable, n: int, threads: int = 1, extra: tuple = ()) -> list:
    """Run ``func(n, shard, *extra)`` over balanced shards, in worker processes if ``threads > 1``.

    Results come back in shard order, so merges are deterministic.
    """
    shards = balanced_shards(n, threads)
    if threads <= 1 or len(shards) == 1:
        return [func(n, s, *extra) for s in shards]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(func, n, s, *extra) for s in shards]
        return [f.result() for f in futures]
