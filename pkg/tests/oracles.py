"""Slow, obviously-correct reference implementations used by the tests.

Nothing here imports hooklab: every function works from the Young diagram
directly so it can serve as an independent check.
"""

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial


def partitions_naive(n, largest=None):
    """All partitions of n as tuples, by plain recursion."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_naive(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def pentagonal_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * pentagonal_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * pentagonal_count(n - g2)
        k += 1
    return total


def cells(lam):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def transpose(lam):
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def hooks_naive(lam):
    """Hook length of each box: boxes to the right + boxes below + 1."""
    col = transpose(lam)
    return sorted(((lam[i] - j - 1) + (col[j] - i - 1) + 1 for i, j in cells(lam)), reverse=True)


def degree_naive(lam):
    prod = 1
    for h in hooks_naive(lam):
        prod *= h
    return factorial(sum(lam)) // prod


def contained(mu, lam):
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def defect_brute(lam):
    """Fewest boxes to delete from lam to leave a self-conjugate sub-partition."""
    n = sum(lam)
    best = n
    for k in range(n + 1):
        for mu in partitions_naive(k):
            if transpose(mu) == mu and contained(mu, lam):
                best = min(best, n - k)
    return best


def clusters_sort_scan(n):
    """Hook-multiset classes of size >= 2, grouped by sorting on the multiset."""
    keyed = sorted((tuple(hooks_naive(lam)), lam) for lam in partitions_naive(n))
    groups, i = [], 0
    while i < len(keyed):
        j = i
        while j < len(keyed) and keyed[j][0] == keyed[i][0]:
            j += 1
        if j - i >= 2:
            groups.append(sorted((lam for _, lam in keyed[i:j]), reverse=True))
        i = j
    return sorted(groups, reverse=True)


def rim_hook_removals(lam, k):
    """(leg length, remaining partition) for every rim hook of length k, read off the diagram."""
    lam = list(lam)
    col = transpose(lam)
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            if (row - j) + (col[j] - i) - 1 != k:
                continue
            leg = col[j] - i - 1
            new = lam[:]
            for r in range(i, i + leg):
                new[r] = lam[r + 1] - 1
            new[i + leg] = j
            out.append((leg, tuple(x for x in new if x)))
    return out


def mn_naive(lam, cycles):
    """Character value by rim-hook removal, cycles taken in the given order."""
    cycles = [c for c in cycles if c > 1]
    if not cycles:
        return degree_naive(lam)
    k, rest = cycles[0], cycles[1:]
    return sum((-1) ** leg * mn_naive(mu, rest) for leg, mu in rim_hook_removals(lam, k))


def cycle_type_of(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def class_sizes_brute(n):
    """Conjugacy class sizes of S_n by counting permutations (n <= 7)."""
    return Counter(cycle_type_of(p) for p in permutations(range(n)))


def a_naive(lam):
    """a-function as the sum of the row index over all boxes (rows from 0)."""
    return sum(i for i, _ in cells(lam))


def generic_degree_poly(lam):
    """Generic degree as an exact rational function evaluator."""
    n = sum(lam)
    a = a_naive(lam)
    hooks = hooks_naive(lam)

    def at(q):
        num = Fraction(q) ** a
        for i in range(1, n + 1):
            num *= q**i - 1
        for h in hooks:
            num /= q**h - 1
        return num

    return at


def degree_multiplicities(n, ignore_self_conjugate=False):
    counts = defaultdict(list)
    for lam in partitions_naive(n):
        if ignore_self_conjugate and transpose(lam) == lam:
            continue
        counts[degree_naive(lam)].append(lam)
    return counts
