"""Character values of S_n: Murnaghan-Nakayama recursion and coincidence searches."""

from __future__ import annotations

from collections import OrderedDict, defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .multiplicity import CycleType
from .partitions import Partition, contents, hook_multiset
from .scan import beta_to_partition, hook_products

__all__ = [
    "border_strips",
    "MNEvaluator",
    "mn_value",
    "transposition_value",
    "ValueQuery",
    "CoincidenceGroup",
    "coincidence_groups",
    "coincidence_search",
    "count_tuples",
]


def border_strips(lam: Sequence[int], k: int) -> List[Tuple[int, Partition]]:
    """All ways to remove a border strip of ``k`` boxes: ``(sign, remaining partition)``.

    The sign is ``(-1)**(rows spanned - 1)``.
    """
    r = len(lam)
    beta = [lam[i] + r - 1 - i for i in range(r)]
    present = set(beta)
    out = []
    for idx, b in enumerate(beta):
        c = b - k
        if c < 0 or c in present:
            continue
        # Beads strictly between c and b are the rows the strip passes through.
        height = sum(1 for x in beta if c < x < b)
        nb = sorted([x for x in beta if x != b] + [c], reverse=True)
        mu = tuple(x - (r - 1 - i) for i, x in enumerate(nb))
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        out.append((-1 if height % 2 else 1, Partition._trusted(mu)))
    return out


class MNEvaluator:
    """Memoised Murnaghan-Nakayama evaluation.

    Cycles are stripped largest first; once only fixed points remain the
    hook formula finishes the job. The memo holds at most ``max_entries``
    results and evicts least recently used ones.
    """

    def __init__(self, max_entries: int = 1 << 18):
        self.max_entries = max_entries
        self._memo: "OrderedDict[tuple, int]" = OrderedDict()

    def value(self, lam: Sequence[int], t) -> int:
        cycles = t.partition if isinstance(t, CycleType) else tuple(sorted(t, reverse=True))
        if sum(lam) != sum(cycles):
            raise ValueError(f"partition of {sum(lam)} against cycle type of {sum(cycles)}")
        nontrivial = tuple(c for c in cycles if c > 1)
        return self._chi(tuple(lam), nontrivial)

    def _chi(self, lam: tuple, cycles: tuple) -> int:
        if not cycles:
            return factorial(sum(lam)) // hook_multiset(lam).product()
        key = (lam, cycles)
        memo = self._memo
        hit = memo.get(key)
        if hit is not None:
            memo.move_to_end(key)
            return hit
        k, rest = cycles[0], cycles[1:]
        total = 0
        for sign, mu in border_strips(lam, k):
            total += sign * self._chi(tuple(mu), rest)
        memo[key] = total
        if len(memo) > self.max_entries:
            memo.popitem(last=False)
        return total

    def clear(self) -> None:
        self._memo.clear()


_default = MNEvaluator()


def mn_value(lam: Sequence[int], t) -> int:
    """``chi_lam`` on the class of cycle type ``t`` (a :class:`CycleType` or a sequence)."""
    return _default.value(lam, t)


def transposition_value(lam: Sequence[int], deg: int = None) -> int:
    """``chi_lam`` on a transposition: ``deg * (sum of contents) / C(n, 2)``."""
    lam = tuple(lam)
    n = sum(lam)
    if n < 2:
        raise ValueError("transpositions need n >= 2")
    if deg is None:
        deg = factorial(n) // hook_multiset(lam).product()
    value, rem = divmod(deg * contents(lam), comb(n, 2))
    if rem:
        raise ArithmeticError(f"non-integral transposition value for {lam}")
    return value


@dataclass(frozen=True)
class ValueQuery:
    n: int
    cycle_types: FrozenSet[CycleType]
    tuple_size: int = 2
    require_nonzero: bool = True

    def __post_init__(self):
        if self.tuple_size < 2:
            raise ValueError("tuple_size must be at least 2")
        object.__setattr__(self, "cycle_types", frozenset(CycleType(t) if not isinstance(t, CycleType) else t for t in self.cycle_types))
        for t in self.cycle_types:
            if t.n != self.n:
                raise ValueError(f"{t} is not a cycle type of {self.n}")

    def ordered_types(self) -> List[CycleType]:
        # Identity excluded: the degree is always compared.
        return sorted((t for t in self.cycle_types if any(c > 1 for c in t.partition)), key=lambda t: t.partition, reverse=True)


@dataclass(frozen=True)
class CoincidenceGroup:
    degree: int
    values: Tuple[int, ...]
    members: Tuple[Partition, ...]


def coincidence_groups(query: ValueQuery, evaluator: MNEvaluator = None) -> List[CoincidenceGroup]:
    """Maximal sets of partitions sharing the degree and every value on the query's classes.

    Only groups with at least ``tuple_size`` members are returned.
    """
    n = query.n
    types = query.ordered_types()
    evaluator = evaluator or MNEvaluator()
    nf = factorial(n)
    groups: Dict[tuple, List[Partition]] = defaultdict(list)
    for beta, hp in hook_products(n):
        lam = beta_to_partition(beta)
        deg = nf // hp
        vals = []
        for t in types:
            if t.partition[0] == 2 and (len(t.partition) == 1 or t.partition[1] == 1):
                v = transposition_value(lam, deg)
            else:
                v = evaluator.value(lam, t)
            if query.require_nonzero and v == 0:
                break
            vals.append(v)
        else:
            groups[(deg,) + tuple(vals)].append(lam)
    out = []
    for key, members in groups.items():
        if len(members) >= query.tuple_size:
            out.append(CoincidenceGroup(key[0], key[1:], tuple(sorted(members, reverse=True))))
    out.sort(key=lambda g: g.members, reverse=True)
    return out


def coincidence_search(query: ValueQuery, evaluator: MNEvaluator = None) -> List[Tuple[Partition, ...]]:
    """All unordered ``tuple_size``-sets of distinct partitions with coinciding values.

    A set and its conjugate set are distinct results.
    """
    out = []
    for g in coincidence_groups(query, evaluator):
        out.extend(combinations(g.members, query.tuple_size))
    return out


def count_tuples(groups: Iterable[CoincidenceGroup], k: int) -> int:
    return sum(comb(len(g.members), k) for g in groups)
