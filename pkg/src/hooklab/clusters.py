"""Clusters of partitions with identical hook multisets, and periodic clusters.

A cluster of size ``n`` is a set of partitions of ``n`` sharing one hook
multiset; its order is the number of members. A cluster is periodic of
period ``p`` when adding ``m`` boxes to each of the first ``p`` rows of every
member gives a cluster again for every ``m >= 0``. Members shorter than
``p`` rows are padded with empty rows, so extension can create new rows.

Periodicity is certified by two checks: the members with their first ``p``
rows deleted must form a cluster, and the multisets
``{(lam_i - lam_j) - (i - j) : 1 <= i < j <= p}`` must agree across
members.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .partitions import HookMultiset, Partition, hook_multiset
from .scan import beta_to_partition, hook_fingerprints, map_shards

__all__ = [
    "Cluster",
    "PeriodicCluster",
    "ClusterError",
    "DatabaseError",
    "ClusterRecord",
    "RecordCheck",
    "DatabaseReport",
    "find_clusters",
    "max_cluster_order",
    "verify_periodic",
    "extend_members",
    "extend_periodic",
    "load_database",
    "verify_record",
    "verify_database",
    "append_record",
    "EXTENSION_CHECKS",
    "default_database",
]

EXTENSION_CHECKS = range(6)


class ClusterError(ValueError):
    pass


class DatabaseError(ValueError):
    """Malformed cluster database record."""

    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _sort_members(members: Iterable[Sequence[int]]) -> Tuple[Partition, ...]:
    return tuple(sorted((Partition(m) for m in members), reverse=True))


@dataclass(frozen=True)
class Cluster:
    size: int
    members: Tuple[Partition, ...]
    shared_hooks: HookMultiset = field(compare=False, repr=False)

    def __post_init__(self):
        if len(self.members) < 2:
            raise ClusterError("a cluster needs at least two members")
        if len(set(self.members)) != len(self.members):
            raise ClusterError("cluster members must be distinct")
        for m in self.members:
            if sum(m) != self.size:
                raise ClusterError(f"{m} is not a partition of {self.size}")
            if hook_multiset(m) != self.shared_hooks:
                raise ClusterError(f"{m} does not have the shared hook multiset")

    @classmethod
    def from_members(cls, members: Iterable[Sequence[int]]) -> "Cluster":
        members = _sort_members(members)
        if not members:
            raise ClusterError("empty cluster")
        return cls(sum(members[0]), members, hook_multiset(members[0]))

    @property
    def order(self) -> int:
        return len(self.members)


def _count_fingerprints(n: int, shard):
    return Counter(fp for _, fp in hook_fingerprints(n, shard))


def _collect(n: int, shard, wanted):
    out = defaultdict(list)
    for beta, fp in hook_fingerprints(n, shard):
        if fp in wanted:
            out[fp].append(beta_to_partition(beta))
    return out


def find_clusters(n: int, min_order: int = 2, threads: int = 1) -> List[Cluster]:
    """All maximal clusters of size ``n`` with at least ``min_order`` members.

    Pass one counts partitions per hook fingerprint; pass two gathers the
    members of fingerprints seen ``min_order`` or more times, and groups them
    by their exact hook multisets so fingerprint collisions cannot merge
    clusters.
    """
    if n < 1 or min_order < 2:
        raise ValueError("need n >= 1 and min_order >= 2")
    counts: Counter = Counter()
    for part in map_shards(_count_fingerprints, n, threads):
        counts.update(part)
    wanted = {fp for fp, c in counts.items() if c >= min_order}
    del counts
    groups = defaultdict(list)
    for part in map_shards(_collect, n, threads, (wanted,)):
        for fp, members in part.items():
            groups[fp].extend(members)
    clusters = []
    for members in groups.values():
        exact = defaultdict(list)
        for m in members:
            exact[hook_multiset(m)].append(m)
        for hooks, ms in exact.items():
            if len(ms) >= min_order:
                clusters.append(Cluster(n, _sort_members(ms), hooks))
    clusters.sort(key=lambda c: c.members, reverse=True)
    return clusters


def max_cluster_order(n: int) -> int:
    """Largest number of partitions of ``n`` sharing a hook multiset."""
    counts = Counter(fp for _, fp in hook_fingerprints(n))
    top = max(counts.values())
    if top == 1:
        return 1
    return max(c.order for c in find_clusters(n, top))


def _pad(lam: Sequence[int], p: int) -> List[int]:
    lam = list(lam)
    return lam + [0] * (p - len(lam)) if len(lam) < p else lam


def _difference_multiset(lam: Sequence[int], p: int) -> Counter:
    head = _pad(lam, p)[:p]
    return Counter((head[i] - head[j]) - (i - j) for i in range(p) for j in range(i + 1, p))


def verify_periodic(members: Iterable[Sequence[int]], p: int) -> bool:
    """Check both periodicity criteria for period ``p``.

    Accepts a :class:`Cluster` or any collection of partitions.
    """
    if p < 1:
        raise ValueError("period must be at least 1")
    if isinstance(members, Cluster):
        members = members.members
    members = [tuple(m) for m in members]
    if len(members) < 2:
        return False
    tails = {hook_multiset(m[p:]) for m in members}
    if len(tails) != 1:
        return False
    first = _difference_multiset(members[0], p)
    return all(_difference_multiset(m, p) == first for m in members[1:])


def extend_members(members: Iterable[Sequence[int]], p: int, m: int) -> Tuple[Partition, ...]:
    """Add ``m`` boxes to each of the first ``p`` (zero-padded) rows of every member."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = []
    for lam in members:
        padded = _pad(lam, p)
        grown = [x + m for x in padded[:p]] + padded[p:]
        out.append(Partition(x for x in grown if x))
    return tuple(out)


@dataclass(frozen=True)
class PeriodicCluster:
    base: Cluster
    period: int

    def __post_init__(self):
        if not verify_periodic(self.base, self.period):
            raise ClusterError(f"cluster fails the period-{self.period} criteria")
        for m in EXTENSION_CHECKS:
            extend_periodic(self, m)

    def extension_size(self, m: int) -> int:
        return self.base.size + m * self.period


def extend_periodic(pc: PeriodicCluster, m: int) -> Cluster:
    """The cluster of size ``base.size + m * period`` obtained by extension."""
    return Cluster.from_members(extend_members(pc.base.members, pc.period, m))


# --- database ---------------------------------------------------------------


@dataclass(frozen=True)
class ClusterRecord:
    size: int
    period: int
    members: Tuple[Partition, ...]
    source: str
    line: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {"size": self.size, "period": self.period, "members": [list(m) for m in self.members], "source": self.source},
            separators=(", ", ": "),
        )


@dataclass
class RecordCheck:
    record: ClusterRecord
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class DatabaseReport:
    path: str
    results: List[RecordCheck]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> List[str]:
        out = []
        for r in self.results:
            rec = r.record
            status = "PASS" if r.passed else "FAIL"
            failed = [k for k, v in r.checks.items() if not v]
            detail = "" if not failed else " failed: " + ",".join(failed)
            out.append(f"{status} line {rec.line}: size {rec.size} period {rec.period} order {len(rec.members)} ({rec.source}){detail}")
        return out


def _parse_record(obj, path, line: int) -> ClusterRecord:
    if not isinstance(obj, dict):
        raise DatabaseError(path, line, "record must be a JSON object")
    for key, kind in (("size", int), ("period", int), ("members", list), ("source", str)):
        if key not in obj:
            raise DatabaseError(path, line, f"missing field {key!r}")
        if not isinstance(obj[key], kind) or (kind is int and isinstance(obj[key], bool)):
            raise DatabaseError(path, line, f"field {key!r} must be {kind.__name__}")
    if obj["period"] < 1:
        raise DatabaseError(path, line, "period must be at least 1")
    members = []
    for raw in obj["members"]:
        if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
            raise DatabaseError(path, line, f"member {raw!r} is not a list of integers")
        try:
            members.append(Partition(raw))
        except ValueError as exc:
            raise DatabaseError(path, line, f"member {raw!r}: {exc}") from None
    return ClusterRecord(obj["size"], obj["period"], tuple(members), obj["source"], line)


def load_database(path) -> List[ClusterRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_no, text in enumerate(fh, 1):
            text = text.strip()
            if not text:
                continue
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise DatabaseError(path, line_no, f"invalid JSON: {exc.msg}") from None
            records.append(_parse_record(obj, path, line_no))
    return records


def verify_record(rec: ClusterRecord) -> RecordCheck:
    members = rec.members
    hooks = [hook_multiset(m) for m in members]
    checks = {
        "order": len(members) >= 2 and len(set(members)) == len(members),
        "size": all(sum(m) == rec.size for m in members),
        "hooks": len(set(hooks)) == 1,
        "criteria": verify_periodic(members, rec.period),
    }
    ok = True
    # Extensions are checked against exact hook multisets, not the criteria.
    for m in EXTENSION_CHECKS:
        grown = extend_members(members, rec.period, m)
        ext = [hook_multiset(g) for g in grown]
        if len(set(ext)) != 1 or len(set(grown)) != len(grown) or any(sum(g) != rec.size + m * rec.period for g in grown):
            ok = False
            break
    checks["extensions"] = ok
    return RecordCheck(rec, checks)


def verify_database(path) -> DatabaseReport:
    return DatabaseReport(str(path), [verify_record(r) for r in load_database(path)])


def append_record(path, members: Iterable[Sequence[int]], period: int, source: str) -> ClusterRecord:
    """Append one periodic cluster to a JSON-lines database after verifying it."""
    cluster = Cluster.from_members(members)
    PeriodicCluster(cluster, period)
    rec = ClusterRecord(cluster.size, period, cluster.members, source)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(rec.to_json() + "\n")
    return rec


def default_database() -> Path:
    return Path(__file__).with_name("data") / "periodic_clusters.jsonl"
