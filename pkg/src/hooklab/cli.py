"""Command-line interface: ``hooklab <command> [options]``.

Every command prints a short summary, writes CSV/JSON into ``--out-dir`` and
a ``<command>.manifest.json`` recording how those files were produced.
Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import List, Optional

from . import __version__
from .charvalues import MNEvaluator, ValueQuery, coincidence_groups, count_tuples, mn_value, transposition_value
from .clusters import (
    Cluster,
    DatabaseError,
    PeriodicCluster,
    ClusterError,
    default_database,
    extend_periodic,
    find_clusters,
    verify_database,
)
from .degrees import degree_bigint, degree_vector
from .gln import a_function, evaluate_generic_degree, self_dual_a_pairs
from .multiplicity import (
    DEFAULT_CAP,
    CapExceeded,
    CycleType,
    avg_cc_ratio,
    avg_cd_ratio,
    check_cap,
    max_multiplicity,
    multiplicity_at_least,
)
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    hook_multiset,
    parse_partition,
    partition_count,
    self_conjugate_defect,
)
from .store import Cache, RunManifest, decimal_str, file_digest, fraction_str, write_csv, write_json
from .topdegrees import b1_defect_profile, check_inequalities, top_degrees

CLUSTER_CAP = 60
TOPDEG_CAP = 70


class UsageError(Exception):
    pass


def _plist(parts) -> str:
    return ".".join(map(str, parts)) if parts else "()"


def _types(text: Optional[str], n: int) -> List[CycleType]:
    if not text:
        raise UsageError("--types is required")
    out = []
    for item in text.split(","):
        lam = parse_partition(item)
        if sum(lam) < n:
            # Short literals are padded with fixed points.
            lam = Partition(tuple(lam) + (1,) * (n - sum(lam)))
        if sum(lam) != n:
            raise UsageError(f"cycle type {item} does not fit n={n}")
        out.append(CycleType(lam))
    return out


def _range(args, default_start: int) -> range:
    if args.n is None and args.n_max is None:
        raise UsageError("give --n or --n-max")
    if args.n_max is None:
        return range(args.n, args.n + 1)
    start = args.n if args.n is not None else default_start
    if start > args.n_max:
        raise UsageError("--n exceeds --n-max")
    return range(start, args.n_max + 1)


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


class Context:
    def __init__(self, args, argv):
        self.args = args
        self.out = Path(args.out_dir)
        self.manifest = RunManifest(command=args.command_name, argv=list(argv))
        self.cache = Cache(enabled=not args.no_cache)

    def csv(self, name, header, rows):
        path = write_csv(self.out / name, header, rows)
        self.manifest.add_output(path)
        return path

    def json(self, name, payload):
        payload = dict(payload, manifest=self.manifest.filename)
        path = write_json(self.out / name, payload)
        self.manifest.add_output(path)
        return path

    def finish(self):
        self.manifest.write(self.out)


# --- commands -----------------------------------------------------------------


def cmd_partitions(ctx: Context) -> int:
    a = ctx.args
    if a.action == "count":
        rows = [(n, partition_count(n)) for n in _range(a, 0)]
        for n, c in rows:
            print(f"p({n}) = {c}")
        ctx.csv("partition_counts.csv", ["n", "count"], rows)
        return 0
    n = _need_n(a)
    check_cap(n, CLUSTER_CAP, a.stretch, "partition listings")
    shard = None
    if a.shard:
        lo, _, hi = a.shard.partition(":")
        shard = (int(lo), int(hi or lo))
    parts = [list(p) for p in enumerate_partitions(n, shard)]
    for p in parts:
        print(_plist(p))
    ctx.json(f"partitions-{n}.json", {"n": n, "shard": shard, "partitions": parts})
    return 0


def cmd_degree(ctx: Context) -> int:
    lam = parse_partition(ctx.args.partition)
    v = degree_vector(lam)
    d = degree_bigint(v)
    fact = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in v.exponents) or "1"
    print(f"degree({_plist(lam)}) = {d} = {fact}")
    ctx.json("degree.json", {"partition": list(lam), "degree": str(d), "exponents": {str(p): e for p, e in v.exponents}})
    return 0


def cmd_hooks(ctx: Context) -> int:
    lam = parse_partition(ctx.args.partition)
    h = hook_multiset(lam)
    print(" ".join(map(str, h.lengths)))
    print(f"fingerprint {h.fingerprint:032x}")
    ctx.json("hooks.json", {"partition": list(lam), "hooks": list(h.lengths), "fingerprint": f"{h.fingerprint:032x}"})
    return 0


def cmd_clusters(ctx: Context) -> int:
    a = ctx.args
    if a.action == "verify-db":
        path = Path(a.path or a.db or default_database())
        try:
            report = verify_database(path)
        except DatabaseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        ctx.manifest.database_digest = file_digest(path)
        for line in report.lines():
            print(line)
        print(f"{sum(r.passed for r in report.results)}/{len(report.results)} records pass")
        ctx.csv(
            "verify_db.csv",
            ["line", "size", "period", "order", "passed", "failed_checks"],
            [
                (r.record.line, r.record.size, r.record.period, len(r.record.members), int(r.passed),
                 ";".join(k for k, v in r.checks.items() if not v))
                for r in report.results
            ],
        )
        return 0 if report.passed else 1
    if a.action == "extend":
        if not a.members or a.period is None:
            raise UsageError("clusters extend needs --members and --period")
        members = [parse_partition(m) for m in a.members.split(",")]
        try:
            pc = PeriodicCluster(Cluster.from_members(members), a.period)
            ext = extend_periodic(pc, a.m)
        except ClusterError as exc:
            print(f"not a periodic cluster: {exc}", file=sys.stderr)
            return 1
        print(f"size {ext.size}: " + "  ".join(_plist(m) for m in ext.members))
        ctx.json("extend.json", {"size": ext.size, "period": a.period, "m": a.m, "members": [list(m) for m in ext.members]})
        return 0
    rows, dump = [], []
    for n in _range(a, 1):
        check_cap(n, CLUSTER_CAP, a.stretch, "cluster searches")
        found = find_clusters(n, a.min_order, a.threads)
        top = max((c.order for c in found), default=0)
        rows.append((n, a.min_order, len(found), top))
        print(f"n={n}: {len(found)} clusters of order >= {a.min_order} (largest order {top})")
        if a.verbose:
            for c in found:
                print("  " + "  ".join(_plist(m) for m in c.members))
        dump.extend({"size": n, "order": c.order, "members": [list(m) for m in c.members]} for c in found)
    ctx.csv("clusters.csv", ["n", "min_order", "clusters", "largest_order"], rows)
    ctx.json("clusters.json", {"clusters": dump})
    return 0


def _mmult(ctx: Context, n: int, ignore_sc: bool):
    cached = ctx.cache.get("mmult", n, ignore_sc=ignore_sc)
    if cached is not None:
        return cached["m"], int(cached["degree"]), [tuple(w) for w in cached["witnesses"]]
    rep = max_multiplicity(n, ignore_sc, ctx.args.threads, stretch=ctx.args.stretch)
    value = {"m": rep.max_multiplicity, "degree": str(rep.witness_degree), "witnesses": [list(w) for w in rep.witness_partitions]}
    ctx.cache.put("mmult", n, value, ignore_sc=ignore_sc)
    return rep.max_multiplicity, rep.witness_degree, rep.witness_partitions


def cmd_mmult(ctx: Context) -> int:
    a = ctx.args
    rows, dump = [], []
    for n in _range(a, 2):
        check_cap(n, DEFAULT_CAP, a.stretch)
        m, deg, wit = _mmult(ctx, n, a.ignore_self_conjugate)
        print(f"m({n}) = {m}")
        if a.n_max is None:
            print(f"degree {deg}:")
            for w in wit:
                print("  " + _plist(w))
        rows.append((n, m))
        dump.append({"n": n, "m": m, "degree": str(deg), "witnesses": [list(w) for w in wit]})
    ctx.csv("mmult.csv", ["n", "m"], rows)
    ctx.json("mmult_witnesses.json", {"ignore_self_conjugate": a.ignore_self_conjugate, "rows": dump})
    return 0


def cmd_mmult_atleast(ctx: Context) -> int:
    a = ctx.args
    if a.k is None:
        raise UsageError("--k is required")
    rows = []
    for n in _range(a, 1):
        check_cap(n, DEFAULT_CAP, a.stretch)
        ok, wit = multiplicity_at_least(n, a.k, a.ignore_self_conjugate)
        print(f"n={n}: m(n) >= {a.k}: {'yes' if ok else 'no'}" + (": " + "  ".join(_plist(w) for w in wit) if ok else ""))
        rows.append((n, a.k, int(a.ignore_self_conjugate), int(ok), ";".join(_plist(w) for w in wit or ())))
    ctx.csv("mmult_atleast.csv", ["n", "k", "ignore_self_conjugate", "holds", "witnesses"], rows)
    return 0


def _ratio_rows(values):
    return [(n, decimal_str(r), fraction_str(r)) for n, r in values]


def cmd_avg_cd(ctx: Context) -> int:
    a = ctx.args
    vals = []
    for n in _range(a, 1):
        check_cap(n, DEFAULT_CAP, a.stretch)
        vals.append((n, avg_cd_ratio(n, a.threads)))
        print(f"k(S_{n})/|cd(S_{n})| = {fraction_str(vals[-1][1])} = {decimal_str(vals[-1][1])}")
    ctx.csv("avg_cd.csv", ["n", "ratio", "fraction"], _ratio_rows(vals))
    return 0


def cmd_avg_cc(ctx: Context) -> int:
    a = ctx.args
    vals = []
    for n in _range(a, 1):
        check_cap(n, 90, a.stretch)
        vals.append((n, avg_cc_ratio(n)))
        print(f"k(S_{n})/|cc(S_{n})| = {fraction_str(vals[-1][1])} = {decimal_str(vals[-1][1])}")
    ctx.csv("avg_cc.csv", ["n", "ratio", "fraction"], _ratio_rows(vals))
    return 0


def _table(ctx: Context, n: int, k: int):
    check_cap(n, TOPDEG_CAP, ctx.args.stretch, "top-degree scans")
    cached = ctx.cache.get("topdeg", n, k=k)
    if cached is not None:
        from .topdegrees import TopDegreeEntry, TopDegreeTable

        return TopDegreeTable(n, tuple(
            TopDegreeEntry(e["rank"], int(e["degree"]), tuple(Partition(w) for w in e["witnesses"])) for e in cached
        ))
    table = top_degrees(n, k, ctx.args.threads)
    ctx.cache.put("topdeg", n, [
        {"rank": e.rank, "degree": str(e.degree), "witnesses": [list(w) for w in e.witnesses]} for e in table.entries
    ], k=k)
    return table


def cmd_topdeg(ctx: Context) -> int:
    a = ctx.args
    k = max(a.k or 4, 4)
    rows, dump = [], []
    for n in _range(a, 5):
        if n < 5:
            raise UsageError("topdeg needs n >= 5 (four distinct degrees)")
        t = _table(ctx, n, k)
        shown = a.k or 4
        for e in t.entries[:shown]:
            print(f"n={n} b{e.rank} = {e.degree}  [" + " ".join(_plist(w) for w in e.witnesses) + "]")
        b = [e.degree for e in t.entries[:4]]
        r2, r3 = t.ratio(2), t.ratio(3)
        defect = max(self_conjugate_defect(w) for w in t.witnesses(1))
        rows.append((n, *b, decimal_str(r2), fraction_str(r2), decimal_str(r3), fraction_str(r3),
                     *[e.count for e in t.entries[:4]], defect))
        dump.append({"n": n, "entries": [
            {"rank": e.rank, "degree": str(e.degree), "witnesses": [list(w) for w in e.witnesses]} for e in t.entries[:shown]
        ]})
    ctx.csv(
        "top_degrees.csv",
        ["n", "b1", "b2", "b3", "b4", "b2_over_b1", "b2_over_b1_exact", "b3_over_b1", "b3_over_b1_exact",
         "count_b1", "count_b2", "count_b3", "count_b4", "b1_defect"],
        rows,
    )
    ctx.json("top_degrees.json", {"rows": dump})
    return 0


def cmd_check(ctx: Context) -> int:
    a = ctx.args
    rows, bad = [], []
    for n in _range(a, 5):
        rep = check_inequalities(n, _table(ctx, n, 4))
        cl = rep.clauses
        status = " ".join(f"{k}:{'holds' if c.holds else 'fails'}{'' if c.applicable else '(n/a)'}" for k, c in cl.items())
        print(f"n={n} {status}")
        if not rep.conjecture_holds:
            bad.append(n)
        rows.append((n, *[f"{int(c.holds)}" for c in cl.values()], *[f"{int(c.applicable)}" for c in cl.values()]))
    names = list(rep.clauses)
    ctx.csv("conjectures.csv", ["n"] + [f"{k}_holds" for k in names] + [f"{k}_applicable" for k in names], rows)
    if bad:
        print("applicable clause violated at n = " + ", ".join(map(str, bad)))
        return 1
    return 0


def cmd_defect(ctx: Context) -> int:
    a = ctx.args
    rng = _range(a, 5)
    for n in (rng.start, rng.stop - 1):
        check_cap(n, TOPDEG_CAP, a.stretch, "top-degree scans")
    rows = b1_defect_profile(rng.start, rng.stop - 1, a.threads)
    for r in rows:
        print(f"n={r.n} defect {r.defect} witnesses " + " ".join(_plist(w) for w in r.witnesses)
              + (" self-conjugate" if any(r.self_conjugate) else ""))
    ctx.csv(
        "defect_profile.csv",
        ["n", "b1", "witnesses", "defect", "self_conjugate", "from_previous"],
        [(r.n, r.b1, ";".join(_plist(w) for w in r.witnesses), r.defect, int(any(r.self_conjugate)),
          "" if r.from_previous is None else int(r.from_previous)) for r in rows],
    )
    return 0


def cmd_afun(ctx: Context) -> int:
    lam = parse_partition(ctx.args.partition)
    conj = conjugate(lam)
    a1, a2 = a_function(lam), a_function(conj)
    print(f"a({_plist(lam)}) = {a1}; a({_plist(conj)}) = {a2}")
    ctx.json("afun.json", {"partition": list(lam), "a": a1, "conjugate": list(conj), "a_conjugate": a2})
    return 0


def cmd_a_pairs(ctx: Context) -> int:
    a = ctx.args
    rows, dump = [], []
    for n in _range(a, 1):
        check_cap(n, DEFAULT_CAP, a.stretch)
        count, pairs = self_dual_a_pairs(n)
        print(count if a.n_max is None else f"n={n}: {count}")
        rows.append((n, count))
        if a.json:
            dump.append({"n": n, "pairs": [[list(p), list(q)] for p, q in pairs]})
    ctx.csv("a_pairs.csv", ["n", "pairs"], rows)
    if a.json:
        ctx.json("a_pairs.json", {"rows": dump})
    return 0


def cmd_gdeg_eval(ctx: Context) -> int:
    lam = parse_partition(ctx.args.partition)
    q = ctx.args.q
    v = evaluate_generic_degree(lam, q)
    print(v)
    ctx.json("gdeg_eval.json", {"partition": list(lam), "q": q, "value": str(v)})
    return 0


def cmd_charval(ctx: Context) -> int:
    lam = parse_partition(ctx.args.partition)
    n = sum(lam)
    out = {}
    for t in _types(ctx.args.types, n):
        v = mn_value(lam, t)
        out[_plist(t.partition)] = v
        print(f"chi_{_plist(lam)}({_plist(t.partition)}) = {v}")
    ctx.json("charval.json", {"partition": list(lam), "values": out})
    return 0


def cmd_coincide(ctx: Context) -> int:
    a = ctx.args
    k = a.k or 2
    rows, dump = [], []
    ev = MNEvaluator()
    for n in _range(a, 2):
        check_cap(n, DEFAULT_CAP, a.stretch)
        q = ValueQuery(n, frozenset(_types(a.types, n)), k, a.nonzero)
        groups = coincidence_groups(q, ev)
        ev.clear()
        total = count_tuples(groups, k)
        print(f"n={n}: {total} {k}-tuples")
        for g in groups if a.verbose else ():
            print(f"  degree {g.degree} values {list(g.values)}: " + "  ".join(_plist(m) for m in g.members))
        rows.append((n, len(q.cycle_types), k, total))
        dump.append({"n": n, "groups": [
            {"degree": str(g.degree), "values": [str(v) for v in g.values], "members": [list(m) for m in g.members]}
            for g in groups]})
    ctx.csv("coincidences.csv", ["n", "types", "k", "tuples"], rows)
    if a.json:
        ctx.json("coincidences.json", {"nonzero": a.nonzero, "rows": dump})
    return 0


def emit_figure_rows(kind: int, n_max: int, threads: int = 1):
    if kind == 1:
        return [(n, avg_cd_ratio(n, threads)) for n in range(1, n_max + 1)]
    if kind == 2:
        return [(n, avg_cc_ratio(n)) for n in range(1, n_max + 1)]
    if kind == 3:
        return [(n, top_degrees(n, 3, threads).ratio(3)) for n in range(5, n_max + 1)]
    raise ValueError(f"unknown figure {kind}")


def cmd_emit_figure(ctx: Context) -> int:
    a = ctx.args
    if a.n_max is None:
        raise UsageError("--n-max is required")
    check_cap(a.n_max, DEFAULT_CAP, a.stretch)
    rows = emit_figure_rows(a.kind, a.n_max, a.threads)
    path = ctx.csv(f"figure{a.kind}.csv", ["n", "ratio", "fraction"], _ratio_rows(rows))
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--threads", type=int, default=1, help="worker processes for sharded scans")
    common.add_argument("--out-dir", default="hooklab-out")
    common.add_argument("--stretch", action="store_true", help="allow n above the desk-scale caps")
    common.add_argument("--no-cache", action="store_true", help="ignore the result cache ($HOOKLAB_CACHE_DIR)")
    common.add_argument("--verbose", "-v", action="store_true")

    p = argparse.ArgumentParser(prog="hooklab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hooklab {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help_text, **kw):
        sp = sub.add_parser(name, parents=[common], help=help_text, **kw)
        sp.set_defaults(func=func, command_name=name)
        return sp

    sp = add("partitions", cmd_partitions, "count or list partitions")
    sp.add_argument("action", choices=["count", "list"])
    sp.add_argument("--shard", help="largest-part range lo:hi")

    add("degree", cmd_degree, "character degree by the hook formula").add_argument("partition")
    add("hooks", cmd_hooks, "hook multiset and fingerprint").add_argument("partition")

    sp = add("clusters", cmd_clusters, "find, verify or extend clusters")
    sp.add_argument("action", choices=["find", "verify-db", "extend"])
    sp.add_argument("path", nargs="?", help="database file for verify-db")
    sp.add_argument("--db")
    sp.add_argument("--min-order", type=int, default=2)
    sp.add_argument("--period", type=int)
    sp.add_argument("--members", help="comma-separated partitions, e.g. 6.3.3.2,5.5.2.1.1")
    sp.add_argument("--m", type=int, default=1, help="boxes added to each of the first period rows")

    for name, func, text in (
        ("mmult", cmd_mmult, "maximal degree multiplicity m(n)"),
        ("mmult-atleast", cmd_mmult_atleast, "test m(n) >= k with early exit"),
    ):
        add(name, func, text).add_argument("--ignore-self-conjugate", action="store_true")
    add("avg-cd", cmd_avg_cd, "average character degree multiplicity")
    add("avg-cc", cmd_avg_cc, "average conjugacy class size multiplicity")
    add("topdeg", cmd_topdeg, "largest degrees b_1..b_k with witnesses")
    add("check-conjectures", cmd_check, "top-degree inequalities")
    add("defect-profile", cmd_defect, "self-conjugate defect of b_1 witnesses (from --n to --n-max)")
    add("afun", cmd_afun, "Lusztig a-function of a partition and its conjugate").add_argument("partition")
    add("a-pairs", cmd_a_pairs, "pairs {lam, lam'} with a(lam) = a(lam')").add_argument("--json", action="store_true")
    sp = add("gdeg-eval", cmd_gdeg_eval, "evaluate a unipotent generic degree at q")
    sp.add_argument("partition")
    sp.add_argument("--q", type=int, default=2)
    sp = add("charval", cmd_charval, "character values by Murnaghan-Nakayama")
    sp.add_argument("partition")
    sp.add_argument("--types", required=True)
    sp = add("coincide", cmd_coincide, "characters with coinciding degree and values")
    sp.add_argument("--types", required=True)
    sp.add_argument("--nonzero", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp = add("emit-figure", cmd_emit_figure, "figure data as CSV")
    sp.add_argument("kind", type=int, choices=[1, 2, 3])
    return p


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = Context(args, argv)
    ctx.manifest.caps = {"default": DEFAULT_CAP, "clusters": CLUSTER_CAP, "topdeg": TOPDEG_CAP, "stretch": args.stretch}
    if getattr(args, "db", None) and Path(args.db).exists():
        ctx.manifest.database_digest = file_digest(args.db)
    try:
        code = args.func(ctx)
    except (UsageError, CapExceeded) as exc:
        parser.print_usage(sys.stderr)
        print(f"hooklab: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"hooklab: error: {exc}", file=sys.stderr)
        return 2
    ctx.finish()
    return code


if __name__ == "__main__":
    sys.exit(main())
