from fractions import Fraction
from math import factorial

from hooklab.partitions import conjugate, is_self_conjugate, self_conjugate_defect
from hooklab.topdegrees import b1_defect_profile, check_inequalities, merge_tables, top_degrees

import shared
from oracles import degree_multiplicities


def test_examples():
    t5 = top_degrees(5, 1)
    assert t5.degree(1) == 6 and t5.witnesses(1) == ((3, 1, 1),)
    t6 = top_degrees(6, 3)
    assert t6.degree(1) == 16 and t6.witnesses(1) == ((3, 2, 1),)
    assert t6.degree(2) == 10 and set(t6.witnesses(2)) == {(4, 1, 1), (3, 1, 1, 1)}
    assert t6.degree(3) == 9 and set(t6.witnesses(3)) == {(4, 2), (2, 2, 1, 1)}
    assert top_degrees(5, 3).ratio(3) == Fraction(4, 6)


def test_unique_self_conjugate_at_19():
    t = top_degrees(19, 3)
    for rank in (2, 3):
        (w,) = t.witnesses(rank)
        assert is_self_conjugate(w)


def test_against_full_sort():
    for n in range(1, 26):
        groups = degree_multiplicities(n)
        ordered = sorted(groups, reverse=True)
        for k in (1, 3, 10):
            t = top_degrees(n, k)
            assert [e.degree for e in t.entries] == ordered[:k]
            for e in t.entries:
                assert sorted(e.witnesses) == sorted(groups[e.degree])


def test_witnesses_closed_under_conjugation():
    for n in range(5, 40):
        for e in shared.table(n).entries:
            ws = set(e.witnesses)
            assert {conjugate(w) for w in ws} == ws


def test_shard_merge_is_consistent():
    assert top_degrees(30, 4, threads=2) == top_degrees(30, 4)
    assert merge_tables([], 2) == {}


def test_clause_examples():
    assert check_inequalities(11, shared.table(11)).clauses["i"].holds is False
    assert check_inequalities(30, shared.table(30)).clauses["iv"].holds is False
    assert check_inequalities(7, shared.table(7)).clauses["hhn"].holds is True


def test_hhn_two_ways():
    for n in range(7, 21):
        groups = degree_multiplicities(n)
        b1 = max(groups)
        direct = sum(d * d * len(ws) for d, ws in groups.items() if d < b1)
        rep = check_inequalities(n, shared.table(n))
        assert rep.clauses["hhn"].lhs == direct
        assert direct + len(groups[b1]) * b1 * b1 == factorial(n)


def test_ratio_order():
    for n in range(5, 40):
        t = shared.table(n)
        assert t.ratio(2) >= t.ratio(3)


def test_defect_profile_small():
    rows = b1_defect_profile(5, 20)
    assert [r.n for r in rows] == list(range(5, 21))
    for r in rows:
        assert r.defect == max(self_conjugate_defect(w) for w in r.witnesses)
        assert r.from_previous is not None
        assert len(set(r.defects)) == 1
    assert b1_defect_profile(1, 1)[0].from_previous is None
