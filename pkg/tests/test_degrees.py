import random
from math import factorial

import pytest

from hooklab.degrees import (
    DegreeVector,
    PrimeSieve,
    compare_degrees,
    degree,
    degree_bigint,
    degree_vector,
    legendre_exponent,
)
from hooklab.partitions import add_box, conjugate, enumerate_partitions, remove_box, removable_boxes

from oracles import degree_naive


def test_sieve():
    assert PrimeSieve(30).primes == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert PrimeSieve(1).primes == ()
    assert PrimeSieve(400).factor(360) == {2: 3, 3: 2, 5: 1}


def test_legendre():
    for n in range(30):
        f = factorial(n)
        for p in (2, 3, 5, 7):
            e = legendre_exponent(n, p)
            assert f % p**e == 0 and f % p ** (e + 1) != 0


def test_examples():
    assert degree_vector((9,)).exponents == ()
    assert degree_bigint(degree_vector((9,))) == 1
    v = degree_vector((4, 4, 4))
    assert v.as_dict() == {2: 1, 3: 1, 7: 1, 11: 1}
    assert degree_bigint(v) == 462
    assert degree((7, 1, 1, 1, 1, 1)) == 462
    assert degree((3, 2, 1)) == 16


def test_vector_validation():
    with pytest.raises(ValueError):
        DegreeVector(5, ((7, 1),))
    with pytest.raises(ValueError):
        DegreeVector(5, ((2, -1),))
    with pytest.raises(ValueError):
        degree_vector((4, 4, 4), PrimeSieve(11))


def test_hook_formula_oracle():
    for n in range(13):
        sieve = PrimeSieve(max(n, 1))
        for lam in enumerate_partitions(n):
            v = degree_vector(lam, sieve)
            assert all(e > 0 and p <= n for p, e in v.exponents)
            assert degree_bigint(v) == degree_naive(lam)


def test_sum_of_squares():
    for n in range(11):
        assert sum(degree(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_conjugate_invariance():
    for n in range(15):
        for lam in enumerate_partitions(n):
            assert degree_vector(lam) == degree_vector(conjugate(lam))


def test_branching():
    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            assert degree(lam) == sum(degree(remove_box(lam, b)) for b in removable_boxes(lam))


def test_compare_examples():
    assert compare_degrees(degree_vector((3, 2, 1)), degree_vector((2, 2, 2))) == 1
    assert compare_degrees(degree_vector((2, 2, 2)), degree_vector((3, 2, 1))) == -1
    assert compare_degrees(degree_vector((4, 4, 4)), degree_vector((7, 1, 1, 1, 1, 1))) == 0


def test_compare_random_pairs_n40():
    rng = random.Random(40)
    parts = list(enumerate_partitions(40))
    sieve = PrimeSieve(40)
    # Include near-ties: pairs one box move apart often have close degrees.
    for _ in range(10_000):
        a = rng.choice(parts)
        if rng.random() < 0.3:
            b = a
        else:
            b = rng.choice(parts)
        va, vb = degree_vector(a, sieve), degree_vector(b, sieve)
        da, db = degree_bigint(va), degree_bigint(vb)
        assert compare_degrees(va, vb) == (da > db) - (da < db)
        assert (va == vb) == (da == db)


def test_compare_exact_fallback():
    # A pair whose degrees differ by far less than the log margin.
    a = DegreeVector(40, ((2, 30), (3, 1)))
    b = DegreeVector(40, ((2, 30), (3, 1)))
    assert compare_degrees(a, b) == 0
    big = DegreeVector(60, ((59, 10), (2, 1)))
    close = DegreeVector(60, ((59, 10), (3, 1)))
    assert compare_degrees(big, close) == -1
