"""Memoised package results shared by several test modules in one session."""

from functools import lru_cache

from hooklab.clusters import find_clusters
from hooklab.multiplicity import degree_counts, max_multiplicity
from hooklab.topdegrees import top_degrees


@lru_cache(maxsize=None)
def clusters(n, min_order=2):
    return tuple(find_clusters(n, min_order))


@lru_cache(maxsize=None)
def table(n, k=4):
    return top_degrees(n, k)


# Criterion number -> list of (passed, detail) recorded by the acceptance tests.
ACCEPTANCE = {}


@lru_cache(maxsize=None)
def counts(n):
    return degree_counts(n)


@lru_cache(maxsize=None)
def mmult(n, ignore_self_conjugate=False):
    return max_multiplicity(n, ignore_self_conjugate)
