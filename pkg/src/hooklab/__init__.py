"""Character degree combinatorics for the symmetric groups and unipotent degrees of GL_n(q)."""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402
    BoxPosition,
    HookMultiset,
    Partition,
    addable_boxes,
    conjugate,
    enumerate_partitions,
    hook_multiset,
    parse_partition,
    partition_count,
    removable_boxes,
    self_conjugate_defect,
)
from .degrees import DegreeVector, PrimeSieve, compare_degrees, degree, degree_bigint, degree_vector  # noqa: E402
