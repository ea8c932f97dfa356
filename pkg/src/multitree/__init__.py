"""Exact counts of rooted tree-like multigraphs with self-loops and multiple edges."""

from .core import (
    ChildAttachment,
    ClassProfile,
    GraphStats,
    LoopTree,
    canonical_form,
    class_profile,
    compare_codes,
    parse_code,
    serialize_code,
    stats_of,
)
from .dp import CountTable, DomainError, count_rooted
from .oracle import class_histogram, enumerate_rooted, oracle_count

__version__ = "0.1.0"
