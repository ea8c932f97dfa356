from __future__ import annotations

import itertools
import sys

import pytest
from hypothesis import strategies as st

from multitree.core import ChildAttachment, LoopTree
from multitree.dp import CountTable
from multitree.oracle import Enumerator


@pytest.fixture(scope="session")
def table():
    return CountTable()


@pytest.fixture(scope="session")
def enumerator():
    return Enumerator()


def isomorphic(a: LoopTree, b: LoopTree) -> bool:
    """Rooted isomorphism by trying every matching of children; no canonical order involved."""
    if a.root_loops != b.root_loops or len(a.children) != len(b.children):
        return False
    if (a.n, a.s, a.m) != (b.n, b.s, b.m):
        return False
    for perm in itertools.permutations(b.children):
        if all(
            ca.extra == cb.extra and isomorphic(ca.subtree, cb.subtree)
            for ca, cb in zip(a.children, perm)
        ):
            return True
    return False


def all_child_permutations(t: LoopTree):
    """Every tree obtained by reordering children lists at every node."""
    options_per_child = [
        [ChildAttachment(sub, c.extra) for sub in all_child_permutations(c.subtree)]
        for c in t.children
    ]
    for choice in itertools.product(*options_per_child):
        for perm in itertools.permutations(choice):
            yield LoopTree(t.root_loops, perm)


def rooted_tree_counts(limit: int) -> list[int]:
    """Counts of unlabeled rooted trees on 1..limit vertices (Euler transform recurrence)."""
    a = [0, 1]
    for n in range(1, limit):
        total = 0
        for k in range(1, n + 1):
            total += sum(d * a[d] for d in range(1, k + 1) if k % d == 0) * a[n - k + 1]
        a.append(total // n)
    return a[1 : limit + 1]


def _trees(depth):
    base = st.builds(LoopTree, st.integers(0, 3))
    if depth == 0:
        return base
    att = st.builds(ChildAttachment, _trees(depth - 1), st.integers(0, 2))
    return st.one_of(base, st.builds(LoopTree, st.integers(0, 3), st.lists(att, max_size=3).map(tuple)))


loop_trees = _trees(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed})")
