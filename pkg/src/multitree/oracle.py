"""Exhaustive generator of rooted tree-like multigraphs.

Used as ground truth for the counting DP; it shares nothing with ``dp``
beyond the value types and the canonical order in ``core``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import (
    ChildAttachment,
    ClassProfile,
    GraphStats,
    LoopTree,
    class_profile,
    tree_key,
)


@dataclass(frozen=True)
class EnumerationResult:
    stats: GraphStats
    codes: tuple[LoopTree, ...]  # distinct, in non-increasing canonical order
    duplicates_removed: int = 0

    @property
    def count(self) -> int:
        return len(self.codes)


class Enumerator:
    """Generates canonical trees per (n, s, m) budget, memoizing sub-results."""

    def __init__(self):
        self._memo: dict[tuple[int, int, int], tuple[LoopTree, ...]] = {}
        self._dupes: dict[tuple[int, int, int], int] = {}

    def trees(self, n: int, s: int, m: int) -> tuple[LoopTree, ...]:
        key = (n, s, m)
        if key not in self._memo:
            raw = list(self._generate(n, s, m))
            unique = sorted(set(raw), key=tree_key, reverse=True)
            self._dupes[key] = len(raw) - len(unique)
            self._memo[key] = tuple(unique)
        return self._memo[key]

    def duplicates(self, n: int, s: int, m: int) -> int:
        self.trees(n, s, m)
        return self._dupes[(n, s, m)]

    def _generate(self, n, s, m):
        if n == 1:
            if m == 0:
                yield LoopTree(s)
            return
        for root_loops in range(s + 1):
            for kids in self._attachment_multisets(n - 1, s - root_loops, m):
                yield LoopTree(root_loops, kids)

    def _candidates(self, n, s, m) -> list[ChildAttachment]:
        out = []
        for a in range(1, n + 1):
            for b in range(s + 1):
                for c in range(m + 1):
                    sub = self.trees(a, b, c)
                    for extra in range(m - c + 1):
                        out.extend(ChildAttachment(t, extra) for t in sub)
        out.sort(key=lambda att: att.key, reverse=True)
        return out

    def _attachment_multisets(self, n, s, m):
        """Non-increasing attachment sequences consuming the budget exactly."""
        cands = self._candidates(n, s, m)
        # runs of candidates sharing one budget cost, in candidate order
        blocks: list[tuple[int, int, int, int, int]] = []
        for i, att in enumerate(cands):
            cost = (att.subtree.n, att.subtree.s, att.subtree.m + att.extra)
            if blocks and blocks[-1][:3] == cost:
                blocks[-1] = cost + (blocks[-1][3], i + 1)
            else:
                blocks.append(cost + (i, i + 1))
        picked: list[ChildAttachment] = []

        def rec(first_block, start, n_left, s_left, m_left):
            if n_left == 0:
                if s_left == 0 and m_left == 0:
                    yield tuple(picked)
                return
            for bi in range(first_block, len(blocks)):
                bn, bs, bm, lo, hi = blocks[bi]
                if bn > n_left or bs > s_left or bm > m_left:
                    continue
                for i in range(max(lo, start), hi):
                    picked.append(cands[i])
                    yield from rec(bi, i, n_left - bn, s_left - bs, m_left - bm)
                    picked.pop()

        yield from rec(0, 0, n, s, m)


_default = Enumerator()


def enumerate_rooted(n: int, s: int, m: int, enumerator: Enumerator | None = None) -> EnumerationResult:
    if n < 1 or s < 0 or m < 0:
        raise ValueError(f"invalid budget ({n}, {s}, {m})")
    e = enumerator or _default
    return EnumerationResult(GraphStats(n, s, m), e.trees(n, s, m), e.duplicates(n, s, m))


def oracle_count(n: int, s: int, m: int, enumerator: Enumerator | None = None) -> int:
    return enumerate_rooted(n, s, m, enumerator).count


def class_histogram(n: int, s: int, m: int, enumerator: Enumerator | None = None) -> dict[ClassProfile, int]:
    return dict(Counter(class_profile(t) for t in enumerate_rooted(n, s, m, enumerator).codes))
