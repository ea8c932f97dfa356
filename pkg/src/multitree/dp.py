"""Memoized dynamic program counting rooted tree-like multigraphs.

Subproblems are keyed by the graph statistics (n, s, m) together with
bounds (f, g, h, k) on the lexicographically largest child class of the
root: f vertices, g self-loops, h internal extra edges and k extra copies on
the edge to the root. Each bound is either an upper bound (``L``) or an
exact value (``E``); exact bounds always precede upper bounds.

The four "telescoping" families peel one upper bound at a time into a sum
of exact slices. The fully exact family is evaluated by removing the ``y``
children of the maximal class (a multiset drawn from all subtrees with
stats (f, g, h)) and counting the residual tree, whose own maximal class
must be lexicographically smaller.
"""

from __future__ import annotations

import enum
import math
import sys
import threading
from typing import NamedTuple


class BoundPattern(str, enum.Enum):
    LLLL = "LLLL"
    ELLL = "ELLL"
    EELL = "EELL"
    EEEL = "EEEL"
    EEEE = "EEEE"

    def __str__(self):
        return self.value


LLLL, ELLL, EELL, EEEL, EEEE = BoundPattern


class DpKey(NamedTuple):
    n: int
    s: int
    m: int
    f: int
    g: int
    h: int
    k: int
    pattern: BoundPattern = BoundPattern.LLLL


class DomainError(ValueError):
    """Raised for inputs outside the counting domain (e.g. n = 0)."""


class CountTable:
    """Memo store mapping normalized ``DpKey`` to exact counts.

    Entries are write-once. With ``enabled=False`` nothing is stored, which
    is only useful for differential testing.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._data: dict[DpKey, int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def __iter__(self):
        return iter(self._data)

    def items(self):
        return self._data.items()

    @property
    def entries(self) -> int:
        return len(self._data)

    def get(self, key: DpKey):
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: DpKey, value: int) -> int:
        if not self.enabled:
            return value
        with self._lock:
            stored = self._data.setdefault(key, value)
        if stored != value:
            raise RuntimeError(f"conflicting values for {key}: {stored} != {value}")
        return stored


def normalize(key: DpKey) -> DpKey:
    """Clamp upper bounds to the range that can actually be attained.

    Exact bounds are left alone; an unattainable exact bound just counts 0.
    """
    n, s, m, f, g, h, k, pattern = key
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if min(s, m, f, g, h, k) < 0:
        raise DomainError(f"negative argument in {key}")
    pattern = BoundPattern(pattern)
    n_exact = pattern.value.count("E")
    if n_exact < 1:
        f = min(f, n - 1)
    if n_exact < 2:
        g = min(g, s)
    if n_exact < 3:
        h = min(h, m)
    if n_exact < 4:
        k = min(k, m)
    return DpKey(n, s, m, f, g, h, k, pattern)


def binomial(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _lookup(table: CountTable, key: DpKey):
    return table.get(key) if table.enabled else None


def subtree_family_size(f: int, g: int, h: int, table: CountTable) -> int:
    """Number of rooted structures with exactly (f, g, h) as their stats."""
    return family_le(DpKey(f, g, h, f - 1, g, h, h, LLLL), table)


def w_multiset(f: int, g: int, h: int, y: int, table: CountTable) -> int:
    """Multisets of ``y`` subtrees drawn from those with stats (f, g, h)."""
    if y == 0:
        return 1
    p = subtree_family_size(f, g, h, table)
    return binomial(p + y - 1, y)


def _telescope(key: DpKey, slot: int, slice_pattern: BoundPattern, slice_fn, table: CountTable) -> int:
    # Sum exact slices 0..bound of one coordinate, memoizing every prefix on the way.
    bound = key[slot]
    total = 0
    for b in range(bound + 1):
        prefix = key._replace(**{key._fields[slot]: b})
        cached = _lookup(table, prefix)
        if cached is not None:
            total = cached
            continue
        total += slice_fn(prefix._replace(pattern=slice_pattern), table)
        table.put(prefix, total)
    return total


def family_le(key: DpKey, table: CountTable) -> int:
    """Structures whose maximal child class is bounded above by (f, g, h, k)."""
    key = normalize(key._replace(pattern=LLLL))
    return _telescope(key, 3, ELLL, _eq_v, table)


def family_eq_v(key: DpKey, table: CountTable) -> int:
    """As family_le but the largest child has exactly f vertices."""
    return _eq_v(normalize(key._replace(pattern=ELLL)), table)


def _eq_v(key: DpKey, table: CountTable) -> int:
    n, f = key.n, key.f
    if f > n - 1 or (n >= 2 and f == 0):
        return 0
    return _telescope(key, 4, EELL, _eq_vs, table)


def family_eq_vs(key: DpKey, table: CountTable) -> int:
    """Largest child class fixed in vertices and loops; extras bounded."""
    return _eq_vs(normalize(key._replace(pattern=EELL)), table)


def _eq_vs(key: DpKey, table: CountTable) -> int:
    n, s, f, g = key.n, key.s, key.f, key.g
    if f > n - 1 or (n >= 2 and f == 0) or g > s:
        return 0
    return _telescope(key, 5, EEEL, _eq_vsm, table)


def family_eq_vsm(key: DpKey, table: CountTable) -> int:
    """Largest child class fixed in vertices, loops and internal extras."""
    return _eq_vsm(normalize(key._replace(pattern=EEEL)), table)


def _eq_vsm(key: DpKey, table: CountTable) -> int:
    n, s, m, f, g, h = key.n, key.s, key.m, key.f, key.g, key.h
    if f > n - 1 or (n >= 2 and f == 0) or g > s or h > m:
        return 0
    return _telescope(key, 6, EEEE, _exact, table)


def family_exact(key: DpKey, table: CountTable) -> int:
    """Structures whose maximal child class is exactly (f, g, h, k)."""
    return _exact(normalize(key._replace(pattern=EEEE)), table)


def _exact(key: DpKey, table: CountTable) -> int:
    cached = _lookup(table, key)
    if cached is not None:
        return cached
    value = _exact_uncached(key, table)
    return table.put(key, value)


def _exact_uncached(key: DpKey, table: CountTable) -> int:
    n, s, m, f, g, h, k, _ = key
    if f == 0:
        # childless root: any number of loops, but no edge to carry extras
        return int(n == 1 and m == 0 and g == h == k == 0)
    if n < 2 or f > n - 1 or g > s or h + k > m:
        return 0
    if f == 1 and h > 0:
        return 0

    y_max = (n - 1) // f
    if g:
        y_max = min(y_max, s // g)
    if h + k:
        y_max = min(y_max, m // (h + k))

    total = 0
    for y in range(1, y_max + 1):
        n2, s2, m2 = n - y * f, s - y * g, m - y * (h + k)
        residual = family_le(DpKey(n2, s2, m2, min(n2 - 1, f - 1), s2, m2, m2), table)
        if g:
            residual += family_eq_v(DpKey(n2, s2, m2, f, min(s2, g - 1), m2, m2), table)
        if h:
            residual += family_eq_vs(DpKey(n2, s2, m2, f, g, min(m2, h - 1), m2), table)
        if k:
            residual += family_eq_vsm(DpKey(n2, s2, m2, f, g, h, min(m2, k - 1)), table)
        if residual:
            total += w_multiset(f, g, h, y, table) * residual
    return total


def _ensure_stack(n: int, s: int, m: int):
    # roughly ten frames per nesting level of the recursion over n
    need = 20 * (n + s + m) + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def count_rooted(n: int, s: int, m: int, table: CountTable | None = None) -> int:
    """Number of non-isomorphic rooted tree-like multigraphs with stats (n, s, m)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if s < 0 or m < 0:
        raise DomainError(f"s and m must be nonnegative, got s={s}, m={m}")
    if table is None:
        table = CountTable()
    _ensure_stack(n, s, m)
    return family_le(DpKey(n, s, m, n - 1, s, m, m), table)
