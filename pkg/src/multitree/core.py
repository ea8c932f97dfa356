"""Value model for rooted tree-like multigraphs.

A tree is stored as its root's self-loop count plus a sequence of child
attachments. Each attachment pairs a subtree with the number of extra edge
copies joining it to the parent (0 for a plain edge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple


class GraphStats(NamedTuple):
    n: int
    s: int
    m: int


class ClassProfile(NamedTuple):
    max_v: int = 0
    max_s: int = 0
    max_m: int = 0
    max_l: int = 0


@dataclass(frozen=True)
class LoopTree:
    root_loops: int = 0
    children: tuple[ChildAttachment, ...] = ()

    # derived, cached at construction
    n: int = field(init=False, repr=False, compare=False)
    s: int = field(init=False, repr=False, compare=False)
    m: int = field(init=False, repr=False, compare=False)
    _shape: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.root_loops < 0:
            raise ValueError("root_loops must be nonnegative")
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        n, s, m = 1, self.root_loops, 0
        for c in children:
            n += c.subtree.n
            s += c.subtree.s
            m += c.extra + c.subtree.m
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", m)
        object.__setattr__(
            self, "_shape", (self.root_loops, tuple(c.key for c in children))
        )

    def __hash__(self):
        return hash(self._shape)

    @property
    def stats(self) -> GraphStats:
        return GraphStats(self.n, self.s, self.m)

    def __str__(self):
        return serialize_code(self)


@dataclass(frozen=True)
class ChildAttachment:
    subtree: LoopTree
    extra: int = 0

    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.extra < 0:
            raise ValueError("extra multiplicity must be nonnegative")
        t = self.subtree
        # (vertices, loops, internal extras, attachment extras, root loops, children)
        object.__setattr__(self, "key", (t.n, t.s, t.m, self.extra) + t._shape)

    def __hash__(self):
        return hash(self.key)


def leaf(loops: int = 0) -> LoopTree:
    return LoopTree(loops)


def attach(subtree: LoopTree, extra: int = 0) -> ChildAttachment:
    return ChildAttachment(subtree, extra)


def stats_of(t: LoopTree) -> GraphStats:
    """Return (vertices, self-loops, extra edge copies) of ``t``."""
    return t.stats


def attachment_key(t: LoopTree, k: int = 0) -> tuple:
    """Sort key realising the canonical order; larger keys come first."""
    return (t.n, t.s, t.m, k) + t._shape


def tree_key(t: LoopTree) -> tuple:
    return attachment_key(t, 0)


def compare_codes(a: LoopTree, b: LoopTree, ka: int = 0, kb: int = 0) -> int:
    """Three-way comparison of two attached subtrees.

    Returns 1 if ``a`` attached with ``ka`` extra copies sorts before ``b``
    attached with ``kb`` (is "greater"), -1 if after, 0 if they are
    isomorphic with equal attachment multiplicity. Both trees must already
    be canonical.
    """
    x, y = attachment_key(a, ka), attachment_key(b, kb)
    return (x > y) - (x < y)


def is_canonical(t: LoopTree) -> bool:
    keys = [c.key for c in t.children]
    if any(keys[i] < keys[i + 1] for i in range(len(keys) - 1)):
        return False
    return all(is_canonical(c.subtree) for c in t.children)


def canonical_form(t: LoopTree) -> LoopTree:
    """Sort every children list non-increasingly, bottom-up."""
    kids = [ChildAttachment(canonical_form(c.subtree), c.extra) for c in t.children]
    kids.sort(key=lambda c: c.key, reverse=True)
    return LoopTree(t.root_loops, tuple(kids))


def class_profile(t: LoopTree) -> ClassProfile:
    """Lexicographic maximum of (vertices, loops, extras, attachment) over children.

    Each component is the maximum among children that already attain the
    preceding maxima; all zero for a childless root.
    """
    if not t.children:
        return ClassProfile()
    return ClassProfile(*max((c.subtree.n, c.subtree.s, c.subtree.m, c.extra) for c in t.children))


# -- text codes ---------------------------------------------------------------
#
#   Tree  := "(" DECIMAL ";" Child* ")"
#   Child := "[" DECIMAL "]" Tree


class CodeError(ValueError):
    pass


def serialize_code(t: LoopTree) -> str:
    parts: list[str] = []

    def emit(node: LoopTree):
        parts.append(f"({node.root_loops};")
        for c in node.children:
            parts.append(f"[{c.extra}]")
            emit(c.subtree)
        parts.append(")")

    emit(t)
    return "".join(parts)


def parse_code(text: str) -> LoopTree:
    """Parse a canonical code; rejects malformed or non-canonical input."""
    pos = 0

    def fail(msg: str):
        raise CodeError(f"{msg} at offset {pos} in {text!r}")

    def expect(ch: str):
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            fail(f"expected {ch!r}")
        pos += 1

    def decimal() -> int:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos] in "0123456789":
            pos += 1
        digits = text[start:pos]
        if not digits:
            fail("expected a decimal number")
        if len(digits) > 1 and digits[0] == "0":
            pos = start
            fail("leading zero")
        return int(digits)

    def tree() -> LoopTree:
        nonlocal pos
        expect("(")
        loops = decimal()
        expect(";")
        kids: list[ChildAttachment] = []
        while pos < len(text) and text[pos] == "[":
            pos += 1
            extra = decimal()
            expect("]")
            child = ChildAttachment(tree(), extra)
            if kids and child.key > kids[-1].key:
                fail("children out of canonical order")
            kids.append(child)
        expect(")")
        return LoopTree(loops, tuple(kids))

    result = tree()
    if pos != len(text):
        fail("trailing characters")
    return result
