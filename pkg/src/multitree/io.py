"""Count grids as CSV/JSON, and the on-disk memo snapshot."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, TextIO

from .dp import BoundPattern, CountTable, DpKey

MEMO_HEADER = "multitree-memo v1"


class MemoFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class CountGrid:
    max_n: int
    max_s: int
    max_m: int
    cells: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def keys(self) -> Iterable[tuple[int, int, int]]:
        for n in range(1, self.max_n + 1):
            for s in range(self.max_s + 1):
                for m in range(self.max_m + 1):
                    yield (n, s, m)

    def is_complete(self) -> bool:
        return all(k in self.cells for k in self.keys())

    @property
    def size(self) -> int:
        return self.max_n * (self.max_s + 1) * (self.max_m + 1)


def build_grid(max_n: int, max_s: int, max_m: int, count: Callable[[int, int, int], int]) -> CountGrid:
    grid = CountGrid(max_n, max_s, max_m)
    for key in grid.keys():
        grid.cells[key] = count(*key)
    return grid


def _check(grid: CountGrid):
    if not grid.is_complete():
        missing = next(k for k in grid.keys() if k not in grid.cells)
        raise ValueError(f"grid is missing cell {missing}")


def emit_csv(grid: CountGrid) -> str:
    _check(grid)
    lines = ["n,s,m,count"]
    lines += [f"{n},{s},{m},{grid.cells[n, s, m]}" for n, s, m in grid.keys()]
    return "\n".join(lines) + "\n"


def emit_json(grid: CountGrid) -> str:
    _check(grid)
    doc = {
        "max_n": grid.max_n,
        "max_s": grid.max_s,
        "max_m": grid.max_m,
        "counts": [
            {"n": n, "s": s, "m": m, "count": str(grid.cells[n, s, m])}
            for n, s, m in grid.keys()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_json(text: str) -> CountGrid:
    doc = json.loads(text)
    grid = CountGrid(doc["max_n"], doc["max_s"], doc["max_m"])
    for row in doc["counts"]:
        grid.cells[row["n"], row["s"], row["m"]] = int(row["count"])
    _check(grid)
    return grid


def parse_csv(text: str) -> dict[tuple[int, int, int], int]:
    lines = text.split("\n")
    if lines[0] != "n,s,m,count":
        raise ValueError("bad CSV header")
    cells = {}
    for line in lines[1:]:
        if line:
            n, s, m, c = map(int, line.split(","))
            cells[n, s, m] = c
    return cells


# -- memo snapshots -------------------------------------------------------------


def _memo_order(key: DpKey):
    return (key.pattern.value, key.f, key.g, key.h, key.k, key.n, key.s, key.m)


def save_memo(table: CountTable, sink: TextIO) -> None:
    """Write ``table`` as a versioned text snapshot, one entry per line."""
    sink.write(MEMO_HEADER + "\n")
    for key, count in sorted(table.items(), key=lambda kv: _memo_order(kv[0])):
        sink.write(f"{key.pattern.value} {key.f} {key.g} {key.h} {key.k} {key.n} {key.s} {key.m} {count}\n")


def load_memo(source: TextIO, table: CountTable | None = None) -> CountTable:
    table = CountTable() if table is None else table
    header = source.readline().rstrip("\n")
    if header != MEMO_HEADER:
        if header.startswith("multitree-memo "):
            raise MemoFormatError(1, f"unsupported snapshot version {header.split(' ', 1)[1]!r}")
        raise MemoFormatError(1, f"not a memo snapshot: {header!r}")
    for lineno, line in enumerate(source, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        fields = line.split(" ")
        if len(fields) != 9:
            raise MemoFormatError(lineno, f"expected 9 fields, got {len(fields)}")
        try:
            pattern = BoundPattern(fields[0])
        except ValueError:
            raise MemoFormatError(lineno, f"unknown pattern {fields[0]!r}") from None
        if not all(x.isascii() and x.isdigit() for x in fields[1:]):
            raise MemoFormatError(lineno, "non-decimal field")
        f, g, h, k, n, s, m, count = (int(x) for x in fields[1:])
        if min(f, g, h, k, s, m, count) < 0 or n < 1:
            raise MemoFormatError(lineno, "field out of range")
        try:
            table.put(DpKey(n, s, m, f, g, h, k, pattern), count)
        except RuntimeError as exc:
            raise MemoFormatError(lineno, str(exc)) from None
    return table
