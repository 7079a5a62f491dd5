"""Plain-text matrix format.

First line ``rows cols``, then one line per nonzero entry ``row col <poly>``
in (row, col) order, with the polynomial in canonical serialization.
"""

from __future__ import annotations

from typing import TextIO

from ..laurent import parse, serialize
from .matrix import RingMatrix


def dumps(a: RingMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines += [f"{i} {j} {serialize(v)}" for i, j, v in a.entries()]
    return "\n".join(lines) + "\n"


def loads(text: str) -> RingMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}")
    rows, cols = int(head[0]), int(head[1])
    entries = {}
    for ln in lines[1:]:
        parts = ln.split(None, 2)
        if len(parts) != 3:
            raise ValueError(f"bad entry line {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        if (i, j) in entries:
            raise ValueError(f"duplicate entry ({i}, {j})")
        entries[(i, j)] = parse(parts[2])
    return RingMatrix.from_entries(rows, cols, entries)


def dump(a: RingMatrix, fh: TextIO) -> None:
    fh.write(dumps(a))


def load(fh: TextIO) -> RingMatrix:
    return loads(fh.read())
