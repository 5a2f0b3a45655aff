"""Lattice regions: finite edge-connected sets of unit cells.

A cell ``(x, y)`` is the unit square with lower-left corner ``(x, y)``.
Regions are stored translated so that ``min x == min y == 0``; every
geometric object that refers to cells of a region (axes, corners) uses
that normalized frame.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import BadAxisParity, BadCharacter, Disconnected, EmptyRegion


class Cell(NamedTuple):
    x: int
    y: int


NEIGHBOR_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _neighbors(c):
    x, y = c
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


def components(cells: Iterable) -> list[frozenset[Cell]]:
    """Edge-connected components of a raw cell set, in first-cell order."""
    remaining = {Cell(*c) for c in cells}
    out = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = {start}
        queue = deque([start])
        while queue:
            for n in _neighbors(queue.popleft()):
                if n in remaining:
                    remaining.discard(n)
                    n = Cell(*n)
                    comp.add(n)
                    queue.append(n)
        out.append(frozenset(comp))
    return out


def is_connected(cells) -> bool:
    cells = set(cells)
    if not cells:
        return False
    return len(components(cells)) == 1


@dataclass(frozen=True)
class Region:
    """A nonempty, edge-connected, normalized set of cells."""

    cells: frozenset

    def __post_init__(self):
        cells = {Cell(*c) for c in self.cells}
        if not cells:
            raise EmptyRegion("region has no cells")
        mx = min(c.x for c in cells)
        my = min(c.y for c in cells)
        if mx or my:
            cells = {Cell(c.x - mx, c.y - my) for c in cells}
        if not is_connected(cells):
            raise Disconnected("cells are not edge-connected")
        object.__setattr__(self, "cells", frozenset(cells))

    def __len__(self):
        return len(self.cells)

    def __contains__(self, c):
        return c in self.cells

    def __iter__(self):
        return iter(sorted(self.cells))

    @property
    def width(self) -> int:
        return max(c.x for c in self.cells) + 1

    @property
    def height(self) -> int:
        return max(c.y for c in self.cells) + 1

    def __str__(self):
        return render_region(self)


# --- text and JSON formats -------------------------------------------------


def parse_region(text: str) -> Region:
    """Parse an ASCII grid of ``#`` (cell) and ``.`` (empty).

    The first line is the top row; column index is x.
    """
    lines = [ln.rstrip("\r") for ln in text.strip("\n").split("\n")]
    lines = [ln for ln in lines if ln.strip() != ""]
    cells = []
    n = len(lines)
    for row, line in enumerate(lines):
        y = n - 1 - row
        for x, ch in enumerate(line.rstrip()):
            if ch == "#":
                cells.append(Cell(x, y))
            elif ch not in ". ":
                raise BadCharacter(f"unexpected character {ch!r} at row {row}, column {x}")
    if not cells:
        raise EmptyRegion("no '#' in region text")
    return Region(frozenset(cells))


def render_region(r: Region, fill: str = "#", empty: str = ".") -> str:
    w, h = r.width, r.height
    rows = []
    for y in range(h - 1, -1, -1):
        rows.append("".join(fill if (x, y) in r.cells else empty for x in range(w)))
    return "\n".join(rows)


def region_to_json(r: Region) -> str:
    return json.dumps({"cells": [[c.x, c.y] for c in sorted(r.cells)]})


def region_from_json(text: str) -> Region:
    data = json.loads(text)
    if not isinstance(data, dict) or "cells" not in data:
        raise BadCharacter("JSON region must be an object with a 'cells' list")
    cells = []
    for item in data["cells"]:
        if len(item) != 2 or not all(isinstance(v, int) for v in item):
            raise BadCharacter(f"bad cell entry {item!r}")
        cells.append(Cell(item[0], item[1]))
    if not cells:
        raise EmptyRegion("empty cell list")
    return Region(frozenset(cells))


def load_region(text: str) -> Region:
    """Auto-detect JSON or ASCII."""
    if text.lstrip().startswith("{"):
        return region_from_json(text)
    return parse_region(text)


# --- axes and reflection ---------------------------------------------------

AXIS_KINDS = ("vertical", "horizontal", "diag-up", "diag-down")


@dataclass(frozen=True, order=True)
class Axis:
    """A reflection line; ``offset`` is twice the line constant.

    vertical: x = offset/2, horizontal: y = offset/2,
    diag-up: x - y = offset/2, diag-down: x + y = offset/2.
    """

    kind: str
    offset: int

    def __post_init__(self):
        if self.kind not in AXIS_KINDS:
            raise ValueError(f"unknown axis kind {self.kind!r}")
        if self.kind in ("diag-up", "diag-down") and self.offset % 2:
            raise BadAxisParity(f"{self.kind} axis needs an even doubled offset, got {self.offset}")

    def reflect_cell(self, c) -> Cell:
        x, y = c
        o = self.offset
        if self.kind == "vertical":
            return Cell(o - x - 1, y)
        if self.kind == "horizontal":
            return Cell(x, o - y - 1)
        h = o // 2
        if self.kind == "diag-up":
            return Cell(y + h, x - h)
        return Cell(h - y - 1, h - x - 1)

    def reflect_vector(self, v) -> tuple[int, int]:
        dx, dy = v
        if self.kind == "vertical":
            return (-dx, dy)
        if self.kind == "horizontal":
            return (dx, -dy)
        if self.kind == "diag-up":
            return (dy, dx)
        return (-dy, -dx)

    def side(self, c) -> int:
        """-1 / +1 for the closed half-plane holding the cell, 0 if the
        line passes through the cell's open interior."""
        x, y = c
        o = self.offset
        if self.kind in ("vertical", "horizontal"):
            lo = 2 * (x if self.kind == "vertical" else y)
            hi = lo + 2
        elif self.kind == "diag-up":
            lo, hi = 2 * (x - y - 1), 2 * (x - y + 1)
        else:
            lo, hi = 2 * (x + y), 2 * (x + y + 2)
        if hi <= o:
            return -1
        if lo >= o:
            return 1
        return 0

    def __str__(self):
        return f"{self.kind}@{self.offset / 2:g}"


def reflect_cells(cells, a: Axis) -> frozenset[Cell]:
    return frozenset(a.reflect_cell(c) for c in cells)


def reflect(r: Region, a: Axis) -> Region:
    """Mirror image of ``r`` across ``a``, normalized."""
    return Region(reflect_cells(r.cells, a))


def candidate_axes(r: Region) -> list[Axis]:
    """The one axis per kind that maps the bounding box onto itself."""
    xs = [c.x for c in r.cells]
    ys = [c.y for c in r.cells]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    return [
        Axis("vertical", x0 + x1 + 1),
        Axis("horizontal", y0 + y1 + 1),
        Axis("diag-up", 2 * (x0 - y0)),
        Axis("diag-down", 2 * (x0 + y1 + 1)),
    ]


def find_symmetry_axes(r: Region) -> list[Axis]:
    return [a for a in candidate_axes(r) if reflect_cells(r.cells, a) == r.cells]


# --- surgery ---------------------------------------------------------------


def remove_cells(r: Region, cells) -> list[Region]:
    """Components of ``r`` minus ``cells``, each normalized."""
    rest = r.cells - {Cell(*c) for c in cells}
    return [Region(comp) for comp in components(rest)]


def is_hole_free(cells) -> bool:
    """True if the complement is connected within a padded bounding box."""
    cells = set(cells)
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    outside = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)} - cells
    return len(components(outside)) == 1
