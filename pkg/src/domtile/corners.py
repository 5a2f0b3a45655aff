"""Staircase corners, strips, completeness and reflective pairs.

A corner is described in a local frame ``(u, w)`` of two perpendicular
unit vectors pointing into the region.  Local coordinates ``(a, b)`` name
the cell ``anchor + a*u + b*w``.  A corner with ``p`` steps has its step
cells at ``(-r, r)`` for ``r < p``; the ``s`` leg runs along ``+u`` from
step 0 and the ``t`` leg along ``+w`` from step ``p-1``.  Filler cells
``(1-r, r)`` sit under each concave turn of the staircase.

The same geometric corner read from its other end has the frame swapped
and the opposite determinant; ``find_corners`` reports the reading with
``det(u, w) == -1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import KOutOfRange, NotSymmetric, StripExceedsCorner
from .region import Axis, Cell, Region, reflect_cells

UNIT = ((1, 0), (0, 1), (-1, 0), (0, -1))
ORIENTATIONS = tuple((u, w) for u in UNIT for w in UNIT if u[0] * w[0] + u[1] * w[1] == 0)


def det(u, w) -> int:
    return u[0] * w[1] - u[1] * w[0]


CANONICAL = tuple(i for i, (u, w) in enumerate(ORIENTATIONS) if det(u, w) == -1)


def local(anchor, u, w, a, b) -> Cell:
    return Cell(anchor[0] + a * u[0] + b * w[0], anchor[1] + a * u[1] + b * w[1])


def measure_corner(cells, anchor, u, w, p):
    """Leg lengths ``(s, t)`` of the p-step staircase at ``anchor``, or None."""
    def at(a, b):
        return local(anchor, u, w, a, b)

    for r in range(p):
        if at(-r, r) not in cells or at(-r - 1, r) in cells or at(-r, r - 1) in cells:
            return None
        if r and at(1 - r, r) not in cells:
            return None
    s = 0
    while at(s, 0) in cells and at(s, -1) not in cells:
        s += 1
    q = p - 1
    t = 0
    while at(-q, q + t) in cells and at(-q - 1, q + t) not in cells:
        t += 1
    if p > 1 and min(s, t) < 2:
        return None
    return s, t


def band(anchor, u, w, p, i, j) -> list[Cell]:
    """Cells of the ``({i,j};p)`` strip as a path from the s end to the t end."""
    out = [local(anchor, u, w, a, 0) for a in range(i - 1, -1, -1)]
    for r in range(1, p):
        out.append(local(anchor, u, w, 1 - r, r))
        out.append(local(anchor, u, w, -r, r))
    q = p - 1
    out.extend(local(anchor, u, w, -q, q + b) for b in range(1, j))
    return out


@dataclass(frozen=True)
class CornerDescriptor:
    anchor: Cell
    orientation: int
    s: int
    t: int
    p: int
    walled_s: bool = False
    walled_t: bool = False

    @property
    def u(self):
        return ORIENTATIONS[self.orientation][0]

    @property
    def w(self):
        return ORIENTATIONS[self.orientation][1]

    def at(self, a, b) -> Cell:
        return local(self.anchor, self.u, self.w, a, b)

    @property
    def far_anchor(self) -> Cell:
        """Step cell carrying the t leg."""
        return self.at(-(self.p - 1), self.p - 1)

    def s_leg(self) -> list[Cell]:
        return [self.at(a, 0) for a in range(self.s)]

    def t_leg(self) -> list[Cell]:
        q = self.p - 1
        return [self.at(-q, q + b) for b in range(self.t)]

    def swapped(self) -> "CornerDescriptor":
        """The same corner read from the other end (s and t exchanged)."""
        u, w = self.u, self.w
        return CornerDescriptor(
            self.far_anchor, ORIENTATIONS.index((w, u)), self.t, self.s, self.p,
            self.walled_t, self.walled_s,
        )

    def canonical(self) -> "CornerDescriptor":
        return self if det(self.u, self.w) == -1 else self.swapped()

    def same_corner(self, other: "CornerDescriptor") -> bool:
        return self.canonical() == other.canonical()

    def inward(self) -> "CornerDescriptor":
        """Frame of the corner left behind after removing a strip."""
        return replace(self, anchor=self.at(1, 1))

    def clamp(self, s: int, t: int) -> "CornerDescriptor":
        """Shorter legs along the same segments; clamped legs are never walled."""
        return replace(
            self, s=s, t=t,
            walled_s=self.walled_s and s == self.s,
            walled_t=self.walled_t and t == self.t,
        )

    def band(self, i, j) -> list[Cell]:
        return band(self.anchor, self.u, self.w, self.p, i, j)

    def to_dict(self) -> dict:
        return {
            "anchor": list(self.anchor), "u": list(self.u), "w": list(self.w),
            "s": self.s, "t": self.t, "p": self.p,
            "walled_s": self.walled_s, "walled_t": self.walled_t,
        }


def corner_at(cells, anchor, orientation, p) -> CornerDescriptor | None:
    u, w = ORIENTATIONS[orientation]
    legs = measure_corner(cells, anchor, u, w, p)
    if legs is None:
        return None
    s, t = legs
    q = p - 1
    return CornerDescriptor(
        Cell(*anchor), orientation, s, t, p,
        walled_s=local(anchor, u, w, s, 0) not in cells,
        walled_t=local(anchor, u, w, -q, q + t) not in cells,
    )


def find_corners(r: Region, p_max: int) -> list[CornerDescriptor]:
    """Every maximal ``({s,t};p)`` corner with ``p <= p_max``."""
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    cells = r.cells if isinstance(r, Region) else frozenset(r)
    out = []
    for c in sorted(cells):
        for o in CANONICAL:
            for p in range(1, p_max + 1):
                corner = corner_at(cells, c, o, p)
                if corner is not None:
                    out.append(corner)
    return out


def strip_cells(c: CornerDescriptor, i: int, j: int) -> frozenset[Cell]:
    if i < 1 or j < 1:
        raise StripExceedsCorner("strip legs must be positive")
    if i > c.s or j > c.t:
        raise StripExceedsCorner(f"({i},{j}) strip does not fit a ({c.s},{c.t}) corner")
    return frozenset(c.band(i, j))


# --- completeness ----------------------------------------------------------


@lru_cache(maxsize=200_000)
def _i_complete(cells: frozenset, anchor, orientation, p, s, t, i) -> bool:
    if i == 2:
        return min(s, t) >= 2
    u, w = ORIENTATIONS[orientation]
    q = p - 1
    strip = band(anchor, u, w, p, i, i)
    x = local(anchor, u, w, i - 1, 1)
    y = local(anchor, u, w, 1 - q, q + i - 1)
    inner_anchor = local(anchor, u, w, 1, 1)
    if x in cells or y in cells:
        if not all(c in cells for c in band(inner_anchor, u, w, p, i - 1, i - 1)):
            return False
    if i - 2 >= 2:
        rest = cells.difference(strip)
        legs = measure_corner(rest, inner_anchor, u, w, p)
        if legs is None:
            # nothing left to be complete; the strict reading refuses
            return False
        s2, t2 = legs
        if i - 2 <= min(s2, t2):
            return all(
                _i_complete(rest, inner_anchor, orientation, p, s2, t2, j)
                for j in range(2, i - 1)
            )
    return True


def complete_cells(cells: frozenset, c: CornerDescriptor, k: int) -> bool:
    if k < 2 or k > min(c.s, c.t):
        raise KOutOfRange(f"k={k} outside [2, {min(c.s, c.t)}]")
    return all(
        _i_complete(cells, c.anchor, c.orientation, c.p, c.s, c.t, i)
        for i in range(2, k + 1)
    )


def is_complete_up_to(r: Region, c: CornerDescriptor, k: int) -> bool:
    return complete_cells(r.cells, c, k)


def inspection_cells(c: CornerDescriptor, k: int) -> frozenset[Cell]:
    """Cells examined when deciding completeness up to ``k``: nested strips of
    sizes k, k-1, k-3, ... at increasing depth, stopping below size 2."""
    out = set(c.band(k, k))
    depth, size = 1, k - 1
    anchor = c.anchor
    while size >= 2:
        anchor = local(anchor, c.u, c.w, 1, 1)
        out.update(band(anchor, c.u, c.w, c.p, size, size))
        depth += 1
        size -= 2
    return frozenset(out)


def one_side(axis: Axis, cells) -> int:
    """Common side of all cells w.r.t. the axis, or 0 if they straddle it."""
    sides = {axis.side(c) for c in cells}
    if len(sides) == 1:
        return sides.pop()
    return 0


# --- reflective pairs -------------------------------------------------------


def reflect_corner(c: CornerDescriptor, a: Axis) -> CornerDescriptor:
    """Mirror image; leg ``s`` of the image is the mirror of leg ``s``."""
    u, w = a.reflect_vector(c.u), a.reflect_vector(c.w)
    return replace(c, anchor=a.reflect_cell(c.anchor), orientation=ORIENTATIONS.index((u, w)))


@dataclass(frozen=True)
class ReflectivePair:
    axis: Axis
    corner_a: CornerDescriptor
    corner_b: CornerDescriptor
    max_certified_k: int

    def to_dict(self) -> dict:
        return {
            "axis": str(self.axis),
            "corner_a": self.corner_a.to_dict(),
            "corner_b": self.corner_b.to_dict(),
            "k": self.max_certified_k,
        }


def certify(cells, axis: Axis, c: CornerDescriptor, k: int) -> bool:
    """Completeness up to ``k`` plus an inspection region on one side of the axis."""
    if k < 1 or k > min(c.s, c.t):
        return False
    if k == 1:
        if c.p != 1:
            return False
    elif not complete_cells(cells, c, k):
        return False
    return one_side(axis, inspection_cells(c, k)) != 0


def find_reflective_pairs(r: Region, a: Axis, p_max: int, k: int) -> list[ReflectivePair]:
    cells = r.cells
    if reflect_cells(cells, a) != cells:
        raise NotSymmetric(f"region is not symmetric about {a}")
    if k < 1:
        raise KOutOfRange("k must be >= 1")
    out = []
    seen = set()
    for c in find_corners(r, p_max):
        img = reflect_corner(c, a)
        if img.same_corner(c) or c.canonical() in seen:
            continue
        if not certify(cells, a, c, k):
            continue
        seen.add(c.canonical())
        seen.add(img.canonical())
        out.append(ReflectivePair(a, c, img, k))
    return out
