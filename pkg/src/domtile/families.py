"""Generators for rectangles, the T and D families and Aztec diamonds.

Rows are listed top to bottom; the top row gets the largest y.  Every
row is centered on the widest row, which is possible because lengths
only ever step by two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RegionError
from .region import Cell, Region


def _from_rows(lengths: list[int]) -> Region:
    widest = max(lengths)
    n = len(lengths)
    cells = []
    for row, length in enumerate(lengths):
        if (widest - length) % 2:
            raise RegionError("rows cannot be centered on the lattice")
        left = (widest - length) // 2
        y = n - 1 - row
        cells.extend(Cell(left + x, y) for x in range(length))
    return Region(frozenset(cells))


def _check_positive(*vals):
    if any(v < 1 for v in vals):
        raise RegionError(f"family parameters must be >= 1, got {vals}")


def rectangle(a: int, b: int) -> Region:
    """``a`` rows of ``b`` cells."""
    _check_positive(a, b)
    return Region(frozenset(Cell(x, y) for x in range(b) for y in range(a)))


def t_rows(i: int, j: int, p: int) -> list[int]:
    return [j + 2 * min(r, p - 1) for r in range(i + p - 1)]


def d_rows(i: int, j: int, p: int) -> list[int]:
    n = i + 2 * (p - 1)
    return [j + 2 * min(r, p - 1, n - 1 - r) for r in range(n)]


def make_T(i: int, j: int, p: int) -> Region:
    _check_positive(i, j, p)
    return _from_rows(t_rows(i, j, p))


def make_D(i: int, j: int, p: int) -> Region:
    _check_positive(i, j, p)
    return _from_rows(d_rows(i, j, p))


def aztec(p: int) -> Region:
    return make_D(2, 2, p)


FAMILY_ARITY = {"rect": 2, "T": 3, "D": 3, "aztec": 1}
FAMILY_ALIASES = {"rect": "rect", "rectangle": "rect", "T": "T", "t": "T",
                  "D": "D", "d": "D", "aztec": "aztec"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_ARITY:
            raise RegionError(f"unknown family {self.family!r}")
        if len(self.params) != FAMILY_ARITY[self.family]:
            raise RegionError(f"{self.family} takes {FAMILY_ARITY[self.family]} parameters")
        _check_positive(*self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, rest = text.partition(":")
        family = FAMILY_ALIASES.get(name.strip())
        if family is None:
            raise RegionError(f"unknown family {name!r}")
        try:
            params = tuple(int(v) for v in rest.split(",") if v.strip())
        except ValueError as exc:
            raise RegionError(f"bad family parameters in {text!r}") from exc
        return cls(family, params)

    def build(self) -> Region:
        if self.family == "rect":
            return rectangle(*self.params)
        if self.family == "T":
            return make_T(*self.params)
        if self.family == "D":
            return make_D(*self.params)
        return aztec(*self.params)

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"
