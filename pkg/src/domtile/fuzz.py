"""Random region generators for oracle and theorem sweeps."""

from __future__ import annotations

import random

from .region import Axis, Cell, Region, is_hole_free, reflect_cells


def _grow(rng: random.Random, n: int, seed=(0, 0), allowed=None, compact=0.7) -> set:
    cells = {Cell(*seed)}
    while len(cells) < n:
        frontier = {}
        for x, y in cells:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in cells or (allowed is not None and not allowed(nb)):
                    continue
                frontier[nb] = frontier.get(nb, 0) + 1
        if not frontier:
            break
        options = sorted(frontier)
        if rng.random() < compact:
            weights = [frontier[o] ** 3 for o in options]
            pick = rng.choices(options, weights)[0]
        else:
            pick = rng.choice(options)
        cells.add(Cell(*pick))
    return cells


def random_region(rng: random.Random, max_cells: int = 28, min_cells: int = 1) -> Region:
    n = rng.randint(min_cells, max_cells)
    return Region(frozenset(_grow(rng, n, compact=rng.random())))


SYMMETRIC_KINDS = ("vertical-edge", "vertical-center", "horizontal-edge", "diag-up", "diag-down")


def random_symmetric_region(rng: random.Random, max_cells: int = 36, hole_free: bool = True,
                            tries: int = 200) -> Region:
    """A connected region symmetric about some axis, grown from one half."""
    for _ in range(tries):
        kind = rng.choice(SYMMETRIC_KINDS)
        if kind == "vertical-edge":
            axis, allowed = Axis("vertical", 0), (lambda c: c[0] >= 0)
        elif kind == "vertical-center":
            axis, allowed = Axis("vertical", 1), (lambda c: c[0] >= 0)
        elif kind == "horizontal-edge":
            axis, allowed = Axis("horizontal", 0), (lambda c: c[1] >= 0)
        elif kind == "diag-up":
            axis, allowed = Axis("diag-up", 0), (lambda c: c[0] >= c[1])
        else:
            axis, allowed = Axis("diag-down", 2), (lambda c: c[0] + c[1] >= 0)
        half_target = rng.randint(2, max_cells // 2 + 2)
        half = _grow(rng, half_target, allowed=allowed, compact=0.5 + 0.5 * rng.random())
        cells = frozenset(half) | reflect_cells(half, axis)
        if len(cells) > max_cells or len(cells) < 2:
            continue
        if hole_free and not is_hole_free(cells):
            continue
        return Region(cells)
    raise RuntimeError("could not generate a symmetric region")
