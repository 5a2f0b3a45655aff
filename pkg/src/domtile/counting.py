"""Exact and modular domino-tiling counts.

``count_tilings`` is a broken-profile DP over the bounding box.
``count_tilings_bruteforce`` is an independent backtracking oracle and
``kasteleyn_rectangle`` evaluates the closed product for even rectangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import mpmath

from .errors import FrontierTooWide, PrecisionExceeded, TooLarge
from .region import Region, components

DEFAULT_MAX_FRONTIER = 64
DEFAULT_BRUTE_LIMIT = 40


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self):
        return self.value


def _profile_dp(cells, modulus=None, max_frontier=DEFAULT_MAX_FRONTIER) -> int:
    cells = set(cells)
    if not cells:
        return 1
    if len(cells) % 2:
        return 0
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, y0 = min(xs), min(ys)
    width, height = max(xs) - x0 + 1, max(ys) - y0 + 1
    # sweep along the longer side so the frontier spans the shorter one
    if width < height:
        grid = {(y - y0, x - x0) for x, y in cells}
        width, height = height, width
    else:
        grid = {(x - x0, y - y0) for x, y in cells}
    if height > max_frontier:
        raise FrontierTooWide(f"frontier {height} exceeds limit {max_frontier}")

    states = {0: 1}
    for x in range(width):
        for y in range(height):
            bit = 1 << y
            here = (x, y) in grid
            right = (x + 1, y) in grid
            up = y + 1 < height and (x, y + 1) in grid
            up_bit = bit << 1
            nxt = {}
            for mask, ways in states.items():
                if mask & bit:
                    key = mask ^ bit
                    nxt[key] = nxt.get(key, 0) + ways
                    continue
                if not here:
                    nxt[mask] = nxt.get(mask, 0) + ways
                    continue
                if right:
                    key = mask | bit
                    nxt[key] = nxt.get(key, 0) + ways
                if up and not mask & up_bit:
                    key = mask | up_bit
                    nxt[key] = nxt.get(key, 0) + ways
            if modulus is not None:
                nxt = {k: v % modulus for k, v in nxt.items() if v % modulus}
            states = nxt
            if not states:
                return 0
    return states.get(0, 0)


def count_cells(cells, max_frontier=DEFAULT_MAX_FRONTIER) -> int:
    """Tilings of an arbitrary (possibly disconnected, possibly empty) cell set."""
    return prod(_profile_dp(c, None, max_frontier) for c in components(cells))


def count_tilings(r: Region, max_frontier: int = DEFAULT_MAX_FRONTIER) -> int:
    return _profile_dp(r.cells, None, max_frontier)


def residue_cells(cells, m: int, max_frontier=DEFAULT_MAX_FRONTIER) -> int:
    out = 1
    for comp in components(cells):
        out = out * _profile_dp(comp, m, max_frontier) % m
        if not out:
            break
    return out % m


def residue(r: Region, m: int, max_frontier: int = DEFAULT_MAX_FRONTIER) -> Residue:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return Residue(_profile_dp(r.cells, m, max_frontier) % m, m)


def count_tilings_bruteforce(r, limit: int = DEFAULT_BRUTE_LIMIT) -> int:
    """Backtracking over the lowest uncovered cell; accepts a Region or raw cells."""
    cells = r.cells if isinstance(r, Region) else frozenset(r)
    if len(cells) > limit:
        raise TooLarge(f"{len(cells)} cells exceeds brute-force limit {limit}")
    if len(cells) % 2:
        return 0
    order = sorted(cells, key=lambda c: (c[1], c[0]))
    free = set(cells)

    def solve(i):
        while i < len(order) and order[i] not in free:
            i += 1
        if i == len(order):
            return 1
        x, y = order[i]
        free.discard((x, y))
        total = 0
        for n in ((x + 1, y), (x, y + 1)):
            if n in free:
                free.discard(n)
                total += solve(i + 1)
                free.add(n)
        free.add((x, y))
        return total

    return solve(0)


def kasteleyn_rectangle(a: int, b: int, max_side: int = 16, prec: int = 128) -> int:
    """Product formula for the even a x b rectangle, rounded with a checked error bound."""
    if a % 2 or b % 2 or a < 2 or b < 2:
        raise ValueError("kasteleyn_rectangle needs positive even sides")
    if a > max_side or b > max_side:
        raise PrecisionExceeded(f"sides beyond configured budget {max_side}")
    with mpmath.workprec(prec):
        value = mpmath.mpf(1)
        nfactors = 0
        for i in range(1, a // 2 + 1):
            ci = 4 * mpmath.cos(i * mpmath.pi / (a + 1)) ** 2
            for j in range(1, b // 2 + 1):
                cj = 4 * mpmath.cos(j * mpmath.pi / (b + 1)) ** 2
                value *= ci + cj
                nfactors += 1
        # each factor carries a few ulps of relative error
        bound = value * (8 * nfactors + 16) * mpmath.mpf(2) ** (-prec)
        nearest = int(mpmath.nint(value))
        if bound >= 0.25 or abs(value - nearest) + bound >= 0.5:
            raise PrecisionExceeded(f"cannot certify nearest integer for {a}x{b}")
    return nearest
