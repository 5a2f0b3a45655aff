"""Congruence reductions: parity and mod-4 surgeries, and a residue engine.

Every surgery places explicit dominoes (the unique tiling of each removed
strip) and reports the leftover cells.  A term whose dominoes do not fit
inside the region, or overlap inconsistently, is an impossible
configuration and contributes zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corners import (
    CornerDescriptor,
    ReflectivePair,
    certify,
    complete_cells,
    corner_at,
    find_corners,
    one_side,
    reflect_corner,
)
from .counting import Residue, count_cells, residue_cells
from .errors import HypothesisFailed
from .region import Axis, Region, components, find_symmetry_axes, reflect_cells


# --- configurations ----------------------------------------------------------


def path_dominoes(path) -> list[frozenset]:
    if len(path) % 2:
        raise ValueError("odd path has no tiling")
    out = []
    for a, b in zip(path[::2], path[1::2]):
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise ValueError(f"{a} and {b} are not adjacent")
        out.append(frozenset((a, b)))
    return out


def place(cells: frozenset, dominoes) -> frozenset | None:
    """Cells left after fixing ``dominoes``; None if they do not fit."""
    owner = {}
    for d in dominoes:
        for c in d:
            if c not in cells:
                return None
            if owner.setdefault(c, d) != d:
                return None
    return cells.difference(owner)


@dataclass(frozen=True)
class Term:
    label: str
    cells: frozenset | None  # leftover cells in the parent's frame; None = impossible
    multiplicity: int
    required_modulus: int

    @property
    def possible(self) -> bool:
        return self.cells is not None

    @property
    def regions(self) -> list[Region]:
        if self.cells is None:
            return []
        return [Region(c) for c in components(self.cells)]

    def count(self) -> int:
        return 0 if self.cells is None else count_cells(self.cells)


@dataclass(frozen=True)
class WeightedSubregions:
    rule: str
    modulus: int
    terms: tuple[Term, ...]
    k: int | None = None

    def combine(self, counts) -> int:
        return sum(t.multiplicity * n for t, n in zip(self.terms, counts)) % self.modulus

    def exact_rhs(self) -> int:
        return self.combine(t.count() for t in self.terms)


def _strip(c: CornerDescriptor, along_s: int, along_t: int):
    return path_dominoes(c.band(along_s, along_t))


def _cells(r) -> frozenset:
    return r.cells if isinstance(r, Region) else frozenset(r)


# --- parity theorem ------------------------------------------------------------


def _check_complete(cells, c, k):
    if k == 1:
        if c.p != 1:
            raise HypothesisFailed("k = 1 is only allowed for p = 1")
        if min(c.s, c.t) < 1:
            raise HypothesisFailed("degenerate corner")
        return
    if k < 1 or k > min(c.s, c.t):
        raise HypothesisFailed(f"k={k} outside [2, min(s,t)={min(c.s, c.t)}]")
    if not complete_cells(cells, c, k):
        raise HypothesisFailed(f"corner not complete up to {k}")


def apply_2open(r, c: CornerDescriptor, k: int) -> WeightedSubregions:
    cells = _cells(r)
    _check_complete(cells, c, k)
    terms = (
        Term("long-s", place(cells, _strip(c, k + 1, k)), 1, 2),
        Term("long-t", place(cells, _strip(c, k, k + 1)), 1, 2),
    )
    return WeightedSubregions("2open", 2, terms, k)


def _walled_short_leg(c: CornerDescriptor) -> str:
    """'s' or 't': the leg of length min(s,t) that is walled."""
    m = min(c.s, c.t)
    if c.s == m and c.walled_s:
        return "s"
    if c.t == m and c.walled_t:
        return "t"
    raise HypothesisFailed("shorter leg is not walled")


def apply_2wall(r, c: CornerDescriptor) -> WeightedSubregions:
    cells = _cells(r)
    leg = _walled_short_leg(c)
    m = min(c.s, c.t)
    _check_complete(cells, c, m)
    dominoes = _strip(c, m, m + 1) if leg == "s" else _strip(c, m + 1, m)
    return WeightedSubregions("2wall", 2, (Term("long-" + ("t" if leg == "s" else "s"),
                                                place(cells, dominoes), 1, 2),), m)


# --- mod-4 theorem ---------------------------------------------------------------


def _check_pair(cells, pair: ReflectivePair, k: int):
    a = pair.axis
    if reflect_cells(cells, a) != cells:
        raise HypothesisFailed(f"region is not symmetric about {a}")
    c = pair.corner_a
    if pair.corner_b.canonical() != reflect_corner(c, a).canonical():
        raise HypothesisFailed("corners are not mirror images")
    if c.same_corner(pair.corner_b):
        raise HypothesisFailed("corner is its own mirror image")
    _check_complete(cells, c, k)
    if not certify(cells, a, c, k):
        raise HypothesisFailed(f"completeness region for k={k} meets the axis")


def _mirror(pair: ReflectivePair, dominoes):
    a = pair.axis
    return [frozenset(a.reflect_cell(x) for x in d) for d in dominoes]


def _check_strips_on_side(pair: ReflectivePair, cells, *strips):
    """Strips of corner_a that fit must stay on its side of the axis."""
    side = one_side(pair.axis, [pair.corner_a.anchor])
    for dominoes in strips:
        flat = [x for d in dominoes for x in d]
        if all(x in cells for x in flat) and one_side(pair.axis, flat) != side:
            raise HypothesisFailed("a removed strip crosses the axis")


def apply_4open(r, pair: ReflectivePair, k: int, strict_strips: bool = True) -> WeightedSubregions:
    cells = _cells(r)
    _check_pair(cells, pair, k)
    c = pair.corner_a
    long_s = _strip(c, k + 1, k)
    long_t = _strip(c, k, k + 1)
    if strict_strips:
        _check_strips_on_side(pair, cells, long_s, long_t)
    terms = (
        Term("ss", place(cells, long_s + _mirror(pair, long_s)), 1, 4),
        Term("tt", place(cells, long_t + _mirror(pair, long_t)), 1, 4),
        Term("st", place(cells, long_s + _mirror(pair, long_t)), 2, 2),
    )
    return WeightedSubregions("4open", 4, terms, k)


def apply_4wall(r, pair: ReflectivePair, strict_strips: bool = True) -> WeightedSubregions:
    cells = _cells(r)
    c = pair.corner_a
    leg = _walled_short_leg(c)
    m = min(c.s, c.t)
    _check_pair(cells, pair, m)
    dominoes = _strip(c, m, m + 1) if leg == "s" else _strip(c, m + 1, m)
    if strict_strips:
        _check_strips_on_side(pair, cells, dominoes)
    label = "tt" if leg == "s" else "ss"
    term = Term(label, place(cells, dominoes + _mirror(pair, dominoes)), 1, 4)
    return WeightedSubregions("4wall", 4, (term,), m)


def apply_double_wall(r, pair: ReflectivePair) -> Residue:
    cells = _cells(r)
    c = pair.corner_a
    if c.s != c.t:
        raise HypothesisFailed("double wall needs an ({s,s};p) corner pair")
    if not (c.walled_s and c.walled_t):
        raise HypothesisFailed("corners are not walled on both legs")
    _check_pair(cells, pair, c.s)
    return Residue(0, 4)


# --- corollaries with a shared edge ---------------------------------------------


def shared_leg(pair: ReflectivePair) -> tuple[str, int]:
    """Which leg of corner_a lies on an edge bisected by the axis, and its length."""
    a, c = pair.axis, pair.corner_a
    for name, leg in (("s", c.s_leg()), ("t", c.t_leg())):
        if leg and reflect_cells(leg, a) == frozenset(leg):
            return name, len(leg)
    raise HypothesisFailed("corners do not share an edge across the axis")


def _clamped_pair(cells, pair: ReflectivePair, m: int, odd: bool):
    leg, length = shared_leg(pair)
    if length != 2 * m + (1 if odd else 0):
        raise HypothesisFailed(f"shared edge has length {length}")
    c = pair.corner_a
    other = c.t if leg == "s" else c.s
    if m < 1 or other < m:
        raise HypothesisFailed("corner legs too short for an ({s,s};p) pair")
    cc = c.clamp(m, m)
    clamped = ReflectivePair(pair.axis, cc, reflect_corner(cc, pair.axis), m)
    _check_pair(cells, clamped, m)
    return leg, clamped


def k2kk_size(pair: ReflectivePair) -> int:
    _, length = shared_leg(pair)
    return length // 2


def apply_k2kk(r, pair: ReflectivePair) -> WeightedSubregions:
    cells = _cells(r)
    _, length = shared_leg(pair)
    if length % 2:
        raise HypothesisFailed("shared edge has odd length")
    m = length // 2
    leg, cp = _clamped_pair(cells, pair, m, odd=False)
    c = cp.corner_a
    # both corners extended one past the non-shared leg
    ext = _strip(c, m, m + 1) if leg == "s" else _strip(c, m + 1, m)
    # both ({m,m}) strips joined by the domino across the axis
    mine = c.band(m, m)
    theirs = [pair.axis.reflect_cell(x) for x in mine]
    bridge = path_dominoes(mine[::-1] + theirs if leg == "s" else mine + theirs[::-1])
    terms = (
        Term("extended", place(cells, ext + _mirror(cp, ext)), 1, 4),
        Term("bridge", place(cells, bridge), 1, 4),
    )
    return WeightedSubregions("k2kk", 4, terms, m)


def apply_k2k1k(r, pair: ReflectivePair) -> WeightedSubregions:
    cells = _cells(r)
    _, length = shared_leg(pair)
    if length % 2 == 0:
        raise HypothesisFailed("shared edge has even length")
    m = length // 2
    leg, cp = _clamped_pair(cells, pair, m, odd=True)
    c = cp.corner_a
    q = c.p - 1
    if leg == "s":
        along_shared, along_other = _strip(c, m + 1, m), _strip(c, m, m + 1)
        middle = frozenset((c.at(m, 0), c.at(m, 1)))
    else:
        along_shared, along_other = _strip(c, m, m + 1), _strip(c, m + 1, m)
        middle = frozenset((c.at(-q, q + m), c.at(1 - q, q + m)))
    long_cells = place(cells, along_other + _mirror(cp, along_other) + [middle])
    long_term = Term("long", long_cells, 1, 4)
    if long_cells is not None:
        walled = _wall_after_middle(long_cells, cp, leg, m)
        if walled is not None:
            long_term = Term("long", walled, 1, 4)
    short = Term("mixed", place(cells, along_shared + _mirror(cp, along_other)), 2, 2)
    return WeightedSubregions("k2k1k", 4, (long_term, short), m)


def _wall_after_middle(cells, pair: ReflectivePair, leg: str, m: int):
    """Apply the walled form to the corners exposed next to the middle domino."""
    c = pair.corner_a
    inner = corner_at(cells, c.at(1, 1), c.orientation, c.p)
    if inner is None:
        return None
    walled = inner.walled_s if leg == "s" else inner.walled_t
    length = inner.s if leg == "s" else inner.t
    if not walled or length != m - 1 or length > min(inner.s, inner.t):
        return None
    ipair = ReflectivePair(pair.axis, inner, reflect_corner(inner, pair.axis), length)
    try:
        ws = apply_4wall(cells, ipair)
    except HypothesisFailed:
        return None
    return ws.terms[0].cells


# --- closed forms ------------------------------------------------------------------


def t_residue(variant: str, k: int, p: int) -> Residue:
    """Residue mod 4 of #T(k, 2k-1 | 2k | 2k+1 | 2k+2, p) for variants a-d."""
    if k < 1 or p < 1:
        raise ValueError("k and p must be >= 1")
    if variant == "a":
        if p == 1 and k % 4 == 0:
            return Residue(1, 4)
        if p == 1 and k % 4 == 2:
            return Residue(3, 4)
        return Residue(0, 4)
    if variant in ("b", "d"):
        return Residue(1, 4)
    if variant == "c":
        return Residue(0, 4)
    raise ValueError(f"unknown T variant {variant!r}")


def d_residue(variant: str, k: int, p: int) -> Residue:
    """Residue mod 4 of #D(k, k | k+1 | k+2, p) for variants a-c."""
    if k < 1 or p < 1:
        raise ValueError("k and p must be >= 1")
    if variant == "a":
        return Residue(2 if (k == 2 and p == 1) else 0, 4)
    if variant == "b":
        level = (k + 2) // 4 if p % 2 else k // 4
        return Residue(1 if level % 2 == 0 else 3, 4)
    if variant == "c":
        if k % 2 == 0 and p == 2:
            return Residue(2, 4)
        if k % 2 == 0 and p == 1:
            return Residue(1 if (-(-k // 4)) % 2 else 3, 4)
        return Residue(0, 4)
    raise ValueError(f"unknown D variant {variant!r}")


T_WIDTH = {"a": lambda k: 2 * k - 1, "b": lambda k: 2 * k, "c": lambda k: 2 * k + 1,
           "d": lambda k: 2 * k + 2}
D_WIDTH = {"a": lambda k: k, "b": lambda k: k + 1, "c": lambda k: k + 2}


# --- recursive residue engine -------------------------------------------------------

RULE_PRIORITY = ("doublewall", "4wall", "k2kk", "k2k1k", "4open")


@dataclass
class Trace:
    """Audit log of a reduction; children point at step ids."""

    steps: list = field(default_factory=list)

    def add(self, **step) -> int:
        step["id"] = len(self.steps)
        self.steps.append(step)
        return step["id"]

    def rules(self) -> list[str]:
        return [s["rule"] for s in self.steps]

    def count(self, rule: str) -> int:
        return sum(1 for s in self.steps if s["rule"] == rule)

    def to_json(self) -> list[dict]:
        return [dict(s) for s in self.steps]


def _pairs(r: Region, axis: Axis, p_max: int) -> list[ReflectivePair]:
    """Uncertified mirror pairs, corner_a being the one with the smaller anchor."""
    seen = set()
    out = []
    for c in find_corners(r, p_max):
        img = reflect_corner(c, axis)
        if img.same_corner(c):
            continue
        key = frozenset((c.canonical(), img.canonical()))
        if key in seen:
            continue
        seen.add(key)
        if img.canonical().anchor < c.anchor:
            c, img = img.canonical(), reflect_corner(img.canonical(), axis)
        out.append(ReflectivePair(axis, c, img, 0))
    out.sort(key=lambda pr: (pr.corner_a.anchor, pr.corner_a.orientation, pr.corner_a.p))
    return out


def default_p_max(r: Region) -> int:
    return min(r.width, r.height) // 2 + 1


class ReductionEngine:
    """Residues mod 4 by recursive theorem application, DP as the fallback.

    Multiplicity-2 terms only matter mod 2; they are counted by DP unless
    ``parity_recursion`` asks for the parity theorem to be applied too.
    """

    def __init__(self, parity_recursion: bool = False, max_frontier: int = 64):
        self.parity_recursion = parity_recursion
        self.max_frontier = max_frontier
        self.trace = Trace()
        self._memo4: dict = {}
        self._memo2: dict = {}

    # mod 4
    def choose(self, r: Region):
        """Strongest applicable rule as ``(rule, pair, result)`` or None."""
        cells = r.cells
        per_axis = [(a, _pairs(r, a, default_p_max(r))) for a in find_symmetry_axes(r)]
        for rule in RULE_PRIORITY:
            for axis, pairs in per_axis:
                for pair in pairs:
                    result = self._try(rule, cells, pair)
                    if result is not None:
                        return rule, pair, result
        return None

    @staticmethod
    def _try(rule, cells, pair):
        c = pair.corner_a
        try:
            if rule == "doublewall":
                return apply_double_wall(cells, pair)
            if rule == "4wall":
                return apply_4wall(cells, pair)
            if rule == "k2kk":
                return apply_k2kk(cells, pair)
            if rule == "k2k1k":
                return apply_k2k1k(cells, pair)
            for k in range(min(c.s, c.t), 0, -1):
                try:
                    return apply_4open(cells, pair, k)
                except HypothesisFailed:
                    continue
        except HypothesisFailed:
            return None
        return None

    def residue4(self, r: Region) -> tuple[int, int]:
        """``(residue, step id)`` for a connected region."""
        key = r.cells
        if key in self._memo4:
            return self._memo4[key]
        if len(r) % 2:
            out = (0, self.trace.add(rule="odd-area", cells=len(r), value=0, terms=[]))
            self._memo4[key] = out
            return out
        choice = self.choose(r)
        if choice is None:
            value = residue_cells(r.cells, 4, self.max_frontier)
            out = (value, self.trace.add(rule="dp", cells=len(r), value=value, terms=[]))
            self._memo4[key] = out
            return out
        rule, pair, result = choice
        step = {"rule": rule, "cells": len(r), "axis": str(pair.axis),
                "anchor": list(pair.corner_a.anchor), "p": pair.corner_a.p}
        if isinstance(result, Residue):
            value, terms = result.value, []
        else:
            step["k"] = result.k
            value, terms = self._combine(result)
        out = (value, self.trace.add(value=value, terms=terms, **step))
        self._memo4[key] = out
        return out

    def _combine(self, ws: WeightedSubregions):
        total = 0
        terms = []
        for term in ws.terms:
            children = []
            if term.cells is None:
                val = 0
            else:
                val = 1
                for comp in term.regions:
                    if term.required_modulus == 4:
                        v, sid = self.residue4(comp)
                    else:
                        v, sid = self.residue2(comp)
                    children.append(sid)
                    val = val * v % term.required_modulus
            total += term.multiplicity * val
            terms.append({"label": term.label, "multiplicity": term.multiplicity,
                          "modulus": term.required_modulus, "possible": term.possible,
                          "children": children})
        return total % 4, terms

    # mod 2
    def residue2(self, r: Region) -> tuple[int, int]:
        key = r.cells
        if key in self._memo2:
            return self._memo2[key]
        ws = self._parity_rule(r) if self.parity_recursion and len(r) % 2 == 0 else None
        if ws is None:
            value = residue_cells(r.cells, 2, self.max_frontier)
            out = (value, self.trace.add(rule="dp2", cells=len(r), value=value, terms=[]))
        else:
            total, terms = 0, []
            for term in ws.terms:
                children, val = [], 0
                if term.cells is not None:
                    val = 1
                    for comp in term.regions:
                        v, sid = self.residue2(comp)
                        children.append(sid)
                        val *= v
                total += val
                terms.append({"label": term.label, "multiplicity": 1, "modulus": 2,
                              "possible": term.possible, "children": children})
            value = total % 2
            out = (value, self.trace.add(rule=ws.rule, cells=len(r), value=value,
                                         k=ws.k, terms=terms))
        self._memo2[key] = out
        return out

    @staticmethod
    def _parity_rule(r: Region):
        corners = find_corners(r, default_p_max(r))
        for c in corners:
            try:
                return apply_2wall(r.cells, c)
            except HypothesisFailed:
                pass
        best = None
        for c in corners:
            for k in range(min(c.s, c.t), 0, -1):
                if best is not None and k <= best.k:
                    break
                try:
                    best = apply_2open(r.cells, c, k)
                    break
                except HypothesisFailed:
                    continue
        return best


def reduce_mod4(r: Region, parity_recursion: bool = False) -> tuple[Residue, Trace]:
    engine = ReductionEngine(parity_recursion=parity_recursion)
    value, _ = engine.residue4(r)
    return Residue(value, 4), engine.trace


def residue_mod4(r: Region, parity_recursion: bool = False) -> Residue:
    return reduce_mod4(r, parity_recursion)[0]
