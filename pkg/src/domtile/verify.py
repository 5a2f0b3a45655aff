"""Theorem sweeps: apply every rule wherever its hypotheses hold and compare
the predicted residue with exact counts on both sides."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .corners import find_corners
from .counting import count_cells, count_tilings
from .errors import HypothesisFailed
from .families import FamilySpec, d_rows, t_rows
from .fuzz import random_symmetric_region
from .reduction import (
    _pairs,
    apply_2open,
    apply_2wall,
    apply_4open,
    apply_4wall,
    apply_double_wall,
    apply_k2k1k,
    apply_k2kk,
    default_p_max,
)
from .region import Region, find_symmetry_axes, region_to_json

THEOREMS = ("4open", "4wall", "2open", "2wall", "k2kk", "k2k1k", "doublewall")
MODULUS = {"2open": 2, "2wall": 2}
CSV_VERSION = "# domtile-verify v1"
CSV_COLUMNS = ("region", "rule", "axis", "anchor", "orientation", "p", "k",
               "modulus", "lhs", "rhs", "status")


@dataclass(frozen=True)
class Instance:
    region: str
    rule: str
    axis: str
    anchor: tuple
    orientation: int
    p: int
    k: int
    modulus: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def row(self) -> tuple:
        return (self.region, self.rule, self.axis, f"{self.anchor[0]};{self.anchor[1]}",
                self.orientation, self.p, self.k, self.modulus, self.lhs, self.rhs,
                "pass" if self.passed else "FAIL")


def region_id(r: Region) -> str:
    return "fuzz:" + hashlib.sha1(region_to_json(r).encode()).hexdigest()[:12]


def families_corpus(max_cells: int = 60, max_rect=(6, 10)) -> list[tuple[str, Region]]:
    specs = []
    for a in range(1, max_rect[0] + 1):
        for b in range(1, max_rect[1] + 1):
            specs.append(FamilySpec("rect", (a, b)))
    for name, rows in (("T", t_rows), ("D", d_rows)):
        for i in range(1, max_cells + 1):
            for j in range(1, max_cells + 1):
                if sum(rows(i, j, 1)) > max_cells:
                    break
                p = 1
                while sum(rows(i, j, p)) <= max_cells:
                    specs.append(FamilySpec(name, (i, j, p)))
                    p += 1
    p = 1
    while 2 * p * (p + 1) <= max_cells:
        specs.append(FamilySpec("aztec", (p,)))
        p += 1
    return [(str(s), s.build()) for s in specs]


def fuzz_corpus(count: int = 1000, seed: int = 0, max_cells: int = 36) -> list[tuple[str, Region]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = random_symmetric_region(rng, max_cells=max_cells)
        out.append((region_id(r), r))
    return out


def instances(theorem: str, rid: str, r: Region, total=None):
    """Yield an Instance for every placement where the theorem's hypotheses hold."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    m = MODULUS.get(theorem, 4)
    lhs = (count_tilings(r) if total is None else total) % m
    cells = r.cells
    p_max = default_p_max(r)
    if theorem in ("2open", "2wall"):
        for c in find_corners(r, p_max):
            ks = range(1, min(c.s, c.t) + 1) if theorem == "2open" else (None,)
            for k in ks:
                try:
                    ws = apply_2open(cells, c, k) if k is not None else apply_2wall(cells, c)
                except HypothesisFailed:
                    continue
                yield Instance(rid, theorem, "-", tuple(c.anchor), c.orientation, c.p,
                               ws.k, m, lhs, ws.exact_rhs())
        return
    for axis in find_symmetry_axes(r):
        for pair in _pairs(r, axis, p_max):
            c = pair.corner_a
            results = []
            try:
                if theorem == "4open":
                    for k in range(1, min(c.s, c.t) + 1):
                        try:
                            results.append(apply_4open(cells, pair, k))
                        except HypothesisFailed:
                            pass
                elif theorem == "4wall":
                    results.append(apply_4wall(cells, pair))
                elif theorem == "k2kk":
                    results.append(apply_k2kk(cells, pair))
                elif theorem == "k2k1k":
                    results.append(apply_k2k1k(cells, pair))
                else:
                    apply_double_wall(cells, pair)
                    yield Instance(rid, theorem, str(axis), tuple(c.anchor), c.orientation,
                                   c.p, c.s, m, lhs, 0)
            except HypothesisFailed:
                continue
            for ws in results:
                yield Instance(rid, theorem, str(axis), tuple(c.anchor), c.orientation, c.p,
                               ws.k, m, lhs, ws.exact_rhs())


def corpus(suite: str, max_cells: int = 60, seed: int = 0, count: int = 1000):
    if suite == "families":
        return families_corpus(max_cells)
    if suite == "fuzz":
        return fuzz_corpus(count, seed, max_cells)
    raise ValueError(f"unknown suite {suite!r}")


def run_sweep(theorems, regions) -> list[Instance]:
    out = []
    for rid, r in regions:
        total = count_tilings(r)
        for th in theorems:
            out.extend(instances(th, rid, r, total))
    out.sort(key=lambda inst: inst.row())
    return out


def csv_lines(rows) -> list[str]:
    lines = [CSV_VERSION, ",".join(CSV_COLUMNS)]
    lines.extend(",".join(str(v) for v in inst.row()) for inst in rows)
    return lines


def multiplicity_two_agrees(ws, total: int) -> bool:
    """Evaluating the doubled terms mod 4 or mod 2 gives the same residue."""
    counts = [t.count() for t in ws.terms]
    full = ws.combine(counts)
    halved = ws.combine(n % t.required_modulus for t, n in zip(ws.terms, counts))
    return full == halved == total % ws.modulus


__all__ = [
    "THEOREMS", "Instance", "corpus", "families_corpus", "fuzz_corpus", "instances",
    "run_sweep", "csv_lines", "region_id", "count_cells", "multiplicity_two_agrees",
]
