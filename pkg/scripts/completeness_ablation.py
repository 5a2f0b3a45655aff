"""What goes wrong if the completeness hypothesis is dropped.

Replaces the completeness test with a constant True and counts parity and
mod-4 failures on fuzzed symmetric regions, holes allowed.
"""

import argparse
import random
from collections import Counter

import domtile.corners as corners
import domtile.reduction as reduction
from domtile.counting import count_tilings
from domtile.errors import HypothesisFailed
from domtile.fuzz import random_symmetric_region
from domtile.region import find_symmetry_axes


def sweep(n, seed):
    rng = random.Random(seed)
    seen, failed = Counter(), Counter()
    for _ in range(n):
        r = random_symmetric_region(rng, hole_free=False)
        total = count_tilings(r)
        for c in corners.find_corners(r, 3):
            for k in range(2, min(c.s, c.t) + 1):
                try:
                    ws = reduction.apply_2open(r, c, k)
                except HypothesisFailed:
                    continue
                seen["2open"] += 1
                failed["2open"] += ws.exact_rhs() != total % 2
            for axis in find_symmetry_axes(r):
                img = corners.reflect_corner(c, axis)
                if img.same_corner(c):
                    continue
                pair = corners.ReflectivePair(axis, c, img, 0)
                for k in range(2, min(c.s, c.t) + 1):
                    try:
                        ws = reduction.apply_4open(r, pair, k, strict_strips=False)
                    except HypothesisFailed:
                        continue
                    seen["4open"] += 1
                    failed["4open"] += ws.exact_rhs() != total % 4
    return seen, failed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args()
    print("with completeness:   ", *sweep(args.n, args.seed))
    reduction.complete_cells = corners.complete_cells = lambda cells, c, k: True
    print("without completeness:", *sweep(args.n, args.seed))


if __name__ == "__main__":
    main()
