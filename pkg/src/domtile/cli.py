"""Command-line front end.

Exit codes: 0 ok, 2 bad input, 3 frontier too wide, 4 dp and reduction
disagree, 5 a congruence or closed form failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corners import find_corners, find_reflective_pairs
from .counting import count_tilings, residue
from .errors import FrontierTooWide, RegionError
from .families import FamilySpec, make_D, make_T
from .reduction import D_WIDTH, T_WIDTH, ReductionEngine, d_residue, default_p_max, t_residue
from .region import Region, find_symmetry_axes, load_region, region_to_json, render_region
from . import verify as _verify

EXIT_PARSE = 2
EXIT_FRONTIER = 3
EXIT_DISAGREE = 4
EXIT_CONGRUENCE = 5


class InputError(Exception):
    pass


def read_input(arg: str) -> tuple[str, Region]:
    """A FamilySpec when the argument contains ':', otherwise a region file."""
    try:
        if ":" in arg:
            spec = FamilySpec.parse(arg)
            return str(spec), spec.build()
        return arg, load_region(Path(arg).read_text())
    except (RegionError, OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _emit(lines, out):
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    _, r = read_input(args.input)
    print(count_tilings(r, max_frontier=args.max_frontier))
    return 0


def cmd_residue(args) -> int:
    _, r = read_input(args.input)
    if args.method != "dp" and args.mod not in (2, 4):
        raise InputError("--method reduce needs --mod 2 or --mod 4")
    dp_value = None
    if args.method in ("dp", "both"):
        dp_value = residue(r, args.mod, max_frontier=args.max_frontier).value
    if args.method == "dp":
        print(dp_value)
        return 0
    engine = ReductionEngine(parity_recursion=args.parity_recursion or args.mod == 2,
                             max_frontier=args.max_frontier)
    if args.mod == 4:
        red_value, _ = engine.residue4(r)
    else:
        red_value, _ = engine.residue2(r)
    if args.trace:
        Path(args.trace).write_text(json.dumps(engine.trace.to_json(), indent=1) + "\n")
    if dp_value is not None and dp_value != red_value:
        print(f"dp={dp_value} reduce={red_value}", file=sys.stderr)
        return EXIT_DISAGREE
    print(red_value)
    if args.method == "both":
        rules = engine.trace.rules()
        print(f"trace: {len(rules)} steps, theorem steps "
              f"{sum(1 for x in rules if x not in ('dp', 'dp2', 'odd-area'))}", file=sys.stderr)
    return 0


def cmd_corners(args) -> int:
    _, r = read_input(args.input)
    p_max = args.pmax or default_p_max(r)
    for c in find_corners(r, p_max):
        print(json.dumps(c.to_dict(), sort_keys=True))
    return 0


def cmd_axes(args) -> int:
    _, r = read_input(args.input)
    axes = find_symmetry_axes(r)
    for a in axes:
        if args.pairs:
            pairs = find_reflective_pairs(r, a, args.pmax or default_p_max(r), args.k)
            print(json.dumps({"axis": str(a), "pairs": [p.to_dict() for p in pairs]},
                             sort_keys=True))
        else:
            print(a)
    return 0


def cmd_gen(args) -> int:
    _, r = read_input(args.input)
    text = region_to_json(r) if args.format == "json" else render_region(r)
    _emit([text.rstrip("\n")], args.out)
    return 0


def cmd_verify(args) -> int:
    if args.max_cells < 0 or args.count < 0:
        raise InputError("--max-cells and --count must be non-negative")
    max_cells = args.max_cells or (60 if args.suite == "families" else 36)
    regions = _verify.corpus(args.suite, max_cells=max_cells, seed=args.seed, count=args.count)
    rows = _verify.run_sweep([args.theorem], regions)
    _emit(_verify.csv_lines(rows), args.out)
    failed = sum(1 for row in rows if not row.passed)
    print(f"{args.theorem}: {len(rows)} instances, {failed} failures", file=sys.stderr)
    return EXIT_CONGRUENCE if failed else 0


TABLE_HEADER = "# domtile-table v1"


def table_rows(family: str, variant: str, kmax: int, pmax: int):
    """``(k, p, closed form, exact)`` for every entry of the table."""
    if family == "T":
        if variant not in T_WIDTH:
            raise InputError(f"T has variants {sorted(T_WIDTH)}")
        width, formula, build = T_WIDTH[variant], t_residue, make_T
    else:
        if variant not in D_WIDTH:
            raise InputError(f"D has variants {sorted(D_WIDTH)}")
        width, formula, build = D_WIDTH[variant], d_residue, make_D
    out = []
    for p in range(1, pmax + 1):
        for k in range(1, kmax + 1):
            j = width(k)
            exact = residue(build(k, j, p), 4).value
            out.append((k, p, j, formula(variant, k, p).value, exact))
    return out


def cmd_table(args) -> int:
    if args.kmax < 1 or args.pmax < 1:
        raise InputError("--kmax and --pmax must be positive")
    rows = table_rows(args.family, args.variant, args.kmax, args.pmax)
    lines = [TABLE_HEADER, "family,variant,k,p,j,closed_form,exact,status"]
    for k, p, j, closed, exact in sorted(rows, key=lambda r: (r[1], r[0])):
        status = "pass" if closed == exact else "FAIL"
        lines.append(f"{args.family},{args.variant},{k},{p},{j},{closed},{exact},{status}")
    _emit(lines, args.out)
    failed = sum(1 for row in rows if row[3] != row[4])
    return EXIT_CONGRUENCE if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domtile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="family spec such as T:2,5,4 or a region file")
        return p

    p = with_input("count", "exact number of domino tilings")
    p.add_argument("--max-frontier", type=int, default=64)
    p.set_defaults(func=cmd_count)

    p = with_input("residue", "tiling count modulo m")
    p.add_argument("--mod", type=int, default=4)
    p.add_argument("--method", choices=("dp", "reduce", "both"), default="dp")
    p.add_argument("--parity-recursion", action="store_true",
                   help="reduce doubled terms with the parity rules instead of dp")
    p.add_argument("--trace", help="write the reduction trace as JSON here")
    p.add_argument("--max-frontier", type=int, default=64)
    p.set_defaults(func=cmd_residue)

    p = with_input("corners", "list staircase corners as JSON lines")
    p.add_argument("--pmax", type=int, default=0)
    p.set_defaults(func=cmd_corners)

    p = with_input("axes", "list reflection axes")
    p.add_argument("--pairs", action="store_true", help="also list certified pairs")
    p.add_argument("--pmax", type=int, default=0)
    p.add_argument("-k", type=int, default=1)
    p.set_defaults(func=cmd_axes)

    p = with_input("gen", "print a region")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a theorem on a corpus, CSV report")
    p.add_argument("--theorem", choices=_verify.THEOREMS, required=True)
    p.add_argument("--suite", choices=("families", "fuzz"), default="families")
    p.add_argument("--max-cells", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000, help="fuzz suite size")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed-form residues against exact ones")
    p.add_argument("--family", choices=("T", "D"), required=True)
    p.add_argument("--variant", choices=("a", "b", "c", "d"), required=True)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FrontierTooWide as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FRONTIER


if __name__ == "__main__":
    sys.exit(main())
