"""Closed-form residues of the T and D families against exact counts.

Prints the D(k,k+1,p) table by parity of p, then a mismatch summary for
every variant.
"""

from domtile.cli import table_rows
from domtile.reduction import D_WIDTH, T_WIDTH


def main():
    rows = table_rows("D", "b", kmax=10, pmax=4)
    print("k        " + " ".join(f"{k:2d}" for k in range(1, 11)))
    for p, label in ((1, "p odd "), (2, "p even")):
        print(f"{label}   " + " ".join(f"{c:2d}" for k, q, _, c, _ in sorted(rows) if q == p))
    print()
    for family, widths in (("T", T_WIDTH), ("D", D_WIDTH)):
        for variant in widths:
            rows = table_rows(family, variant, kmax=8, pmax=4)
            bad = [(k, p, c, e) for k, p, _, c, e in rows if c != e]
            print(f"{family}({variant}): {len(rows)} entries, mismatches {bad or 'none'}")


if __name__ == "__main__":
    main()
