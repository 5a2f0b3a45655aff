"""Check every congruence rule on the families corpus and a fuzzed corpus.

    python3 scripts/theorem_sweep.py --fuzz 1000 --seed 11
"""

import argparse
import time
from collections import Counter

from domtile.verify import THEOREMS, families_corpus, fuzz_corpus, run_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-cells", type=int, default=60)
    ap.add_argument("--fuzz", type=int, default=1000)
    ap.add_argument("--fuzz-cells", type=int, default=36)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    corpus = families_corpus(args.max_cells) + fuzz_corpus(args.fuzz, args.seed, args.fuzz_cells)
    start = time.perf_counter()
    rows = run_sweep(THEOREMS, corpus)
    seen, failed = Counter(), Counter()
    for r in rows:
        seen[r.rule] += 1
        failed[r.rule] += not r.passed
    print(f"{len(corpus)} regions, {time.perf_counter() - start:.1f}s")
    for th in THEOREMS:
        print(f"{th:>10}  {seen[th]:6d} instances  {failed[th]} failures")


if __name__ == "__main__":
    main()
