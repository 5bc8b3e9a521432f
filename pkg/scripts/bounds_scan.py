"""Multiplicity bounds over every numerical semigroup with small generators.

    python3 scripts/bounds_scan.py --max-embdim 5 --max-gen 26

Prints, per embedding dimension, how many semigroups are quadratic, the
multiplicities they reach, and the status counts of each bound statement.
Any violation raises OracleMismatch and stops the scan.
"""

import argparse
import time
from collections import Counter, defaultdict

from numsg.semigroup import enumerate_semigroups
from numsg.tangent_cone import is_quadratic, multiplicity_bound_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-embdim", type=int, default=5)
    ap.add_argument("--max-gen", type=int, default=26)
    args = ap.parse_args()

    t0 = time.perf_counter()
    for n in range(2, args.max_embdim + 1):
        total = 0
        mult = Counter()
        status = defaultdict(Counter)
        for g in enumerate_semigroups(n, args.max_gen):
            total += 1
            if not is_quadratic(g):
                continue
            mult[g[0]] += 1
            for entry in multiplicity_bound_report(g):
                status[entry.name][entry.status] += 1
        print(f"n={n}: {total} semigroups, {sum(mult.values())} quadratic")
        print(f"  e histogram (allowed {n}..{2 ** (n - 1)}, forbidden above {2 ** (n - 1) - 2 ** (n - 3)} "
              f"except {2 ** (n - 1)} when CM): {dict(sorted(mult.items()))}")
        for name in sorted(status):
            print(f"  {name}: {dict(sorted(status[name].items()))}")
    print(f"done in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
