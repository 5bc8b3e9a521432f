"""Koszul verdicts for all quadratic semigroups in a range.

    python3 scripts/koszul_survey.py --max-embdim 5 --max-gen 20 --max-i 4

Prints a count per (embedding dimension, verdict kind) and lists every
NotKoszul and UndecidedUpTo case.
"""

import argparse
from collections import Counter

from numsg.koszul import CERTIFIED, koszul_verdict
from numsg.semigroup import enumerate_semigroups
from numsg.tangent_cone import is_quadratic


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-embdim", type=int, default=5)
    ap.add_argument("--max-gen", type=int, default=20)
    ap.add_argument("--max-i", type=int, default=4)
    args = ap.parse_args()
    counts = Counter()
    for n in range(2, args.max_embdim + 1):
        for g in enumerate_semigroups(n, args.max_gen):
            if not is_quadratic(g):
                continue
            v = koszul_verdict(g, max_i=args.max_i)
            kind = f"{v.status}({v.certificate.get('kind')})" if v.status == CERTIFIED else v.status
            counts[n, kind] += 1
            if v.status != CERTIFIED:
                print(f"{g}: {v.label()}")
    for (n, kind), c in sorted(counts.items()):
        print(f"n={n} {kind}: {c}")


if __name__ == "__main__":
    main()
