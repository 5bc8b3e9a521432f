"""Betti tables of the residue field over two quadratic tangent cones:
one that is not Koszul because of beta_4,5 and an almost complete
intersection that fails at homological degree 3.

    python3 scripts/betti_tables.py --max-i 5
"""

import argparse
import time

from numsg.homology import betti_table_over_quotient
from numsg.tangent_cone import initial_ideal

EXAMPLES = [(12, 14, 15, 16, 18, 19), (11, 13, 14, 15, 19)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-i", type=int, default=4)
    ap.add_argument("--band", type=int, default=2)
    args = ap.parse_args()
    for g in EXAMPLES:
        t0 = time.perf_counter()
        tab = betti_table_over_quotient(initial_ideal(g), args.max_i, args.band)
        print(f"H = {g}  ({time.perf_counter() - t0:.1f} s)")
        print(tab.render())
        print(f"first off-diagonal entry: {tab.first_off_diagonal()}\n")


if __name__ == "__main__":
    main()
