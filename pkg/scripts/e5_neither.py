"""Look for quadratic 4-generated semigroups of multiplicity 5 that are
neither symmetric nor pseudo-symmetric.

    python3 scripts/e5_neither.py --max-gen 40

Every hit is printed with its tangent cone data.  An empty list is only
evidence within the searched range.
"""

import argparse

from numsg.cli import RunConfig, search
from numsg.poly import format_polynomial
from numsg.tangent_cone import classify_CI_star, initial_ideal, minimal_generators


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-gen", type=int, default=40)
    args = ap.parse_args()
    rep = search(4, args.max_gen, RunConfig(), quadratic=True, multiplicity=5, neither=True)
    print(f"scanned {rep['scanned']} semigroups <5, ...> with generators <= {args.max_gen}")
    for row in rep["rows"]:
        g = tuple(row["generators"])
        gens = ", ".join(format_polynomial(f) for f in minimal_generators(initial_ideal(g)))
        print(f"  {g}: I* = ({gens}), {classify_CI_star(g)}")
    print(f"{len(rep['rows'])} quadratic, neither symmetric nor pseudo-symmetric")


if __name__ == "__main__":
    main()
