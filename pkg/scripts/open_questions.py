"""Run both open-question experiments on the small-generator corpus.

    python3 scripts/open_questions.py --max-embdim 5 --max-gen 26

ci-star: CI semigroups with e = 2^(n-1) whose tangent cone ideal is not CI.
forbidden-aci: quadratic, non-CM, I* not CI, and the multiplicity bound or
its equality case fails.  Candidates are printed, nothing is asserted.
"""

import argparse
import json

from numsg.experiments import EXPERIMENTS, run_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-embdim", type=int, default=5)
    ap.add_argument("--max-gen", type=int, default=26)
    args = ap.parse_args()
    for name in EXPERIMENTS:
        out = run_experiment(name, args.max_embdim, args.max_gen)
        print(f"{name}: examined {out['examined']}, candidates {len(out['candidates'])}")
        for row in out["candidates"]:
            print("  " + json.dumps(row, sort_keys=True))


if __name__ == "__main__":
    main()
