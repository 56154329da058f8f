"""Run the closure and special-part axiom checks on a seeded random family."""

import argparse
import json
import random

from spclosure.framework import INTEGRAL, check_closure_axioms, check_special_axioms
from spclosure.sampling import random_monomial_ideal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    family = [random_monomial_ideal(rng) for _ in range(args.count)]
    for report in (check_closure_axioms(INTEGRAL, family), check_special_axioms(INTEGRAL, family, args.pairs, args.seed)):
        summary = {k: v["pass"] for k, v in report.to_json()["axioms"].items()}
        print(json.dumps(summary), "checked:", report.checked)


if __name__ == "__main__":
    main()
