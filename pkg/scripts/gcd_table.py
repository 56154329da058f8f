"""Print which (x^a, y^b) satisfy the closure decomposition, next to gcd(a, b)."""

import argparse
import math

from spclosure.monomial import minimalize
from spclosure.newton import decomposition_holds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=6)
    args = ap.parse_args()
    print(" a  b  gcd  holds  witness")
    for a in range(1, args.max + 1):
        for b in range(1, args.max + 1):
            res = decomposition_holds(minimalize([(a, 0), (0, b)]))
            print(f"{a:2d} {b:2d} {math.gcd(a, b):4d}  {str(res.holds):5s}  {res.witness}")


if __name__ == "__main__":
    main()
