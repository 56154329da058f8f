"""Minimal generator counts of bracket powers I^[p^e] for a few ideals of F_p[x,y]."""

import argparse

from spclosure.frobenius import f_spread
from spclosure.textio import parse_poly_list, parse_ring

IDEALS = ["x, y", "x, x + y", "x^2, x*y, y^2", "x^2, y^3", "x^2 + y^2, x*y"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-e", type=int, default=5)
    args = ap.parse_args()
    ring = parse_ring(f"F{args.p}[x,y]")
    for text in IDEALS:
        table = f_spread(parse_poly_list(text, ring.names, ring.p), ring, args.max_e)
        print(f"({text:15s})  mu = {list(table.mu)}  spread = {table.spread}")


if __name__ == "__main__":
    main()
