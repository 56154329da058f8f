"""Frobenius closure of (x, y) in F_p[x,y,z]/(x^3+y^3+z^3) for a few elements."""

import argparse

from spclosure.frobenius import frobenius_member, special_decompose, special_frobenius_member
from spclosure.textio import format_poly, parse_poly_list, parse_ring


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-e", type=int, default=3)
    args = ap.parse_args()
    ring = parse_ring(f"F{args.p}[x,y,z]/(x^3+y^3+z^3)")
    gens = parse_poly_list("x, y", ring.names, ring.p)
    for z in parse_poly_list("z, z^2, x + z^2, y*z + z^2, z^3", ring.names, ring.p):
        closure = frobenius_member(z, gens, ring, args.max_e)
        special = special_frobenius_member(z, gens, ring, args.max_e)
        line = f"{format_poly(z, ring.names):12s} closure: {closure.describe():20s} special: {special.describe()}"
        if closure.member:
            d = special_decompose(z, gens, ring, args.max_e)
            line += f"   split: ({format_poly(d.in_ideal, ring.names)}) + ({format_poly(d.special, ring.names)})"
        print(line)


if __name__ == "__main__":
    main()
