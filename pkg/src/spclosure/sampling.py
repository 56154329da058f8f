"""Seeded random instances for the property suites and the CLI checks."""

from __future__ import annotations

import random

from .monomial import MonomialIdeal, minimalize
from .polyfp import PolyFp


def random_monomial_ideal(
    rng: random.Random, n: int | None = None, max_exp: int = 5, max_gens: int = 4, max_vars: int = 3
) -> MonomialIdeal:
    """A proper nonzero monomial ideal with exponents in ``[0, max_exp]``."""
    if n is None:
        n = rng.randint(1, max_vars)
    while True:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if any(g)]
        if gens:
            return minimalize(gens, n)


def random_poly(rng: random.Random, p: int, n: int, max_deg: int = 3, max_terms: int = 3) -> PolyFp:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        alpha = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            alpha[rng.randrange(n)] += 1
        terms[tuple(alpha)] = rng.randrange(1, p)
    return PolyFp(p, n, terms)
