"""Brute-force membership by enumerating rational certificates.

Every candidate combination ``sum (p_i / q) beta_i`` with integer ``p_i >= 0``,
``sum p_i = q`` and ``q <= q_max`` is listed once.  Membership of ``alpha`` is
then a comparison ``sum p_i beta_i <= q alpha`` in integers, with no linear
programming involved, so it serves as an independent check of :mod:`.newton`.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from .monomial import MonomialIdeal, box_points

DEFAULT_DENOMINATOR_BOUND = 24


class CertificateTable:
    """All scaled combinations ``(sum p_i beta_i, q)`` for one ideal."""

    def __init__(self, ideal: MonomialIdeal, q_max: int = DEFAULT_DENOMINATOR_BOUND):
        gens = np.array(ideal.generators, dtype=np.int64)
        rows = set()
        for q in range(1, q_max + 1):
            # multisets of size q drawn from the generator indices
            for combo in combinations_with_replacement(range(len(gens)), q):
                total = gens[list(combo)].sum(axis=0)
                rows.add((q, *total.tolist()))
        table = np.array(sorted(rows), dtype=np.int64)
        self.ideal = ideal
        self.q = table[:, 0]
        self.points = table[:, 1:]

    def member(self, alpha: Sequence[int], strict: bool = False) -> bool:
        bound = self.q[:, None] * np.asarray(alpha, dtype=np.int64)[None, :]
        below = (self.points <= bound).all(axis=1)
        if strict:
            below &= (self.points < bound).any(axis=1)
        return bool(below.any())


def oracle_box_scan(ideal: MonomialIdeal, q_max: int = DEFAULT_DENOMINATOR_BOUND, upper=None):
    """Membership sets over a box: returns ``{alpha: (integral, special)}``."""
    table = CertificateTable(ideal, q_max)
    if upper is None:
        upper = tuple(m + 1 for m in ideal.max_exponents())
    return {alpha: (table.member(alpha), table.member(alpha, strict=True)) for alpha in box_points(upper)}
