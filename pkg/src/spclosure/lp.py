"""Exact two-phase simplex over the rationals.

Problems are in equality form::

    minimize    cost . x
    subject to  A x = b,  x >= 0

with every entry a :class:`fractions.Fraction` (ints are promoted).  Pivoting
follows Bland's rule, so the method terminates without any tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            self.rows[r] = row = [v * inv for v in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        red = list(cost)
        for r, bvar in enumerate(self.basis):
            cb = cost[bvar]
            if cb:
                row = self.rows[r]
                for j, v in enumerate(row):
                    if v:
                        red[j] -= cb * v
        return red

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Minimize over columns ``< allowed``; returns OPTIMAL or UNBOUNDED."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if red[j] < 0), None)
            if entering is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)

    def solution(self, width: int) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * width
        for r, bvar in enumerate(self.basis):
            if bvar < width:
                x[bvar] = self.rhs[r]
        return tuple(x)


def solve(A: Sequence[Sequence], b: Sequence, cost: Sequence | None = None, maximize: bool = False) -> LPResult:
    """Solve the equality-form LP exactly.  ``cost=None`` asks for feasibility only."""
    m = len(A)
    nvars = len(A[0]) if m else (len(cost) if cost is not None else 0)
    rows = [[Fraction(v) for v in row] for row in A]
    rhs = [Fraction(v) for v in b]
    if any(len(row) != nvars for row in rows) or len(rhs) != m:
        raise ValueError("constraint matrix and right-hand side do not line up")
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # phase one: one artificial column per row
    for i, row in enumerate(rows):
        row.extend(Fraction(1 if k == i else 0) for k in range(m))
    tab = _Tableau(rows, rhs, [nvars + i for i in range(m)])
    phase1 = [Fraction(0)] * nvars + [Fraction(1)] * m
    tab.optimize(phase1, nvars + m)
    if sum(tab.rhs[r] for r, bv in enumerate(tab.basis) if bv >= nvars) > 0:
        return LPResult(INFEASIBLE)
    # drive zero-level artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= nvars:
            col = next((j for j in range(nvars) if tab.rows[r][j] != 0), None)
            if col is None:
                del tab.rows[r], tab.rhs[r], tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1
    tab.rows = [row[:nvars] for row in tab.rows]

    if cost is None:
        return LPResult(OPTIMAL, tab.solution(nvars), Fraction(0))
    c = [Fraction(v) for v in cost]
    if len(c) != nvars:
        raise ValueError("cost vector has the wrong length")
    if maximize:
        c = [-v for v in c]
    if tab.optimize(c, nvars) == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = tab.solution(nvars)
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, -value if maximize else value)
