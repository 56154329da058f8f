"""Integral closure of monomial ideals and its special part.

Membership of ``x^alpha`` in the integral closure of ``I = (x^b_1, ..., x^b_r)``
means some convex combination ``sum c_i b_i`` lies below ``alpha``; membership
in the special part asks for a combination strictly below (``<=`` everywhere,
``!=`` somewhere).  Both are decided with the exact simplex in :mod:`.lp`, so
every positive answer carries a rational certificate that replays exactly.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Sequence

from . import lp
from .monomial import (
    ExponentVector,
    MonomialIdeal,
    _check_vector,
    box_points,
    degree,
    divides,
    minimalize,
    power_membership,
    scale,
)

DEFAULT_N_MAX = 32


class UnsupportedInput(ValueError):
    """The operation is only defined on a narrower class of ideals."""


@dataclass(frozen=True)
class ConvexCertificate:
    """Weights on the generators witnessing ``alpha >= sum c_i beta_i``.

    ``strict_coordinate`` is a 0-based index where the inequality is strict;
    it is set for special-part certificates.
    """

    coefficients: tuple[Fraction, ...]
    strict_coordinate: int | None = None

    def point(self, ideal: MonomialIdeal) -> tuple[Fraction, ...]:
        return tuple(
            sum((c * beta[j] for c, beta in zip(self.coefficients, ideal.generators)), Fraction(0))
            for j in range(ideal.n)
        )

    def replays(self, ideal: MonomialIdeal, alpha: Sequence[int]) -> bool:
        if len(self.coefficients) != len(ideal.generators):
            return False
        if any(c < 0 for c in self.coefficients) or sum(self.coefficients) != 1:
            return False
        pt = self.point(ideal)
        if any(p > a for p, a in zip(pt, alpha)):
            return False
        if self.strict_coordinate is not None:
            j = self.strict_coordinate
            return pt[j] < alpha[j]
        return True

    def to_json(self) -> dict:
        # JSON coordinates are 1-based, matching how monomials are written x_1..x_n
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "strict_coordinate": None if self.strict_coordinate is None else self.strict_coordinate + 1,
        }

    @classmethod
    def from_json(cls, data: dict) -> ConvexCertificate:
        strict = data.get("strict_coordinate")
        return cls(
            tuple(Fraction(c) for c in data["coefficients"]),
            None if strict is None else int(strict) - 1,
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    certificate: ConvexCertificate | None = None

    def __bool__(self) -> bool:
        return self.member

    @property
    def verdict(self) -> str:
        return "In" if self.member else "NotIn"


NOT_IN = MembershipResult(False)


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ValueError("the zero ideal is not allowed here")
    if ideal.is_unit:
        raise ValueError("the unit ideal is not allowed here")


def lp_membership(ideal: MonomialIdeal, alpha: Sequence[int], strict: bool = False) -> MembershipResult:
    """Decide membership by linear programming alone, with no shortcuts.

    Variables are the weights c_i and per-coordinate slacks s_j.  The plain
    test is a feasibility problem; the strict one maximizes total slack, which
    is positive exactly when some feasible combination is strictly below alpha.
    """
    gens = ideal.generators
    r, n = len(gens), ideal.n
    A = [[1] * r + [0] * n]
    b = [1]
    for j in range(n):
        A.append([beta[j] for beta in gens] + [1 if k == j else 0 for k in range(n)])
        b.append(alpha[j])
    cost = [0] * r + [1] * n if strict else None
    res = lp.solve(A, b, cost, maximize=True)
    if not res.feasible:
        return NOT_IN
    coeffs = res.x[:r]
    if not strict:
        return MembershipResult(True, ConvexCertificate(coeffs))
    if res.value <= 0:
        return NOT_IN
    slack = res.x[r:]
    j = next(k for k, s in enumerate(slack) if s > 0)
    return MembershipResult(True, ConvexCertificate(coeffs, j))


def _unit_certificate(ideal: MonomialIdeal, i: int, strict_coordinate: int | None = None) -> ConvexCertificate:
    coeffs = tuple(Fraction(1 if k == i else 0) for k in range(len(ideal.generators)))
    return ConvexCertificate(coeffs, strict_coordinate)


def contains_integral(ideal: MonomialIdeal, alpha: Sequence[int]) -> MembershipResult:
    """Is ``x^alpha`` in the integral closure of ``ideal``?"""
    _require_proper(ideal)
    alpha = _check_vector(alpha, ideal.n)
    for i, beta in enumerate(ideal.generators):
        if divides(beta, alpha):
            return MembershipResult(True, _unit_certificate(ideal, i))
    if degree(alpha) < ideal.min_degree():
        return NOT_IN
    return lp_membership(ideal, alpha)


def contains_special_integral(ideal: MonomialIdeal, alpha: Sequence[int]) -> MembershipResult:
    """Is ``x^alpha`` in the special part of the integral closure of ``ideal``?"""
    _require_proper(ideal)
    alpha = _check_vector(alpha, ideal.n)
    for i, beta in enumerate(ideal.generators):
        if divides(beta, alpha) and beta != alpha:
            j = next(k for k in range(ideal.n) if beta[k] < alpha[k])
            return MembershipResult(True, _unit_certificate(ideal, i, j))
    # a combination has degree >= min degree, so strictness needs more room
    if degree(alpha) <= ideal.min_degree():
        return NOT_IN
    return lp_membership(ideal, alpha, strict=True)


def _box_members(
    upper: Sequence[int],
    test: Callable[[ExponentVector], MembershipResult],
    n: int,
    threads: int | None,
) -> MonomialIdeal:
    points = sorted(box_points(upper), key=lambda a: (sum(a), a))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(lambda a: bool(test(a)), points))
        return minimalize((a for a, v in zip(points, verdicts) if v), n)
    found: list[ExponentVector] = []
    for a in points:
        # members already found generate an ideal, so their multiples need no test
        if any(divides(f, a) for f in found):
            continue
        if test(a):
            found.append(a)
    return minimalize(found, n)


@lru_cache(maxsize=4096)
def _integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    return _box_members(ideal.max_exponents(), lambda a: contains_integral(ideal, a), ideal.n, None)


@lru_cache(maxsize=4096)
def _special_integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    upper = tuple(m + 1 for m in ideal.max_exponents())
    return _box_members(upper, lambda a: contains_special_integral(ideal, a), ideal.n, None)


def integral_closure(ideal: MonomialIdeal, threads: int | None = None) -> MonomialIdeal:
    """Minimal generators of the integral closure.

    Every minimal generator lies in the box ``[0, max beta_j]``: lowering a
    coordinate above every generator's keeps the same certificate valid.
    """
    _require_proper(ideal)
    if threads and threads > 1:
        return _box_members(ideal.max_exponents(), lambda a: contains_integral(ideal, a), ideal.n, threads)
    return _integral_closure(ideal)


def special_integral_closure(ideal: MonomialIdeal, threads: int | None = None) -> MonomialIdeal:
    """Minimal generators of the special part of the integral closure.

    The box is ``[0, max beta_j + 1]``: at a coordinate two above every
    generator's, lowering it by one keeps the certificate strict.
    """
    _require_proper(ideal)
    if threads and threads > 1:
        upper = tuple(m + 1 for m in ideal.max_exponents())
        return _box_members(upper, lambda a: contains_special_integral(ideal, a), ideal.n, threads)
    return _special_integral_closure(ideal)


def low_points(ideal: MonomialIdeal) -> list[ExponentVector]:
    """Lattice points of conv(generators) with no point of the hull strictly below.

    These are exactly the members of the integral closure that are not
    special, all of which sit in the box ``[0, max beta_j]``.
    """
    _require_proper(ideal)
    return [
        a
        for a in box_points(ideal.max_exponents())
        if contains_integral(ideal, a) and not contains_special_integral(ideal, a)
    ]


@dataclass(frozen=True)
class DecompositionResult:
    """Whether the integral closure equals ``I + sp(I)``.

    ``witness`` is a low point outside ``I`` when the decomposition fails.
    ``generators_are_low`` records whether the generator set coincides with the
    low points; ``closure_check`` is the independent comparison of the
    integral closure against ``minimalize(I + sp(I))``.
    """

    holds: bool
    witness: ExponentVector | None
    generators_are_low: bool
    closure_check: bool

    def __bool__(self) -> bool:
        return self.holds


def decomposition_holds(ideal: MonomialIdeal) -> DecompositionResult:
    low = low_points(ideal)
    outside = [a for a in low if not ideal.contains(a)]
    gens_low = set(low) == set(ideal.generators)
    direct = integral_closure(ideal) == ideal + special_integral_closure(ideal)
    return DecompositionResult(not outside, outside[0] if outside else None, gens_low, direct == (not outside))


def eventually_in_higher_power(
    alpha: Sequence[int], ideal: MonomialIdeal, n_max: int = DEFAULT_N_MAX
) -> int | None:
    """Smallest ``1 <= n <= n_max`` with ``x^(n*alpha) ∈ I^(n+1)``, or None.

    None only means the search bound was exhausted.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    _require_proper(ideal)
    alpha = _check_vector(alpha, ideal.n)
    for n in range(1, n_max + 1):
        if power_membership(scale(alpha, n), ideal, n + 1):
            return n
    return None


def staircase_valuations_2d(ideal: MonomialIdeal) -> list[tuple[tuple[int, int], int]]:
    """Monomial valuations from the bounded edges of a plane Newton polygon.

    Returns ``((a, b), v)`` per edge, with ``(a, b)`` the primitive inner normal
    and ``v`` the minimum of ``a*i + b*j`` over the generators.  Only for
    m-primary ideals in two variables.
    """
    if ideal.n != 2:
        raise UnsupportedInput("staircase valuations need exactly two variables")
    _require_proper(ideal)
    if not ideal.is_m_primary():
        raise UnsupportedInput("staircase valuations need an m-primary ideal")
    hull: list[ExponentVector] = []
    for p in sorted(ideal.generators):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the turn is not counterclockwise
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    facets = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        dx, dy = x2 - x1, y1 - y2
        g = gcd(dx, dy)
        normal = (dy // g, dx // g)
        value = min(normal[0] * bx + normal[1] * by for bx, by in ideal.generators)
        facets.append((normal, value))
    return facets
