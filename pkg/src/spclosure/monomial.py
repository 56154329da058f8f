"""Exponent vectors and monomial ideals kept in minimal staircase form.

An exponent vector is a plain tuple of nonnegative ints; ``x**2 * y`` in two
variables is ``(2, 1)``.  A :class:`MonomialIdeal` stores the antichain of its
minimal generators in lexicographic order, so two ideals are equal exactly
when their dataclasses compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ExponentVector = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Exponent vectors or ideals live in different numbers of variables."""


def divides(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True if ``x^beta`` divides ``x^alpha``, i.e. beta <= alpha componentwise."""
    return all(b <= a for b, a in zip(beta, alpha))


def add(beta: Sequence[int], gamma: Sequence[int]) -> ExponentVector:
    return tuple(b + g for b, g in zip(beta, gamma))


def scale(beta: Sequence[int], k: int) -> ExponentVector:
    return tuple(k * b for b in beta)


def degree(alpha: Sequence[int]) -> int:
    return sum(alpha)


def unit_vector(n: int, j: int) -> ExponentVector:
    return tuple(1 if i == j else 0 for i in range(n))


def _check_vector(alpha, n: int | None = None) -> ExponentVector:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative exponent in {alpha}")
    if n is not None and len(alpha) != n:
        raise DimensionMismatch(f"{alpha} has length {len(alpha)}, expected {n}")
    return alpha


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n`` variables given by its minimal generators.

    Build instances with :func:`minimalize` or :meth:`from_generators`; the
    constructor assumes ``generators`` is already a sorted antichain.
    The zero ideal has no generators, the unit ideal has the zero vector.
    """

    n: int
    generators: tuple[ExponentVector, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
        return minimalize(gens, n)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.generators

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.generators) and not self.is_unit

    def max_exponents(self) -> ExponentVector:
        """Coordinatewise maximum over the generators (all zeros for the zero ideal)."""
        if not self.generators:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.generators))

    def min_degree(self) -> int:
        return min(degree(b) for b in self.generators)

    def is_m_primary(self) -> bool:
        """True if a pure power of every variable is among the generators."""
        pure = set()
        for beta in self.generators:
            support = [j for j, b in enumerate(beta) if b]
            if len(support) == 1:
                pure.add(support[0])
        return len(pure) == self.n

    def contains(self, alpha: Sequence[int]) -> bool:
        return contains_monomial(self, alpha)

    def issubset(self, other: MonomialIdeal) -> bool:
        """Ideal containment ``self ⊆ other``."""
        _same_n(self, other)
        return all(contains_monomial(other, g) for g in self.generators)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_n(self, other)
        return minimalize(self.generators + other.generators, self.n)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)


def _same_n(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.n != j.n:
        raise DimensionMismatch(f"ideals in {i.n} and {j.n} variables")


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Minimal generators of the monomial ideal generated by ``gens``.

    ``n`` is required when ``gens`` may be empty.
    """
    vecs = [_check_vector(g) for g in gens]
    if n is None:
        if not vecs:
            raise ValueError("variable count needed for an empty generator list")
        n = len(vecs[0])
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatch(f"{v} has length {len(v)}, expected {n}")
    # Sorting by degree first means a divisor is always seen before its multiples.
    kept: list[ExponentVector] = []
    for v in sorted(set(vecs), key=lambda v: (sum(v), v)):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return MonomialIdeal(n, tuple(sorted(kept)))


def maximal_ideal(n: int) -> MonomialIdeal:
    """The homogeneous maximal ideal (x_1, ..., x_n)."""
    return minimalize((unit_vector(n, j) for j in range(n)), n)


def principal(alpha: Sequence[int]) -> MonomialIdeal:
    alpha = _check_vector(alpha)
    return MonomialIdeal(len(alpha), (alpha,))


def contains_monomial(ideal: MonomialIdeal, alpha: Sequence[int]) -> bool:
    alpha = _check_vector(alpha)
    if len(alpha) != ideal.n:
        raise DimensionMismatch(f"{alpha} is not in {ideal.n} variables")
    return any(divides(beta, alpha) for beta in ideal.generators)


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_n(i, j)
    return minimalize((add(b, g) for b in i.generators for g in j.generators), i.n)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError(f"power exponent must be positive, got {k}")
    result = ideal
    for _ in range(k - 1):
        result = product(result, ideal)
    return result


def bracket_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    """Generated by the q-th powers of the generators.  ``q`` is not checked to be a prime power."""
    if q < 1:
        raise ValueError(f"bracket exponent must be positive, got {q}")
    return MonomialIdeal(ideal.n, tuple(sorted(scale(b, q) for b in ideal.generators)))


def m_times(ideal: MonomialIdeal) -> MonomialIdeal:
    return product(ideal, maximal_ideal(ideal.n))


def power_membership(alpha: Sequence[int], ideal: MonomialIdeal, k: int, strict: bool = False) -> bool:
    """Decide ``x^alpha ∈ I^k`` without forming ``I^k``.

    Searches nonnegative integers p_1..p_r with sum k and sum p_i*beta_i <= alpha.
    With ``strict`` the inequality must also be proper, which decides membership
    in ``m * I^k`` instead.
    """
    alpha = _check_vector(alpha, ideal.n)
    if k < 0:
        raise ValueError(f"negative power {k}")
    if k == 0:
        return not strict or any(alpha)
    gens = sorted(ideal.generators, key=degree, reverse=True)
    if not gens:
        return False
    total = degree(alpha)
    min_deg = min(degree(b) for b in gens)
    # any solution has degree >= k*min_deg; a strict one needs degree < total
    if k * min_deg > total or (strict and k * min_deg == total):
        return False
    r = len(gens)
    tail_min = [min(degree(b) for b in gens[i:]) for i in range(r)]

    def search(i: int, left: int, budget: list[int]) -> bool:
        if left * tail_min[i] > sum(budget):
            return False
        beta = gens[i]
        if i == r - 1:
            rest = [budget[j] - b * left for j, b in enumerate(beta)]
            if min(rest) < 0:
                return False
            return not strict or any(rest)
        cap = min((budget[j] // b for j, b in enumerate(beta) if b), default=left)
        for p in range(min(cap, left), -1, -1):
            rest = [budget[j] - b * p for j, b in enumerate(beta)]
            if left == p:
                if not strict or any(rest):
                    return True
                continue
            if search(i + 1, left - p, rest):
                return True
        return False

    return search(0, k, list(alpha))


def box_points(upper: Sequence[int]):
    """All exponent vectors between 0 and ``upper`` inclusive, in lex order."""
    from itertools import product as cartesian

    return cartesian(*(range(u + 1) for u in upper))
