"""Frobenius closure and its special part in ``F_p[x]/J``.

Both closures quantify over every power ``q = p^e``, so the searches here are
bounded by ``e_max`` and report :class:`BoundedVerdict` values.  A negative
verdict only says that no witness exists up to the bound.

``m`` is always the ideal of the variables.  Minimal generator counts are
only attempted for homogeneous data, where graded Nakayama makes them a
finite linear-algebra question.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import QuotientRing, ideal_membership, lift
from .newton import UnsupportedInput
from .polyfp import PolyFp

DEFAULT_E_MAX = 5
CLOSURE = "Closure"
SPECIAL_PART = "SpecialPart"


class NoWitness(ValueError):
    """Raised when a decomposition is requested for an element with no closure witness."""


@dataclass(frozen=True)
class FrobeniusWitness:
    e: int
    kind: str


@dataclass(frozen=True)
class BoundedVerdict:
    witness: FrobeniusWitness | None
    e_max: int
    kind: str

    @property
    def member(self) -> bool:
        return self.witness is not None

    def __bool__(self) -> bool:
        return self.member

    @property
    def e(self) -> int | None:
        return None if self.witness is None else self.witness.e

    def describe(self) -> str:
        return f"In at e={self.e}" if self.member else f"NotInUpTo e_max={self.e_max}"

    def to_json(self) -> dict:
        if self.member:
            return {"verdict": "In", "e": self.e, "kind": self.kind}
        return {"verdict": "NotInUpTo", "e_max": self.e_max, "kind": self.kind}


def _check_proper(gens: Sequence[PolyFp], ring: QuotientRing) -> None:
    for g in gens:
        ring.check(g)
    if ideal_membership(PolyFp.constant(ring.p, ring.n, 1), gens, ring):
        raise ValueError("the unit ideal is not allowed here")


def bracket_generators(gens: Sequence[PolyFp], q: int) -> list[PolyFp]:
    return [g.frobenius_power(q) for g in gens]


def m_times_generators(gens: Sequence[PolyFp], ring: QuotientRing) -> list[PolyFp]:
    return [x * g for g in gens for x in ring.variables()]


def in_bracket_power(z: PolyFp, gens: Sequence[PolyFp], ring: QuotientRing, q: int, special: bool = False) -> bool:
    """Does ``z^q`` lie in ``I^[q]`` (or ``m I^[q]`` with ``special``)?"""
    target = bracket_generators(gens, q)
    if special:
        target = m_times_generators(target, ring)
    return ideal_membership(z.frobenius_power(q), target, ring)


def _search(z, gens, ring, e_max, special) -> BoundedVerdict:
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    ring.check(z)
    _check_proper(gens, ring)
    kind = SPECIAL_PART if special else CLOSURE
    for e in range(e_max + 1):
        if in_bracket_power(z, gens, ring, ring.p**e, special):
            return BoundedVerdict(FrobeniusWitness(e, kind), e_max, kind)
    return BoundedVerdict(None, e_max, kind)


def frobenius_member(z: PolyFp, gens: Sequence[PolyFp], ring: QuotientRing, e_max: int = DEFAULT_E_MAX) -> BoundedVerdict:
    """Smallest ``e <= e_max`` with ``z^(p^e) ∈ I^[p^e]``."""
    return _search(z, gens, ring, e_max, special=False)


def special_frobenius_member(
    z: PolyFp, gens: Sequence[PolyFp], ring: QuotientRing, e_max: int = DEFAULT_E_MAX
) -> BoundedVerdict:
    """Smallest ``e <= e_max`` with ``z^(p^e) ∈ m I^[p^e]``."""
    return _search(z, gens, ring, e_max, special=True)


def f_independent(gens: Sequence[PolyFp], ring: QuotientRing, e_max: int = DEFAULT_E_MAX) -> bool:
    """No generator's ``q``-th power lies in the bracket power of the others, for ``q <= p^e_max``.

    False is definitive; True means independent up to the bound.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if any(not g for g in gens):
        raise ValueError("generators must be nonzero")
    _check_proper(gens, ring)
    for e in range(e_max + 1):
        q = ring.p**e
        powers = bracket_generators(gens, q)
        for i, h in enumerate(powers):
            if ideal_membership(h, powers[:i] + powers[i + 1 :], ring):
                return False
    return True


def _require_graded(gens: Sequence[PolyFp], ring: QuotientRing) -> None:
    if not ring.is_graded() or not all(g.is_homogeneous() for g in gens):
        raise UnsupportedInput("minimal generator questions need homogeneous generators and relations")


def analytically_f_independent_at_q(gens: Sequence[PolyFp], ring: QuotientRing, q: int) -> bool:
    """Are the ``g_i^q`` linearly independent in ``L^[q] / m L^[q]``?"""
    gens = list(gens)
    _require_graded(gens, ring)
    powers = bracket_generators(gens, q)
    m_part = m_times_generators(powers, ring)
    for i, h in enumerate(powers):
        if ideal_membership(h, powers[:i] + powers[i + 1 :] + m_part, ring):
            return False
    return True


@dataclass(frozen=True)
class SpecialDecomposition:
    """``z = in_ideal + special`` with ``special`` in the special part at exponent ``e``."""

    in_ideal: PolyFp
    special: PolyFp
    e: int


def frobenius_root(c: int, q: int, p: int) -> int:
    """The unique ``u`` in F_p with ``u^q == c``."""
    c %= p
    if c == 0:
        return 0
    return pow(c, pow(q, -1, p - 1), p)


def special_decompose(
    z: PolyFp, gens: Sequence[PolyFp], ring: QuotientRing, e_max: int = DEFAULT_E_MAX
) -> SpecialDecomposition:
    """Split a Frobenius-closure element into an ideal part and a special part.

    Writes ``z^q = sum a_i g_i^q`` modulo ``J``, keeps the unit constants of the
    ``a_i`` (taking their q-th roots in F_p) to form the ideal part, and
    leaves the rest, whose q-th power lies in ``m I^[q]``.
    """
    gens = list(gens)
    verdict = frobenius_member(z, gens, ring, e_max)
    if not verdict.member:
        raise NoWitness(f"no Frobenius closure witness up to e_max={e_max}")
    e = verdict.e
    q = ring.p**e
    powers = bracket_generators(gens, q)
    cofactors = lift(z.frobenius_power(q), powers + list(ring.relations.basis))
    if cofactors is None:  # pragma: no cover - membership was just established
        raise NoWitness("lifting failed")
    in_ideal = PolyFp.zero(ring.p, ring.n)
    for g, a in zip(gens, cofactors):
        u = frobenius_root(a.constant_term(), q, ring.p)
        if u:
            in_ideal = in_ideal + g.scale(u)
    special = ring.reduce(z - in_ideal)
    if special and not in_bracket_power(special, gens, ring, q, special=True):
        raise AssertionError("special component failed to replay")
    return SpecialDecomposition(in_ideal, special, e)


@dataclass(frozen=True)
class SpreadTable:
    e: tuple[int, ...]
    mu: tuple[int, ...]
    stable: bool

    @property
    def spread(self) -> int | None:
        return self.mu[-1] if self.stable else None

    def to_json(self) -> dict:
        return {"e": list(self.e), "mu": list(self.mu), "stable": self.stable}


def minimal_generator_count(gens: Sequence[PolyFp], ring: QuotientRing) -> int:
    """Size of a minimal homogeneous generating set, by greedy elimination."""
    current = [g for g in (ring.reduce(h) for h in gens) if g]
    i = 0
    while i < len(current):
        others = current[:i] + current[i + 1 :]
        if ideal_membership(current[i], others + m_times_generators(current, ring), ring):
            del current[i]
        else:
            i += 1
    return len(current)


def f_spread(gens: Sequence[PolyFp], ring: QuotientRing, e_max: int = DEFAULT_E_MAX) -> SpreadTable:
    """Minimal generator counts of ``I^[p^e]`` for ``e = 0..e_max``.

    ``stable`` is set when the last three counts agree.
    """
    gens = list(gens)
    _require_graded(gens, ring)
    es = tuple(range(e_max + 1))
    mus = tuple(minimal_generator_count(bracket_generators(gens, ring.p**e), ring) for e in es)
    stable = len(mus) >= 3 and len(set(mus[-3:])) == 1
    return SpreadTable(es, mus, stable)
