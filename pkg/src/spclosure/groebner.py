"""Buchberger's algorithm, normal forms and ideal membership over F_p.

The monomial order is graded reverse lexicographic throughout.  Besides the
plain algorithm there is a cofactor-tracking variant, :func:`lift`, which
writes a member of an ideal as an explicit combination of the generators;
the Frobenius decomposition needs those coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .monomial import ExponentVector, divides
from .polyfp import CharacteristicMismatch, PolyFp, grevlex_key

GREVLEX = "grevlex"


def _lcm(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def _diff(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    p: int
    n: int
    basis: tuple[PolyFp, ...]
    order: str = GREVLEX

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def leading_monomials(self) -> list[ExponentVector]:
        return [g.leading_monomial() for g in self.basis]

    def contains(self, f: PolyFp) -> bool:
        return normal_form(f, self).is_zero()

    def is_reduced(self) -> bool:
        lms = self.leading_monomials()
        for i, g in enumerate(self.basis):
            if g.leading_coefficient() != 1:
                return False
            for a in g.terms:
                if any(divides(lm, a) for k, lm in enumerate(lms) if k != i):
                    return False
        return True


def _divide(f: PolyFp, divisors: Sequence[PolyFp], track: bool):
    """Full multivariate division; returns (quotients or None, remainder)."""
    p, n = f.p, f.n
    for g in divisors:
        if g.p != p:
            raise CharacteristicMismatch(f"characteristic {g.p} vs {p}")
    lead = [(g.leading_monomial(), pow(g.leading_coefficient(), -1, p)) for g in divisors]
    quot: list[dict] | None = [{} for _ in divisors] if track else None
    work = dict(f.terms)
    rem: dict[ExponentVector, int] = {}
    while work:
        a = max(work, key=grevlex_key)
        c = work[a]
        for k, (lm, inv) in enumerate(lead):
            if divides(lm, a):
                shift = _diff(a, lm)
                factor = c * inv % p
                for b, d in divisors[k].terms.items():
                    m = tuple(x + y for x, y in zip(b, shift))
                    v = (work.get(m, 0) - factor * d) % p
                    if v:
                        work[m] = v
                    else:
                        work.pop(m, None)
                if quot is not None:
                    quot[k][shift] = (quot[k].get(shift, 0) + factor) % p
                break
        else:
            rem[a] = c
            del work[a]
    remainder = PolyFp._raw(p, n, rem)
    if quot is None:
        return None, remainder
    return [PolyFp(p, n, q) for q in quot], remainder


def normal_form(f: PolyFp, G: GroebnerBasis | Sequence[PolyFp]) -> PolyFp:
    """Remainder of ``f`` on division by ``G``; zero iff ``f`` is in the ideal when ``G`` is a Gröbner basis."""
    divisors = G.basis if isinstance(G, GroebnerBasis) else tuple(G)
    return _divide(f, [g for g in divisors if g], track=False)[1]


def s_polynomial(f: PolyFp, g: PolyFp) -> PolyFp:
    a, b = f.leading_monomial(), g.leading_monomial()
    m = _lcm(a, b)
    p = f.p
    return f.mul_term(_diff(m, a), pow(f.leading_coefficient(), -1, p)) - g.mul_term(
        _diff(m, b), pow(g.leading_coefficient(), -1, p)
    )


def _buchberger(gens: Sequence[PolyFp], track: bool):
    """Core loop.  With ``track`` each basis element carries cofactors on ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one polynomial to fix the ring")
    p, n = gens[0].p, gens[0].n
    for g in gens:
        if g.p != p:
            raise CharacteristicMismatch(f"characteristic {g.p} vs {p}")
    m = len(gens)
    zero = PolyFp.zero(p, n)

    def unit_row(i):
        return [PolyFp.constant(p, n, 1) if k == i else zero for k in range(m)]

    basis: list[PolyFp] = []
    reps: list[list[PolyFp]] = []

    def reduce(f, frep):
        quots, r = _divide(f, basis, track)
        if track:
            frep = list(frep)
            for q, rep in zip(quots, reps):
                if q:
                    frep = [x - q * y for x, y in zip(frep, rep)]
        return r, frep

    def add_element(f, frep):
        inv = pow(f.leading_coefficient(), -1, p)
        basis.append(f.scale(inv))
        reps.append([x.scale(inv) for x in frep] if track else None)

    for i, g in enumerate(gens):
        if not g:
            continue
        r, rrep = reduce(g, unit_row(i) if track else None)
        if r:
            add_element(r, rrep)

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # normal selection strategy: smallest lcm first
        pairs.sort(key=lambda ij: grevlex_key(_lcm(basis[ij[0]].leading_monomial(), basis[ij[1]].leading_monomial())))
        i, j = pairs.pop(0)
        fi, fj = basis[i], basis[j]
        a, b = fi.leading_monomial(), fj.leading_monomial()
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        lcm = _lcm(a, b)
        if any(
            k not in (i, j)
            and divides(basis[k].leading_monomial(), lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue  # chain criterion
        s = s_polynomial(fi, fj)
        srep = None
        if track:
            si, sj = _diff(lcm, a), _diff(lcm, b)
            srep = [x.mul_term(si, 1) - y.mul_term(sj, 1) for x, y in zip(reps[i], reps[j])]
        r, rrep = reduce(s, srep)
        if r:
            add_element(r, rrep)
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))

    # minimize: drop elements whose leading monomial is divisible by another's
    lms = [g.leading_monomial() for g in basis]
    keep = []
    for i, lm in enumerate(lms):
        dominated = any(
            divides(lms[k], lm) and (lms[k] != lm or k < i) for k in range(len(basis)) if k != i
        )
        if not dominated:
            keep.append(i)
    basis = [basis[i] for i in keep]
    reps = [reps[i] for i in keep] if track else []

    # interreduce tails
    for i in range(len(basis)):
        others = basis[:i] + basis[i + 1 :]
        orep = reps[:i] + reps[i + 1 :]
        quots, r = _divide(basis[i], others, track)
        if track:
            row = list(reps[i])
            for q, rep in zip(quots, orep):
                if q:
                    row = [x - q * y for x, y in zip(row, rep)]
            reps[i] = row
        basis[i] = r
    order = sorted(range(len(basis)), key=lambda i: grevlex_key(basis[i].leading_monomial()))
    gb = GroebnerBasis(p, n, tuple(basis[i] for i in order))
    return gb, ([reps[i] for i in order] if track else None)


@lru_cache(maxsize=2048)
def _buchberger_cached(gens: tuple[PolyFp, ...]) -> GroebnerBasis:
    return _buchberger(gens, track=False)[0]


def buchberger(gens: Sequence[PolyFp]) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens`` (grevlex).

    The zero ideal gets an empty basis.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one polynomial to fix the ring")
    return _buchberger_cached(gens)


def lift(f: PolyFp, gens: Sequence[PolyFp]) -> list[PolyFp] | None:
    """Cofactors ``a`` with ``f == sum(a_i * gens_i)``, or None if ``f`` is not in the ideal."""
    gens = list(gens)
    gb, reps = _buchberger(gens, track=True)
    quots, r = _divide(f, gb.basis, track=True)
    if r:
        return None
    zero = PolyFp.zero(f.p, f.n)
    out = [zero] * len(gens)
    for q, rep in zip(quots, reps):
        if q:
            out = [x + q * y for x, y in zip(out, rep)]
    return out


@dataclass(frozen=True)
class QuotientRing:
    """``F_p[x_1..x_n] / J`` with ``J`` held as a reduced Gröbner basis.

    ``names`` only matter for parsing and printing.
    """

    p: int
    n: int
    relations: GroebnerBasis
    names: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def create(cls, p: int, n: int, relations: Sequence[PolyFp] = (), names: Sequence[str] = ()) -> QuotientRing:
        rels = [r for r in relations if r]
        gb = buchberger(rels) if rels else GroebnerBasis(p, n, ())
        if not names:
            names = tuple(f"x{i + 1}" for i in range(n))
        return cls(p, n, gb, tuple(names))

    def reduce(self, f: PolyFp) -> PolyFp:
        return normal_form(f, self.relations)

    def variables(self) -> list[PolyFp]:
        return [PolyFp.variable(self.p, self.n, j) for j in range(self.n)]

    def is_graded(self) -> bool:
        return all(g.is_homogeneous() for g in self.relations)

    def check(self, f: PolyFp) -> None:
        if f.p != self.p:
            raise CharacteristicMismatch(f"characteristic {f.p} vs ring characteristic {self.p}")
        if f.n != self.n:
            raise ValueError(f"{f.n} variables vs ring with {self.n}")


def ideal_basis(gens: Sequence[PolyFp], ring: QuotientRing) -> GroebnerBasis:
    """Gröbner basis of ``gens + J`` in the ambient polynomial ring."""
    for g in gens:
        ring.check(g)
    allgens = tuple(g for g in gens if g) + ring.relations.basis
    if not allgens:
        return GroebnerBasis(ring.p, ring.n, ())
    return buchberger(allgens)


def ideal_membership(f: PolyFp, gens: Sequence[PolyFp], ring: QuotientRing) -> bool:
    """Is ``f`` in the ideal generated by ``gens`` in the quotient ring?"""
    ring.check(f)
    if not f:
        return True
    return normal_form(f, ideal_basis(gens, ring)).is_zero()
