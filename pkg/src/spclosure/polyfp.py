"""Sparse multivariate polynomials over a prime field F_p."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .monomial import ExponentVector, add, degree, scale


class CharacteristicMismatch(ValueError):
    pass


def grevlex_key(alpha: Sequence[int]):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(alpha), tuple(-a for a in reversed(alpha)))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


class PolyFp:
    """Polynomial over F_p in ``n`` variables.

    ``terms`` maps exponent tuples to coefficients in ``1..p-1``; zero
    coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("p", "n", "terms", "_hash")

    def __init__(self, p: int, n: int, terms: Mapping[Sequence[int], int] | None = None):
        self.p = p
        self.n = n
        clean: dict[ExponentVector, int] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != n:
                raise ValueError(f"exponent {alpha} is not in {n} variables")
            c %= p
            if c:
                clean[alpha] = (clean.get(alpha, 0) + c) % p
                if not clean[alpha]:
                    del clean[alpha]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p: int, n: int, terms: dict) -> PolyFp:
        obj = cls.__new__(cls)
        obj.p, obj.n, obj.terms, obj._hash = p, n, terms, None
        return obj

    @classmethod
    def zero(cls, p: int, n: int) -> PolyFp:
        return cls._raw(p, n, {})

    @classmethod
    def constant(cls, p: int, n: int, c: int) -> PolyFp:
        return cls(p, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, p: int, alpha: Sequence[int], c: int = 1) -> PolyFp:
        return cls(p, len(alpha), {tuple(alpha): c})

    @classmethod
    def variable(cls, p: int, n: int, j: int) -> PolyFp:
        return cls.monomial(p, tuple(1 if i == j else 0 for i in range(n)))

    def _check(self, other: PolyFp) -> None:
        if self.p != other.p:
            raise CharacteristicMismatch(f"characteristic {self.p} vs {other.p}")
        if self.n != other.n:
            raise ValueError(f"{self.n} vs {other.n} variables")

    def _coerce(self, other) -> PolyFp:
        if isinstance(other, int):
            return PolyFp.constant(self.p, self.n, other)
        self._check(other)
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PolyFp.constant(self.p, self.n, other)
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.n, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other) -> PolyFp:
        other = self._coerce(other)
        p = self.p
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = (out.get(a, 0) + c) % p
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return PolyFp._raw(p, self.n, out)

    __radd__ = __add__

    def __neg__(self) -> PolyFp:
        p = self.p
        return PolyFp._raw(p, self.n, {a: p - c for a, c in self.terms.items()})

    def __sub__(self, other) -> PolyFp:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> PolyFp:
        return self._coerce(other) - self

    def __mul__(self, other) -> PolyFp:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.p
        out: dict[ExponentVector, int] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                m = add(a, b)
                out[m] = (out.get(m, 0) + c * d) % p
        return PolyFp._raw(p, self.n, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: int) -> PolyFp:
        c %= self.p
        if not c:
            return PolyFp.zero(self.p, self.n)
        return PolyFp._raw(self.p, self.n, {a: v * c % self.p for a, v in self.terms.items()})

    def mul_term(self, alpha: Sequence[int], c: int) -> PolyFp:
        """Multiply by the single term ``c * x^alpha``."""
        c %= self.p
        if not c:
            return PolyFp.zero(self.p, self.n)
        p = self.p
        return PolyFp._raw(p, self.n, {add(a, alpha): v * c % p for a, v in self.terms.items()})

    def __pow__(self, k: int) -> PolyFp:
        if k < 0:
            raise ValueError("negative power")
        result = PolyFp.constant(self.p, self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- order-dependent views (grevlex) ---

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> ExponentVector:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def monic(self) -> PolyFp:
        if not self.terms:
            return self
        return self.scale(pow(self.leading_coefficient(), -1, self.p))

    def total_degree(self) -> int:
        return max((degree(a) for a in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({degree(a) for a in self.terms}) <= 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def homogeneous_components(self) -> dict[int, PolyFp]:
        parts: dict[int, dict] = {}
        for a, c in self.terms.items():
            parts.setdefault(degree(a), {})[a] = c
        return {d: PolyFp._raw(self.p, self.n, t) for d, t in parts.items()}

    def frobenius_power(self, q: int) -> PolyFp:
        """``self ** q`` for ``q`` a power of p, computed term by term."""
        if not is_power_of(q, self.p):
            raise ValueError(f"{q} is not a power of {self.p}")
        # c**q == c in F_p, and the cross terms of (a+b)**q vanish
        return PolyFp._raw(self.p, self.n, {scale(a, q): c for a, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return f"PolyFp(p={self.p}, 0)"
        body = " + ".join(f"{c}*x^{a}" for a, c in self.sorted_terms())
        return f"PolyFp(p={self.p}, {body})"


def frobenius_element_power(f: PolyFp, q: int) -> PolyFp:
    return f.frobenius_power(q)


def polys_from_monomials(p: int, gens: Iterable[Sequence[int]]) -> list[PolyFp]:
    return [PolyFp.monomial(p, g) for g in gens]
