"""Closure operations on monomial ideals and instance checks of their axioms.

Everything here falsifies rather than proves: a check runs over a list of
concrete ideals and reports each failure together with the ideals that
produced it.  Reductions are only searched among subsets of a given
generating set, so spreads computed here are subset spreads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .monomial import (
    ExponentVector,
    MonomialIdeal,
    box_points,
    m_times,
    minimalize,
    power,
    power_membership,
    scale,
)
from .newton import (
    DEFAULT_N_MAX,
    UnsupportedInput,
    contains_special_integral,
    eventually_in_higher_power,
    integral_closure,
    special_integral_closure,
    staircase_valuations_2d,
)
from .textio import default_names, format_monomial, format_monomial_ideal

Closure = Callable[[MonomialIdeal], MonomialIdeal]


@dataclass(frozen=True)
class ClosureOperation:
    name: str
    closure: Closure
    special: Closure | None = None

    def __call__(self, ideal: MonomialIdeal) -> MonomialIdeal:
        # the zero ideal is closed for every operation considered here
        if ideal.is_zero:
            return ideal
        return self.closure(ideal)

    def special_part(self, ideal: MonomialIdeal) -> MonomialIdeal:
        if self.special is None:
            raise ValueError(f"{self.name} has no special part")
        if ideal.is_zero:
            return ideal
        return self.special(ideal)


INTEGRAL = ClosureOperation("integral", integral_closure, special_integral_closure)
IDENTITY = ClosureOperation("identity", lambda ideal: ideal, m_times)


def _text(ideal: MonomialIdeal) -> str:
    return format_monomial_ideal(ideal, default_names(ideal.n))


@dataclass
class AxiomReport:
    """Per-axiom failures (each a dict of replayable witnesses) and check counts."""

    operation: str
    instances: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list[dict]] = field(default_factory=dict)

    def record(self, axiom: str, ok: bool, **witness) -> None:
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        self.failures.setdefault(axiom, [])
        if not ok:
            self.failures[axiom].append(witness)

    def passed(self, axiom: str | None = None) -> bool:
        if axiom is not None:
            return not self.failures.get(axiom)
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            "operation": self.operation,
            "instances": self.instances,
            "axioms": {
                name: {
                    "pass": not self.failures[name],
                    "checked": self.checked[name],
                    "failures": [
                        {k: _text(v) if isinstance(v, MonomialIdeal) else v for k, v in w.items()}
                        for w in self.failures[name]
                    ],
                }
                for name in self.checked
            },
        }


def check_closure_axioms(c: ClosureOperation, instances: Sequence[MonomialIdeal]) -> AxiomReport:
    """Extensivity, idempotence, and monotonicity over comparable pairs."""
    report = AxiomReport(c.name, len(instances))
    closed = [c(ideal) for ideal in instances]
    for ideal, cl in zip(instances, closed):
        report.record("extensive", ideal.issubset(cl), ideal=ideal, closure=cl)
        report.record("idempotent", c(cl) == cl, ideal=ideal, closure=cl)
    for (i, a), (j, b) in combinations(enumerate(instances), 2):
        for small, big, cs, cb in ((a, b, closed[i], closed[j]), (b, a, closed[j], closed[i])):
            if small.n == big.n and small.issubset(big):
                report.record("monotone", cs.issubset(cb), smaller=small, larger=big)
    report.checked.setdefault("monotone", 0)
    report.failures.setdefault("monotone", [])
    return report


def random_generator_subsets(ideal: MonomialIdeal, rng: random.Random, count: int) -> list[MonomialIdeal]:
    gens = ideal.generators
    out = []
    for _ in range(count):
        k = rng.randint(1, max(1, len(gens) - 1)) if len(gens) > 1 else 1
        out.append(minimalize(rng.sample(gens, k), ideal.n))
    return out


def check_special_axioms(
    c: ClosureOperation, instances: Sequence[MonomialIdeal], pairs: int = 500, seed: int = 0
) -> AxiomReport:
    """The four special-part axioms.

    Axiom 4 is sampled: ``pairs`` draws of a generator subset ``J`` of some
    instance ``I`` (plus ``J = 0`` and ``J = I`` for every instance).  When
    ``I ⊆ c(J + sp(I))`` the check requires ``I ⊆ c(J)``.
    """
    report = AxiomReport(c.name, len(instances))
    for ideal in instances:
        sp = c.special_part(ideal)
        cl = c(ideal)
        report.record("submodule", minimalize(sp.generators, ideal.n) == sp, ideal=ideal, special=sp)
        report.record("contains_mI", m_times(ideal).issubset(sp), ideal=ideal, special=sp)
        report.record("inside_closure", sp.issubset(cl), ideal=ideal, special=sp)
        report.record("contains_m_closure", m_times(cl).issubset(sp), ideal=ideal, special=sp)
        report.record("closure_invariant", c.special_part(cl) == sp, ideal=ideal, special=sp)
        report.record("closed", c(sp) == sp, ideal=ideal, special=sp)

    rng = random.Random(seed)
    samples: list[tuple[MonomialIdeal, MonomialIdeal]] = []
    for ideal in instances:
        samples.append((MonomialIdeal(ideal.n, ()), ideal))
        samples.append((ideal, ideal))
    for _ in range(pairs):
        ideal = rng.choice(list(instances))
        samples.append((random_generator_subsets(ideal, rng, 1)[0], ideal))
    engaged = 0
    for sub, ideal in samples:
        hypothesis = ideal.issubset(c(sub + c.special_part(ideal)))
        if hypothesis:
            engaged += 1
        report.record("nakayama", not hypothesis or ideal.issubset(c(sub)), subset=sub, ideal=ideal)
    report.checked["nakayama_hypothesis_met"] = engaged
    report.failures["nakayama_hypothesis_met"] = []
    return report


def check_nakayama_closure(
    c: ClosureOperation, instances: Sequence[MonomialIdeal], pairs: int = 200, seed: int = 0
) -> AxiomReport:
    """``K ⊆ L ⊆ c(K + mL)`` must force ``c(K) = c(L)``, for generator subsets ``K`` of ``L``."""
    report = AxiomReport(c.name, len(instances))
    rng = random.Random(seed)
    for _ in range(pairs):
        ideal = rng.choice(list(instances))
        sub = random_generator_subsets(ideal, rng, 1)[0]
        hypothesis = ideal.issubset(c(sub + m_times(ideal)))
        report.record("nakayama_closure", not hypothesis or c(sub) == c(ideal), subset=sub, ideal=ideal)
    return report


def degree_lemma_holds(ideal: MonomialIdeal) -> bool:
    """Every generator of sp(I) has degree above the least generator degree of I."""
    low = ideal.min_degree()
    return all(sum(g) > low for g in special_integral_closure(ideal).generators)


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise ValueError("the unit ideal is not allowed here")
    if ideal.is_zero:
        raise ValueError("the zero ideal is not allowed here")


def is_c_independent(gens: Sequence[ExponentVector] | MonomialIdeal, c: ClosureOperation) -> bool:
    """No generator lies in the closure of the ideal generated by the others."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    for i, g in enumerate(gens):
        others = minimalize(gens[:i] + gens[i + 1 :], n)
        if c(others).contains(g):
            return False
    return True


def is_subset_reduction(sub: MonomialIdeal, ideal: MonomialIdeal, c: ClosureOperation) -> bool:
    """``c(sub) = c(ideal)``, decided generator-wise since ``sub ⊆ ideal``."""
    return ideal.issubset(c(sub))


def minimal_subset_reductions(ideal: MonomialIdeal, c: ClosureOperation) -> list[MonomialIdeal]:
    """All generator subsets that are c-reductions with no smaller such subset inside."""
    _require_proper(ideal)
    gens = ideal.generators
    found: list[MonomialIdeal] = []
    status: dict[frozenset, bool] = {}
    for k in range(1, len(gens) + 1):
        for combo in combinations(range(len(gens)), k):
            key = frozenset(combo)
            sub = MonomialIdeal(ideal.n, tuple(gens[i] for i in combo))
            ok = is_subset_reduction(sub, ideal, c)
            status[key] = ok
            if ok and not any(status.get(key - {i}, False) for i in combo):
                found.append(sub)
    return found


def spread_over_subsets(ideal: MonomialIdeal, c: ClosureOperation) -> int | None:
    sizes = {len(r) for r in minimal_subset_reductions(ideal, c)}
    return sizes.pop() if len(sizes) == 1 else None


@dataclass(frozen=True)
class BrianconSkodaReport:
    ideal: MonomialIdeal
    w: int
    n: int
    special_violations: tuple[ExponentVector, ...]
    integral_violations: tuple[ExponentVector, ...]

    @property
    def passed(self) -> bool:
        return not self.special_violations and not self.integral_violations

    def to_json(self) -> dict:
        names = default_names(self.ideal.n)
        return {
            "ideal": _text(self.ideal),
            "w": self.w,
            "n": self.n,
            "special_violations": [format_monomial(a, names) for a in self.special_violations],
            "integral_violations": [format_monomial(a, names) for a in self.integral_violations],
            "pass": self.passed,
        }


def briancon_skoda_check(ideal: MonomialIdeal, w: int) -> BrianconSkodaReport:
    """Replay ``sp(I^(n+w)) ⊆ m I^(w+1)`` and ``closure(I^(n+w)) ⊆ I^(w+1)`` with ``n = μ(I)``."""
    _require_proper(ideal)
    if w < 0:
        raise ValueError("w must be nonnegative")
    n = len(ideal.generators)
    big = power(ideal, n + w)
    target = power(ideal, w + 1)
    m_target = m_times(target)
    sp_bad = tuple(g for g in special_integral_closure(big).generators if not m_target.contains(g))
    int_bad = tuple(g for g in integral_closure(big).generators if not target.contains(g))
    return BrianconSkodaReport(ideal, w, n, sp_bad, int_bad)


@dataclass(frozen=True)
class ConditionStatus:
    """``holds`` is exact when ``bounded`` is False; otherwise it means no witness up to ``n_max``."""

    holds: bool
    bounded: bool
    witness: ExponentVector | None = None
    n: int | None = None

    def to_json(self, names) -> dict:
        return {
            "holds": self.holds,
            "bounded": self.bounded,
            "witness": None if self.witness is None else format_monomial(self.witness, names),
            "n": self.n,
        }


@dataclass(frozen=True)
class EvolutionReport:
    ideal: MonomialIdeal
    sp: ConditionStatus
    ar: ConditionStatus
    nn: ConditionStatus
    bar_independent: bool
    n_max: int

    def to_json(self) -> dict:
        names = default_names(self.ideal.n)
        return {
            "ideal": _text(self.ideal),
            "SP": self.sp.to_json(names),
            "AR": self.ar.to_json(names),
            "NN": self.nn.to_json(names),
            "bar_independent": self.bar_independent,
            "n_max": self.n_max,
        }


def evolution_conditions(ideal: MonomialIdeal, n_max: int = DEFAULT_N_MAX) -> EvolutionReport:
    """Statuses of the (SP), (AR), (NN) conditions and bar-independence.

    Monomials of ``I`` outside ``mI`` are exactly the minimal generators, so
    each condition reduces to asking whether some generator lies in the
    relevant set.  (SP) is decided exactly; (AR) and (NN) search ``n <= n_max``.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    _require_proper(ideal)
    sp_bad = next((g for g in ideal.generators if contains_special_integral(ideal, g)), None)
    sp = ConditionStatus(sp_bad is None, False, sp_bad)

    def search(strict: bool) -> ConditionStatus:
        for g in ideal.generators:
            for k in range(1, n_max + 1):
                target = k if strict else k + 1
                if power_membership(scale(g, k), ideal, target, strict=strict):
                    return ConditionStatus(False, False, g, k)
        return ConditionStatus(True, True)

    return EvolutionReport(ideal, sp, search(True), search(False), is_c_independent(ideal, INTEGRAL), n_max)


@dataclass(frozen=True)
class EquivalenceReport:
    ideal: MonomialIdeal
    upper: tuple[int, ...]
    n_max: int
    agreements: int
    bound_insufficient: tuple[ExponentVector, ...]
    contradictions: tuple[ExponentVector, ...]
    facet_mismatches: tuple[ExponentVector, ...]

    @property
    def passed(self) -> bool:
        return not self.contradictions and not self.facet_mismatches

    @property
    def full_agreement(self) -> bool:
        return self.passed and not self.bound_insufficient

    def to_json(self) -> dict:
        names = default_names(self.ideal.n)
        fmt = lambda pts: [format_monomial(a, names) for a in pts]  # noqa: E731
        return {
            "ideal": _text(self.ideal),
            "box": list(self.upper),
            "n_max": self.n_max,
            "agreements": self.agreements,
            "bound_insufficient": fmt(self.bound_insufficient),
            "contradictions": fmt(self.contradictions),
            "facet_mismatches": fmt(self.facet_mismatches),
            "pass": self.passed,
        }


def reesvalsp_equivalence_check(
    ideal: MonomialIdeal, box: int | Sequence[int], n_max: int = DEFAULT_N_MAX
) -> EquivalenceReport:
    """Compare special-part membership with the ``x^(n*alpha) ∈ I^(n+1)`` search.

    For m-primary ideals the two agree.  The search is bounded, so "LP in,
    search silent" is only a bound problem; "LP out, search found" is a bug.
    In two variables the staircase valuations give a third opinion.
    """
    if not ideal.is_m_primary():
        raise UnsupportedInput("the equivalence check needs an m-primary ideal")
    upper = (box,) * ideal.n if isinstance(box, int) else tuple(box)
    facets = staircase_valuations_2d(ideal) if ideal.n == 2 else None
    agree, short, bad, facet_bad = 0, [], [], []
    for alpha in box_points(upper):
        lp_in = bool(contains_special_integral(ideal, alpha))
        found = eventually_in_higher_power(alpha, ideal, n_max) is not None
        if lp_in == found:
            agree += 1
        elif lp_in:
            short.append(alpha)
        else:
            bad.append(alpha)
        if facets is not None:
            by_facets = all(a * alpha[0] + b * alpha[1] > v for (a, b), v in facets)
            if by_facets != lp_in:
                facet_bad.append(alpha)
    return EquivalenceReport(ideal, upper, n_max, agree, tuple(short), tuple(bad), tuple(facet_bad))
