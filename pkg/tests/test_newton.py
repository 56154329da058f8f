import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spclosure.monomial import box_points, m_times, maximal_ideal, minimalize, power
from spclosure.newton import (
    ConvexCertificate,
    UnsupportedInput,
    contains_integral,
    contains_special_integral,
    decomposition_holds,
    eventually_in_higher_power,
    integral_closure,
    low_points,
    lp_membership,
    special_integral_closure,
    staircase_valuations_2d,
)
from spclosure.oracles import CertificateTable
from spclosure.sampling import random_monomial_ideal

X2Y2 = minimalize([(2, 0), (0, 2)])
X2Y3 = minimalize([(2, 0), (0, 3)])
M2 = maximal_ideal(2)


def oracle_closure(ideal, strict):
    table = CertificateTable(ideal)
    upper = [m + 1 for m in ideal.max_exponents()]
    return minimalize([a for a in box_points(upper) if table.member(a, strict)], ideal.n)


def test_contains_integral_examples():
    res = contains_integral(X2Y2, (1, 1))
    assert res.member and res.certificate.coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert res.certificate.replays(X2Y2, (1, 1))
    assert not contains_integral(X2Y3, (1, 1))
    assert not CertificateTable(X2Y3).member((1, 1))
    res = contains_integral(M2, (1, 0))
    # generators are stored lex-sorted: (0,1) then (1,0)
    assert res.member and res.certificate.coefficients == (0, 1)


def test_contains_special_examples():
    assert not contains_special_integral(X2Y2, (1, 1))
    assert not CertificateTable(X2Y2).member((1, 1), strict=True)
    res = contains_special_integral(X2Y2, (2, 1))
    assert res.member and res.certificate.replays(X2Y2, (2, 1))
    assert res.certificate.strict_coordinate == 1
    res = contains_special_integral(X2Y3, (1, 2))
    assert CertificateTable(X2Y3).member((1, 2), strict=True)
    assert res.member and res.certificate.coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert res.certificate.strict_coordinate == 1
    assert res.certificate.point(X2Y3) == (1, Fraction(3, 2))


def test_closure_examples():
    assert integral_closure(X2Y2) == power(M2, 2)
    assert integral_closure(X2Y3) == minimalize([(2, 0), (1, 2), (0, 3)]) == oracle_closure(X2Y3, False)
    assert integral_closure(M2) == M2
    assert special_integral_closure(X2Y2) == m_times(X2Y2)
    assert special_integral_closure(M2) == power(M2, 2) == oracle_closure(M2, True)
    assert (1, 2) in special_integral_closure(X2Y3).generators


def test_low_points_examples():
    assert low_points(X2Y2) == [(0, 2), (1, 1), (2, 0)]
    assert low_points(X2Y3) == [(0, 3), (2, 0)]
    assert low_points(M2) == [(0, 1), (1, 0)]


def test_decomposition_examples():
    res = decomposition_holds(X2Y2)
    assert not res and res.witness == (1, 1) and res.closure_check
    assert decomposition_holds(X2Y3).holds
    assert decomposition_holds(M2).holds


def test_decomposition_with_non_low_generator():
    # xy^2 sits strictly above (1, 3/2), so it is not a low point, yet the closure is I itself
    I = minimalize([(2, 0), (1, 2), (0, 3)])
    res = decomposition_holds(I)
    assert res.holds and res.closure_check and not res.generators_are_low


def test_errors_on_zero_and_unit():
    for bad in (minimalize([], 2), minimalize([(0, 0)])):
        with pytest.raises(ValueError):
            contains_integral(bad, (1, 1))
        with pytest.raises(ValueError):
            special_integral_closure(bad)


def test_eventually_in_higher_power_examples():
    assert eventually_in_higher_power((1, 1), X2Y2, 10) is None
    n = eventually_in_higher_power((2, 1), X2Y2, 10)
    assert n is not None and n <= 10
    assert eventually_in_higher_power((1, 0), M2, 10) is None
    with pytest.raises(ValueError):
        eventually_in_higher_power((1, 0), M2, 0)


def test_staircase_valuations_examples():
    assert staircase_valuations_2d(X2Y2) == [((1, 1), 2)]
    assert staircase_valuations_2d(M2) == [((1, 1), 1)]
    assert staircase_valuations_2d(minimalize([(3, 0), (0, 2)])) == [((2, 3), 6)]
    with pytest.raises(UnsupportedInput):
        staircase_valuations_2d(minimalize([(2, 0, 0), (0, 2, 0), (0, 0, 2)]))
    with pytest.raises(UnsupportedInput):
        staircase_valuations_2d(minimalize([(2, 1), (0, 2)]))


def test_certificate_json_round_trip():
    cert = ConvexCertificate((Fraction(1, 2), Fraction(1, 2)), 1)
    data = json.loads(cert.dumps())
    assert data == {"coefficients": ["1/2", "1/2"], "strict_coordinate": 2}
    assert ConvexCertificate.from_json(data) == cert


def test_threads_do_not_change_result():
    I = minimalize([(3, 0, 1), (0, 2, 2), (1, 1, 0)])
    assert integral_closure(I, threads=4) == integral_closure(I)
    assert special_integral_closure(I, threads=3) == special_integral_closure(I)


ideals_2d = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(any), min_size=1, max_size=3)
ideals_3d = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(any), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(st.one_of(ideals_2d, ideals_3d))
def test_lp_agrees_with_certificate_enumeration(gens):
    I = minimalize(gens)
    table = CertificateTable(I)
    for alpha in box_points([m + 1 for m in I.max_exponents()]):
        plain, strict = lp_membership(I, alpha), lp_membership(I, alpha, strict=True)
        assert bool(plain) == table.member(alpha)
        assert bool(strict) == table.member(alpha, strict=True)
        if plain:
            assert plain.certificate.replays(I, alpha)
        if strict:
            assert strict.certificate.replays(I, alpha)
        # the shortcut paths give the same verdicts
        assert bool(contains_integral(I, alpha)) == bool(plain)
        assert bool(contains_special_integral(I, alpha)) == bool(strict)


@settings(max_examples=40, deadline=None)
@given(st.one_of(ideals_2d, ideals_3d))
def test_closure_is_a_closure(gens):
    I = minimalize(gens)
    bar = integral_closure(I)
    assert I.issubset(bar)
    assert integral_closure(bar) == bar
    sp = special_integral_closure(I)
    assert m_times(I).issubset(sp) and sp.issubset(bar)
    assert m_times(bar).issubset(sp)
    assert special_integral_closure(bar) == sp
    assert integral_closure(sp) == sp


def test_monotone_on_random_pairs():
    rng = random.Random(11)
    for _ in range(30):
        I = random_monomial_ideal(rng, max_exp=5)
        J = minimalize(rng.sample(I.generators, rng.randint(1, len(I.generators))), I.n)
        assert integral_closure(J).issubset(integral_closure(I))
        assert special_integral_closure(J).issubset(special_integral_closure(I))


def test_disjoint_union_in_box():
    rng = random.Random(5)
    for _ in range(20):
        I = random_monomial_ideal(rng, max_exp=4)
        low = set(low_points(I))
        bar, sp = integral_closure(I), special_integral_closure(I)
        for a in box_points([m + 1 for m in I.max_exponents()]):
            assert bar.contains(a) == (sp.contains(a) or a in low)
            assert not (sp.contains(a) and a in low)


def test_bar_independent_ideals_meet_special_part_in_m_times():
    # (x^2, xy) and (x^2, y^3) are bar-independent
    for I in (minimalize([(2, 0), (1, 1)]), X2Y3, minimalize([(1, 0, 0), (0, 2, 0), (0, 0, 3)])):
        sp, mI = special_integral_closure(I), m_times(I)
        for a in box_points([m + 2 for m in I.max_exponents()]):
            if I.contains(a):
                assert sp.contains(a) == mI.contains(a)


def test_asymptotic_lemma_spot_check():
    from spclosure.monomial import scale

    for I in (X2Y2, X2Y3, minimalize([(2, 0), (1, 1)])):
        for alpha in box_points([3, 3]):
            for n0 in (1, 2):
                if integral_closure(m_times(power(I, n0))).contains(scale(alpha, n0)):
                    for n in range(n0, n0 + 4):
                        assert integral_closure(m_times(power(I, n))).contains(scale(alpha, n))


def test_staircase_facets_agree_with_lp():
    for gens in ([(2, 0), (0, 2)], [(3, 0), (0, 2)], [(4, 0), (1, 1), (0, 4)], [(5, 0), (2, 1), (0, 3)]):
        I = minimalize(gens)
        facets = staircase_valuations_2d(I)
        for a in itertools.product(range(7), repeat=2):
            by_facets = all(u * a[0] + v * a[1] > val for (u, v), val in facets)
            assert by_facets == bool(contains_special_integral(I, a))
