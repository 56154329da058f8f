from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spclosure import lp

scipy_optimize = pytest.importorskip("scipy.optimize")


def test_simple_feasibility():
    # x + y = 1, x - y = 0  ->  x = y = 1/2
    res = lp.solve([[1, 1], [1, -1]], [1, 0])
    assert res.status == lp.OPTIMAL
    assert res.x == (Fraction(1, 2), Fraction(1, 2))


def test_infeasible_and_unbounded():
    assert lp.solve([[1, 1]], [-1]).status == lp.INFEASIBLE
    assert lp.solve([[1, -1]], [0], cost=[1, 1], maximize=True).status == lp.UNBOUNDED


def test_redundant_rows_are_dropped():
    res = lp.solve([[1, 1], [2, 2]], [1, 2], cost=[1, 0])
    assert res.status == lp.OPTIMAL and res.value == 0


def test_degenerate_cycle_example():
    # Beale's cycling example; Bland's rule must terminate
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    res = lp.solve(A, [0, 0, 1], cost=[Fraction(-3, 4), 150, Fraction(-1, 50), 6, 0, 0, 0])
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(-1, 20)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda m: st.tuples(
            st.lists(st.lists(st.integers(-3, 4), min_size=4, max_size=4), min_size=m, max_size=m),
            st.lists(st.integers(-2, 6), min_size=m, max_size=m),
            st.lists(st.integers(-3, 3), min_size=4, max_size=4),
        )
    )
)
def test_agrees_with_floating_point_solver(problem):
    A, b, c = problem
    ours = lp.solve(A, b, c)
    ref = scipy_optimize.linprog(c, A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=[(0, None)] * 4,
                                 method="highs")
    status = {0: lp.OPTIMAL, 2: lp.INFEASIBLE, 3: lp.UNBOUNDED}[ref.status]
    assert ours.status == status
    if status == lp.OPTIMAL:
        assert float(ours.value) == pytest.approx(ref.fun, abs=1e-7)
        for row, rhs in zip(A, b):
            assert sum(Fraction(a) * x for a, x in zip(row, ours.x)) == rhs
        assert all(x >= 0 for x in ours.x)
