from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympow.lp import Unbounded, simplex_max


def test_textbook():
    # max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18
    res = simplex_max([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.optimum == 36
    assert res.primal == (2, 6)
    assert res.dual == (0, Fraction(3, 2), 1)


def test_fractional_optimum():
    res = simplex_max([1, 1], [[2, 1], [1, 2]], [1, 1])
    assert res.optimum == Fraction(2, 3)
    assert res.primal == (Fraction(1, 3), Fraction(1, 3))


def test_zero_rhs():
    res = simplex_max([1], [[1]], [0])
    assert res.optimum == 0


def test_unbounded():
    with pytest.raises(Unbounded):
        simplex_max([1, 1], [[1, -1]], [1])


def test_dimension_checks():
    with pytest.raises(ValueError):
        simplex_max([1, 1], [[1]], [1])
    with pytest.raises(ValueError):
        simplex_max([1], [[1]], [-1])


def test_degenerate_does_not_cycle():
    # a classic cycling instance for the largest-coefficient rule
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    res = simplex_max(c, A, [0, 0, 1])
    assert res.optimum == Fraction(1, 20)


small = st.integers(0, 4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(small, min_size=n, max_size=n),
    st.lists(st.lists(st.integers(1, 4), min_size=n, max_size=n), min_size=1, max_size=4),
    st.lists(small, min_size=4, max_size=4),
)))
def test_strong_duality(data):
    c, A, b = data
    b = b[: len(A)]
    res = simplex_max(c, A, b)
    n, m = len(c), len(A)
    x, y = res.primal, res.dual
    assert all(v >= 0 for v in x) and all(v >= 0 for v in y)
    for i in range(m):
        assert sum(A[i][j] * x[j] for j in range(n)) <= b[i]
    for j in range(n):
        assert sum(y[i] * A[i][j] for i in range(m)) >= c[j]
    assert sum(c[j] * x[j] for j in range(n)) == res.optimum
    assert sum(y[i] * b[i] for i in range(m)) == res.optimum


def test_deterministic():
    args = ([1, 1, 1], [[1, 1, 0], [0, 1, 1], [1, 0, 1]], [1, 1, 1])
    assert simplex_max(*args) == simplex_max(*args)
