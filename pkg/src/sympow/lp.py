"""Exact rational simplex method.

Solves ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``, so the slack
basis is feasible and no phase one is needed. Pivoting follows Bland's
least-index rule, which cannot cycle; with exact fractions there are no
tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Unbounded(ArithmeticError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    optimum: Fraction
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    pivots: int


def simplex_max(
    c: Sequence, A: Sequence[Sequence], b: Sequence
) -> SimplexResult:
    """Maximise ``c.x`` over ``A x <= b, x >= 0``.

    Returns the optimum with an optimal primal ``x`` and an optimal dual
    ``y`` (``y A >= c, y >= 0, y.b = optimum``), read off the final
    objective row.
    """
    m, n = len(A), len(c)
    if len(b) != m or any(len(row) != n for row in A):
        raise ValueError("inconsistent LP dimensions")
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")

    # columns 0..n-1 are structural, n..n+m-1 are slacks
    T = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(A)]
    rhs = [Fraction(v) for v in b]
    obj = [-Fraction(v) for v in c] + [Fraction(0)] * m
    value = Fraction(0)
    basis = list(range(n, n + m))
    pivots = 0

    while True:
        entering = next((j for j, r in enumerate(obj) if r < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded("objective is unbounded")

        piv = T[leave][entering]
        row = [v / piv for v in T[leave]]
        T[leave] = row
        rhs[leave] /= piv
        for i in range(m):
            f = T[i][entering]
            if i != leave and f:
                T[i] = [v - f * w for v, w in zip(T[i], row)]
                rhs[i] -= f * rhs[leave]
        f = obj[entering]
        obj = [v - f * w for v, w in zip(obj, row)]
        value -= f * rhs[leave]
        basis[leave] = entering
        pivots += 1

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rhs[i]
    dual = tuple(obj[n:])
    return SimplexResult(value, tuple(x), dual, pivots)
