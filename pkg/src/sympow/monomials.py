"""Monomials and monomial ideals over a fixed set of variables.

Ideals are always stored by their minimal generating set, which is unique
for monomial ideals, so equality of ideals is equality of generator tuples.
Generators are ordered by degree, then lexicographically with the first
variable largest (``x^2 > xy > y^2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import MixedAmbient, ZeroIdeal

# keeps numpy int64 sums far from wrapping; larger exponents raise instead
MAX_EXPONENT = 2**31


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        for a in self.exponents:
            if a < 0:
                raise ValueError("exponents must be non-negative")
            if a >= MAX_EXPONENT:
                raise OverflowError(f"exponent {a} exceeds {MAX_EXPONENT - 1}")

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def from_support(cls, nvars: int, support: Iterable[int]) -> "Monomial":
        exps = [0] * nvars
        for v in support:
            exps[v] += 1
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.exponents) if a)

    def _check(self, other: "Monomial"):
        if self.nvars != other.nvars:
            raise MixedAmbient(f"{self.nvars} vs {other.nvars} variables")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("divisor does not divide")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def format(self, names: Sequence[str] | None = None) -> str:
        """Render as ``x1^2*x3``; the unit monomial is ``1``."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for name, a in zip(names, self.exponents):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({self.format()})"


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    text = text.strip()
    exps = [0] * len(names)
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        name, _, power = factor.strip().partition("^")
        try:
            v = list(names).index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None
        exps[v] += int(power) if power else 1
    return Monomial(tuple(exps))


def _sort_key(row: Sequence[int]):
    return (sum(row), tuple(-a for a in row))


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Rows of ``rows`` not divisible by any other row, deduplicated."""
    if len(rows) == 0:
        return rows
    rows = np.unique(rows, axis=0)
    rows = rows[np.argsort(rows.sum(axis=1), kind="stable")]
    kept = np.empty_like(rows)
    count = 0
    for row in rows:
        if count and np.any(np.all(kept[:count] <= row, axis=1)):
            continue
        kept[count] = row
        count += 1
    return kept[:count]


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[Monomial, ...]

    @classmethod
    def _from_rows(cls, nvars: int, rows: np.ndarray) -> "MonomialIdeal":
        rows = _minimal_rows(rows)
        gens = sorted((tuple(int(a) for a in r) for r in rows), key=_sort_key)
        return cls(nvars, tuple(Monomial(g) for g in gens))

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial.one(nvars),))

    def rows(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.nvars), dtype=np.int64)
        return np.array([g.exponents for g in self.generators], dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def format(self, names: Sequence[str] | None = None) -> list[str]:
        return [g.format(names) for g in self.generators]

    def __repr__(self):
        return "MonomialIdeal(" + ", ".join(self.format()) + ")"


def _ambient(items) -> int:
    sizes = {x.nvars for x in items}
    if len(sizes) != 1:
        raise MixedAmbient(f"mixed variable counts {sorted(sizes)}")
    return sizes.pop()


def minimalize(gens: Iterable[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators.

    ``nvars`` is needed only when ``gens`` is empty (the zero ideal).
    """
    gens = list(gens)
    if not gens:
        if nvars is None:
            raise ValueError("nvars is required for an empty generator set")
        return MonomialIdeal.zero(nvars)
    n = _ambient(gens)
    if nvars is not None and nvars != n:
        raise MixedAmbient(f"expected {nvars} variables, got {n}")
    return MonomialIdeal._from_rows(n, np.array([g.exponents for g in gens], dtype=np.int64))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _ambient([I, J])
    return MonomialIdeal._from_rows(n, np.vstack([I.rows(), J.rows()]))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _ambient([I, J])
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    a, b = I.rows(), J.rows()
    rows = (a[:, None, :] + b[None, :, :]).reshape(-1, n)
    return MonomialIdeal._from_rows(n, rows)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError("power requires n >= 1")
    result = I
    for _ in range(n - 1):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _ambient([I, J])
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    a, b = I.rows(), J.rows()
    rows = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, n)
    return MonomialIdeal._from_rows(n, rows)


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), generated by the generators of I with m divided out where possible."""
    n = _ambient([I, m])
    if I.is_zero:
        return I
    rows = np.maximum(I.rows() - np.array(m.exponents, dtype=np.int64), 0)
    return MonomialIdeal._from_rows(n, rows)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    _ambient([I, m])
    return any(g.divides(m) for g in I.generators)


def alpha(I: MonomialIdeal) -> int:
    """Least degree of a nonzero element."""
    if I.is_zero:
        raise ZeroIdeal("alpha of the zero ideal is undefined")
    return min(g.degree for g in I.generators)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _ambient([I, J])
    return I.generators == J.generators


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J."""
    _ambient([I, J])
    return all(contains(J, g) for g in I.generators)


def prime_power(nvars: int, variables: Iterable[int], n: int) -> MonomialIdeal:
    """All degree-n monomials in ``variables``: the n-th power of their prime."""
    variables = sorted(set(variables))
    if not variables:
        return MonomialIdeal.zero(nvars)
    rows = []

    def fill(i, remaining, exps):
        if i == len(variables) - 1:
            exps[variables[i]] = remaining
            rows.append(tuple(exps))
            exps[variables[i]] = 0
            return
        for a in range(remaining, -1, -1):
            exps[variables[i]] = a
            fill(i + 1, remaining - a, exps)
        exps[variables[i]] = 0

    fill(0, n, [0] * nvars)
    return MonomialIdeal(nvars, tuple(Monomial(r) for r in sorted(rows, key=_sort_key)))
