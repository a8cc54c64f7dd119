"""Edge ideals, symbolic powers and the second-power classification.

For a squarefree monomial ideal the associated primes are exactly the
minimal primes, i.e. the primes generated by minimal vertex covers, so

    I^(n) = intersection over minimal covers C of (x_v : v in C)^n.

``sullivant_member`` decides membership in I^(n) by a different route
(divisor enumeration) and is kept deliberately naive so it can serve as an
oracle for the intersection.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import CrossCheckError, NotThreePartite, TooLarge
from .hypergraph import (
    BadWitness,
    Hypergraph,
    find_bad_subhypergraphs,
    find_r_partition,
    is_uniform,
    minimal_vertex_covers,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    contains,
    equals,
    ideal_sum,
    intersect,
    minimalize,
    power,
    prime_power,
)

DEFAULT_MAX_VERTICES = 14
DEFAULT_MAX_COVERS = 200


def edge_ideal(H: Hypergraph) -> MonomialIdeal:
    n = H.num_vertices
    return minimalize([Monomial.from_support(n, e) for e in H.edges])


def symbolic_power(
    H: Hypergraph,
    n: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_covers: int = DEFAULT_MAX_COVERS,
) -> MonomialIdeal:
    if n < 1:
        raise ValueError("symbolic power requires n >= 1")
    if H.num_vertices > max_vertices:
        raise TooLarge(f"{H.num_vertices} vertices exceeds the limit of {max_vertices}")
    covers = minimal_vertex_covers(H)
    if len(covers) > max_covers:
        raise TooLarge(f"{len(covers)} minimal covers exceeds the limit of {max_covers}")
    # small covers first keeps the running intersection small
    covers.sort(key=lambda c: (len(c), sorted(c)))
    result = None
    for c in covers:
        P = prime_power(H.num_vertices, c, n)
        result = P if result is None else intersect(result, P)
    return result


def _divisors_up_to(m: Monomial, max_degree: int):
    ranges = [range(min(a, max_degree) + 1) for a in m.exponents]
    for b in itertools.product(*ranges):
        if sum(b) <= max_degree:
            yield b


def sullivant_member(H: Hypergraph, m: Monomial, k: int) -> bool:
    """m lies in I^(k) iff m / b is in I for every divisor b of degree <= k - 1.

    The divisor b = 1 is included, so m itself must lie in I.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    masks = H.edge_masks
    for b in _divisors_up_to(m, k - 1):
        support = 0
        for v, (a, d) in enumerate(zip(m.exponents, b)):
            if a > d:
                support |= 1 << v
        if not any(e & support == e for e in masks):
            return False
    return True


@dataclass(frozen=True)
class EqualityReport:
    n: int
    equal: bool
    extra_generators: tuple[Monomial, ...]

    def to_dict(self, names) -> dict:
        return {
            "n": self.n,
            "equal": self.equal,
            "extra_generators": [g.format(names) for g in self.extra_generators],
        }


def check_equality(H: Hypergraph, n: int, **guards) -> EqualityReport:
    """Compare I^(n) against I^n and list the generators of I^(n) not in I^n."""
    symbolic = symbolic_power(H, n, **guards)
    ordinary = power(edge_ideal(H), n)
    extra = tuple(g for g in symbolic.generators if not contains(ordinary, g))
    equal = equals(symbolic, ordinary)
    if equal != (not extra):
        raise CrossCheckError("ordinary power is not contained in the symbolic power")
    return EqualityReport(n, equal, extra)


def _require_three_partite(H: Hypergraph):
    if not is_uniform(H, 3) or find_r_partition(H, 3) is None:
        raise NotThreePartite("hypergraph must be 3-uniform and 3-partite")


def second_symbolic_via_bad(H: Hypergraph) -> MonomialIdeal:
    """I^2 plus the product of the six vertices of every bad subhypergraph."""
    _require_three_partite(H)
    I2 = power(edge_ideal(H), 2)
    sextics = [Monomial.from_support(H.num_vertices, w.vertices) for w in find_bad_subhypergraphs(H)]
    if not sextics:
        return I2
    return ideal_sum(I2, minimalize(sextics))


class Verdict(str, enum.Enum):
    NO_BAD = "NO_BAD"
    ALL_BAD_COMPLEMENTED = "ALL_BAD_COMPLEMENTED"
    BAD_UNCOMPLEMENTED = "BAD_UNCOMPLEMENTED"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witnesses: tuple[BadWitness, ...]
    uncomplemented_witness: BadWitness | None = None

    @property
    def predicts_equal(self) -> bool:
        return self.verdict is not Verdict.BAD_UNCOMPLEMENTED

    def to_dict(self, H: Hypergraph) -> dict:
        return {
            "verdict": self.verdict.value,
            "predicts_equal": self.predicts_equal,
            "witnesses": [w.to_dict(H) for w in self.witnesses],
            "uncomplemented_witness": (
                self.uncomplemented_witness.to_dict(H) if self.uncomplemented_witness else None
            ),
        }


def complementing_edge(H: Hypergraph, witness: BadWitness) -> frozenset[int] | None:
    """An edge E of the witness whose complement in its six vertices is an edge of H."""
    edges = {frozenset(e) for e in H.edges}
    for E in witness.labeled_edges():
        if witness.vertices - E in edges:
            return E
    return None


def classify_3partite_equality(H: Hypergraph) -> Classification:
    """Predict whether I^(2) = I^2 from the bad subhypergraphs of H.

    Equality is predicted unless some bad subhypergraph has no edge whose
    complement (within its six vertices) is also an edge of H.
    """
    _require_three_partite(H)
    witnesses = tuple(find_bad_subhypergraphs(H))
    if not witnesses:
        return Classification(Verdict.NO_BAD, witnesses)
    for w in witnesses:
        if complementing_edge(H, w) is None:
            return Classification(Verdict.BAD_UNCOMPLEMENTED, witnesses, w)
    return Classification(Verdict.ALL_BAD_COMPLEMENTED, witnesses)


def sextics_outside_square(H: Hypergraph) -> list[BadWitness]:
    """Bad subhypergraphs whose six-vertex product is not in I^2.

    For 3-uniform 3-partite H, I^(2) = I^2 exactly when this list is
    empty. Unlike the complementing-edge test, this also accounts for a
    sextic that factors as two edges of H lying outside the bad triple.
    """
    _require_three_partite(H)
    I2 = power(edge_ideal(H), 2)
    return [
        w for w in find_bad_subhypergraphs(H)
        if not contains(I2, Monomial.from_support(H.num_vertices, w.vertices))
    ]
