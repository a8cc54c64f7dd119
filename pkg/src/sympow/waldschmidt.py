"""Waldschmidt constants and fractional chromatic numbers.

The fractional chromatic number is the optimum of the covering LP

    min sum_S y_S   s.t.  sum_{S containing v} y_S >= 1 for every vertex v,

over the maximal independent sets S. We solve its dual (a fractional
clique problem, whose slack basis is feasible) with the exact simplex and
read the covering weights off the dual solution. The Waldschmidt constant
of the edge ideal is then chi* / (chi* - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossCheckError, NotRPartite, TooLarge, TrivialHypergraph
from .hypergraph import Hypergraph, find_r_partition, is_uniform, maximal_independent_sets
from .lp import simplex_max
from .monomials import alpha
from .symbolic import symbolic_power

DEFAULT_LP_MAX_VERTICES = 14


@dataclass(frozen=True)
class LpSolution:
    optimum: Fraction
    weights: tuple[tuple[frozenset[int], Fraction], ...]
    vertex_weights: tuple[Fraction, ...]

    def verify(self, H: Hypergraph) -> bool:
        """Re-check the certificate exactly.

        The set weights must form a feasible cover summing to the optimum,
        and the vertex weights a feasible fractional clique with the same
        total, which proves optimality by weak duality.
        """
        n = H.num_vertices
        masks = set(H.edge_masks)
        for S, w in self.weights:
            if w < 0:
                return False
            m = sum(1 << v for v in S)
            if any(e & m == e for e in masks):
                return False
        cover = [sum((w for S, w in self.weights if v in S), Fraction(0)) for v in range(n)]
        if any(c < 1 for c in cover):
            return False
        if sum((w for _, w in self.weights), Fraction(0)) != self.optimum:
            return False
        if any(z < 0 for z in self.vertex_weights) or sum(self.vertex_weights) != self.optimum:
            return False
        return all(sum((self.vertex_weights[v] for v in S), Fraction(0)) <= 1 for S in maximal_independent_sets(H))

    def to_dict(self, H: Hypergraph) -> dict:
        return {
            "optimum": fmt_rational(self.optimum),
            "weights": [
                {"set": H.names(sorted(S)), "weight": fmt_rational(w)} for S, w in self.weights
            ],
            "vertex_weights": {
                name: fmt_rational(z) for name, z in zip(H.vertex_names, self.vertex_weights)
            },
        }


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fractional_chromatic(H: Hypergraph, max_vertices: int = DEFAULT_LP_MAX_VERTICES) -> LpSolution:
    if H.num_vertices > max_vertices:
        raise TooLarge(f"{H.num_vertices} vertices exceeds the LP limit of {max_vertices}")
    if any(len(e) == 1 for e in H.edges):
        raise TrivialHypergraph("a singleton edge leaves its vertex in no independent set")
    sets = maximal_independent_sets(H)
    n = H.num_vertices
    A = [[int(v in S) for v in range(n)] for S in sets]
    res = simplex_max([1] * n, A, [1] * len(sets))
    weights = tuple((S, y) for S, y in zip(sets, res.dual) if y)
    sol = LpSolution(res.optimum, weights, res.primal)
    if not sol.verify(H):
        raise CrossCheckError("LP certificate failed verification")
    return sol


def alpha_sequence(H: Hypergraph, m_max: int, **guards) -> list[tuple[int, int]]:
    return [(m, alpha(symbolic_power(H, m, **guards))) for m in range(1, m_max + 1)]


def waldschmidt_via_chi(H: Hypergraph, **lp_guards) -> Fraction:
    if all(len(e) == 1 for e in H.edges):
        raise TrivialHypergraph("every edge is a singleton")
    if any(len(e) == 1 for e in H.edges):
        # a singleton edge x gives x^m in every I^(m) and nothing of lower degree
        return Fraction(1)
    chi = fractional_chromatic(H, **lp_guards).optimum
    return chi / (chi - 1)


def waldschmidt_r_partite(H: Hypergraph, r: int, cross_check: bool = True) -> Fraction:
    if not is_uniform(H, r) or find_r_partition(H, r) is None:
        raise NotRPartite(f"hypergraph is not {r}-uniform and {r}-partite")
    value = Fraction(r)
    if cross_check and waldschmidt_via_chi(H) != value:
        raise CrossCheckError(f"r-partite value {r} disagrees with the LP route")
    return value


def waldschmidt_upper_bounds(H: Hypergraph, m_max: int, **guards) -> list[Fraction]:
    """alpha(I^(m)) / m for m = 1..m_max; each bounds the constant from above."""
    return [Fraction(a, m) for m, a in alpha_sequence(H, m_max, **guards)]
