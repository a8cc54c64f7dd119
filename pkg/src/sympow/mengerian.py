"""Bounded checks of the Mengerian min-max property.

For a demand vector c >= 0 we compare

    min { c.x : A x >= 1, x in N^n }     (weighted vertex cover)
    max { y.1 : y A <= c, y in N^m }     (c-matching of edges)

where A is the edge-vertex incidence matrix. Only finitely many c are
tried, so a clean report is evidence, not proof.

Reductions used: a cover never needs a multiplicity above 1 (each row of
A is 0/1 and asks for a total of 1), and with c >= 0 some minimal cover is
optimal. An edge e appears with coefficient 1 in the constraint of each of
its vertices, so y_e <= max(c).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CrossCheckError, InputError, TooLarge
from .hypergraph import Hypergraph, edge_vertex_incidence, minimal_vertex_covers

DEFAULT_MAX_VERTICES = 10
DEFAULT_MAX_C = 3
# upper limit on enumerated matching vectors in a sweep
MAX_MATCHING_VECTORS = 2_000_000


def _check_demand(H: Hypergraph, c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(int(v) for v in c)
    if len(c) != H.num_vertices or any(v < 0 for v in c):
        raise InputError(f"demand vector must have {H.num_vertices} non-negative entries")
    return c


def ip_min_cover(H: Hypergraph, c: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Exhaustive search over 0/1 vectors; ties go to the smallest bitmask."""
    c = _check_demand(H, c)
    n = H.num_vertices
    masks = H.edge_masks
    best, best_mask = None, None
    for mask in range(1 << n):
        if all(e & mask for e in masks):
            cost = sum(c[v] for v in range(n) if mask >> v & 1)
            if best is None or cost < best:
                best, best_mask = cost, mask
    return best, tuple(best_mask >> v & 1 for v in range(n))


def ip_max_matching(H: Hypergraph, c: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Depth-first search over edge multiplicities with capacities c."""
    c = _check_demand(H, c)
    m = H.num_edges
    cap = list(c)
    y = [0] * m
    best = [-1, None]
    suffix = [0] * (m + 1)  # crude bound: remaining edges could each take max(c)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + max(c[v] for v in H.edges[i])

    def dfs(i, total):
        if total + suffix[i] <= best[0]:
            return
        if i == m:
            best[0], best[1] = total, tuple(y)
            return
        e = H.edges[i]
        top = min(cap[v] for v in e)
        for k in range(top, -1, -1):
            for v in e:
                cap[v] -= k
            y[i] = k
            dfs(i + 1, total + k)
            for v in e:
                cap[v] += k
        y[i] = 0

    dfs(0, 0)
    return best[0], best[1]


@dataclass(frozen=True)
class MengerianReport:
    c_max: int
    tested: int
    failures: tuple[tuple[tuple[int, ...], int, int], ...]

    @property
    def clean(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "c_max": self.c_max,
            "tested": self.tested,
            "clean": self.clean,
            "failures": [
                {"c": list(c), "min_cover": lo, "max_matching": hi} for c, lo, hi in self.failures
            ],
        }


def check_mengerian_upto(
    H: Hypergraph, c_max: int, max_vertices: int = DEFAULT_MAX_VERTICES, max_c: int = DEFAULT_MAX_C
) -> MengerianReport:
    """Compare both optima for every c in {0..c_max}^n.

    Matching optima for all c at once: every y with loads <= c_max is
    scattered onto the grid of load vectors, then a running maximum along
    each axis turns "best at exactly this load" into "best at loads <= c".
    """
    n, m = H.num_vertices, H.num_edges
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the Mengerian limit of {max_vertices}")
    if c_max < 1:
        raise InputError("c_max must be positive")
    if c_max > max_c:
        raise TooLarge(f"c_max={c_max} exceeds the limit of {max_c}")
    if (c_max + 1) ** m > MAX_MATCHING_VECTORS:
        raise TooLarge(f"{m} edges with c_max={c_max} is too many matching vectors")

    A = edge_vertex_incidence(H)
    Y = np.array(list(itertools.product(range(c_max + 1), repeat=m)), dtype=np.int64).reshape(-1, m)
    loads = Y @ A
    feasible = np.all(loads <= c_max, axis=1)
    best = np.full((c_max + 1,) * n, -1, dtype=np.int64)
    np.maximum.at(best, tuple(loads[feasible].T), Y[feasible].sum(axis=1))
    for axis in range(n):
        best = np.maximum.accumulate(best, axis=axis)

    grid = np.array(list(itertools.product(range(c_max + 1), repeat=n)), dtype=np.int64)
    covers = np.zeros((n, len(minimal_vertex_covers(H))), dtype=np.int64)
    for j, C in enumerate(minimal_vertex_covers(H)):
        covers[list(C), j] = 1
    min_cover = (grid @ covers).min(axis=1)
    max_matching = best[tuple(grid.T)]

    if np.any(min_cover < max_matching):
        raise CrossCheckError("weak duality violated")
    failures = tuple(
        (tuple(int(v) for v in grid[i]), int(min_cover[i]), int(max_matching[i]))
        for i in np.flatnonzero(min_cover > max_matching)
    )
    return MengerianReport(c_max, len(grid), failures)
