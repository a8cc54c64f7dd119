"""Path hypergraphs of cycles and rooted trees."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import BadParams, CrossCheckError, NoPathsOfLength, ParseError
from .hypergraph import (
    VERTEX_NAME,
    Hypergraph,
    Partition,
    find_r_partition,
    is_valid_partition,
    validate_simple,
)
from .waldschmidt import waldschmidt_via_chi


def _check_params(n: int, t: int):
    if not (isinstance(n, int) and isinstance(t, int)) or not 2 <= t <= n:
        raise BadParams(f"need integers 2 <= t <= n, got n={n}, t={t}")


def cycle_vertex_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def path_hypergraph_cycle(n: int, t: int) -> Hypergraph:
    """Vertex sets of the t-vertex paths of the cycle x1 - x2 - ... - xn - x1."""
    _check_params(n, t)
    names = cycle_vertex_names(n)
    windows = [[names[(i + j) % n] for j in range(t)] for i in range(n)]
    if t == n:
        windows = windows[:1]
    return validate_simple(windows)


@dataclass(frozen=True)
class RootedTree:
    parent: Mapping[str, str]
    root: str

    def __post_init__(self):
        vertices = set(self.parent) | set(self.parent.values()) | {self.root}
        roots = [v for v in vertices if v not in self.parent]
        if roots != [self.root]:
            raise ParseError(f"tree must have exactly one root, found {sorted(roots)}")
        for v in self.parent:
            seen = {v}
            u = v
            while u in self.parent:
                u = self.parent[u]
                if u in seen:
                    raise ParseError(f"cycle through {v!r}")
                seen.add(u)

    @classmethod
    def from_arcs(cls, arcs) -> "RootedTree":
        parent: dict[str, str] = {}
        order: list[str] = []
        for p, c in arcs:
            if c in parent:
                raise ParseError(f"vertex {c!r} has two parents")
            parent[c] = p
            for v in (p, c):
                if v not in order:
                    order.append(v)
        roots = [v for v in order if v not in parent]
        if len(roots) != 1:
            raise ParseError(f"tree must have exactly one root, found {roots}")
        return cls(parent, roots[0])

    @property
    def vertices(self) -> list[str]:
        out = [self.root]
        for v in out:
            out.extend(self.children(v))
        return out

    def children(self, v: str) -> list[str]:
        return [c for c, p in self.parent.items() if p == v]


def parse_tree(text: str) -> RootedTree:
    """Parse ``parent -> child`` lines (``#`` comments) or JSON ``{"arcs": [[p, c], ...]}``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        arcs = data.get("arcs") if isinstance(data, dict) else None
        if not isinstance(arcs, list) or not all(isinstance(a, list) and len(a) == 2 for a in arcs):
            raise ParseError('JSON tree must be an object with an "arcs" list of [parent, child]')
        return RootedTree.from_arcs([tuple(a) for a in arcs])
    arcs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        p, sep, c = line.partition("->")
        p, c = p.strip(), c.strip()
        if not sep or not VERTEX_NAME.match(p) or not VERTEX_NAME.match(c):
            raise ParseError(f"expected 'parent -> child', got {line!r}", lineno)
        arcs.append((p, c))
    if not arcs:
        raise ParseError("no arcs found")
    return RootedTree.from_arcs(arcs)


def load_tree(path) -> RootedTree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def path_hypergraph_tree(T: RootedTree, t: int) -> Hypergraph:
    """Vertex sets of all downward (ancestor to descendant) paths on t vertices.

    Vertices lying on no such path do not appear in the hypergraph.
    """
    if t < 2:
        raise BadParams(f"t must be >= 2, got {t}")
    paths = []

    def walk(path):
        if len(path) == t:
            paths.append(list(path))
            return
        for c in T.children(path[-1]):
            walk(path + [c])

    for v in T.vertices:
        walk([v])
    if not paths:
        raise NoPathsOfLength(f"tree has no downward path on {t} vertices")
    return validate_simple(paths)


def residue_partition(n: int, t: int) -> Partition:
    """Blocks {x_g : g = i mod t} for i = 1..t (vertex x_g has id g - 1)."""
    return Partition(tuple(frozenset(g - 1 for g in range(1, n + 1) if g % t == i % t) for i in range(1, t + 1)))


def check_t_partite_cycle(n: int, t: int, cross_check: bool = False) -> tuple[bool, Partition | None]:
    """Decide t-partiteness of the cycle path hypergraph via the residue partition.

    Any t-partition is forced to be the residue one, so it is valid exactly
    when a t-partition exists. ``cross_check`` also runs the backtracking
    search and raises if the two disagree.
    """
    H = path_hypergraph_cycle(n, t)
    P = residue_partition(n, t)
    ok = is_valid_partition(H, P)
    if cross_check and ok != (find_r_partition(H, t) is not None):
        raise CrossCheckError(f"residue construction and search disagree for n={n}, t={t}")
    return ok, (P if ok else None)


def waldschmidt_cycle_path(n: int, t: int, cross_check: bool = False) -> Fraction:
    """t when t divides n, otherwise n / (floor(n / t) + 1)."""
    _check_params(n, t)
    q, r = divmod(n, t)
    value = Fraction(t) if r == 0 else Fraction(n, q + 1)
    if cross_check and waldschmidt_via_chi(path_hypergraph_cycle(n, t)) != value:
        raise CrossCheckError(f"closed form disagrees with the LP route for n={n}, t={t}")
    return value
