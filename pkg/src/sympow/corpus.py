"""Named hypergraphs and exhaustive families of small instances."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import networkx as nx

from .errors import NoPathsOfLength
from .hypergraph import Hypergraph, find_r_partition, validate_simple
from .paths import RootedTree, path_hypergraph_tree


def bad_hypergraph() -> Hypergraph:
    return validate_simple([["x1", "x2", "x3"], ["x3", "x4", "x5"], ["x5", "x6", "x2"]])


def cycle_graph(n: int) -> Hypergraph:
    names = [f"x{i}" for i in range(1, n + 1)]
    return validate_simple([[names[i], names[(i + 1) % n]] for i in range(n)])


def triangle() -> Hypergraph:
    return validate_simple([["a", "b"], ["b", "c"], ["c", "a"]])


def complete_multipartite(sizes: Sequence[int]) -> Hypergraph:
    """Every edge takes one vertex from each part; parts are named a, b, c, ..."""
    parts = [[f"{chr(ord('a') + i)}{j + 1}" for j in range(k)] for i, k in enumerate(sizes)]
    return validate_simple([list(e) for e in itertools.product(*parts)])


def _incidence_graph(edges) -> nx.Graph:
    G = nx.Graph()
    for i, e in enumerate(edges):
        G.add_node(("e", i), kind="e")
        for v in e:
            G.add_node(("v", v), kind="v")
            G.add_edge(("e", i), ("v", v))
    return G


class _IsoPool:
    """Keeps one representative per isomorphism class."""

    def __init__(self):
        self.buckets: dict[str, list[nx.Graph]] = {}

    def add(self, edges) -> bool:
        G = _incidence_graph(edges)
        key = nx.weisfeiler_lehman_graph_hash(G, node_attr="kind", iterations=4)
        bucket = self.buckets.setdefault(key, [])
        match = nx.algorithms.isomorphism.categorical_node_match("kind", None)
        if any(nx.is_isomorphic(G, other, node_match=match) for other in bucket):
            return False
        bucket.append(G)
        return True


def _to_hypergraph(edges) -> Hypergraph:
    return validate_simple([[f"v{v}" for v in sorted(e)] for e in edges])


def enumerate_partite_uniform(r: int, max_vertices: int, max_edges: int) -> Iterator[Hypergraph]:
    """All r-uniform r-partite simple hypergraphs up to isomorphism.

    Grown one edge at a time; a new edge may reuse existing vertices and add
    fresh ones. Deleting any edge (and the vertices it alone covered) from
    an instance gives a smaller instance, so the growth reaches everything.
    """
    level = [()]
    for _ in range(max_edges):
        pool = _IsoPool()
        nxt = []
        for edges in level:
            nv = len({v for e in edges for v in e})
            for k in range(r + 1):
                fresh = r - k
                if nv + fresh > max_vertices:
                    continue
                for old in itertools.combinations(range(nv), k):
                    e = frozenset(old) | frozenset(range(nv, nv + fresh))
                    if e in edges:
                        continue
                    cand = edges + (e,)
                    if find_r_partition(_to_hypergraph(cand), r) is None:
                        continue
                    if pool.add(cand):
                        nxt.append(cand)
        for edges in nxt:
            yield _to_hypergraph(edges)
        level = nxt


def _canonical(children: dict, v) -> str:
    return "(" + "".join(sorted(_canonical(children, c) for c in children.get(v, []))) + ")"


def enumerate_rooted_trees(max_vertices: int) -> Iterator[RootedTree]:
    """Unlabeled rooted trees on 2..max_vertices vertices; vertex v0 is the root."""
    level = [{0: []}]
    for size in range(2, max_vertices + 1):
        seen = set()
        nxt = []
        for children in level:
            for v in children:
                grown = {u: list(cs) for u, cs in children.items()}
                grown[v].append(size - 1)
                grown[size - 1] = []
                key = _canonical(grown, 0)
                if key not in seen:
                    seen.add(key)
                    nxt.append(grown)
        for children in nxt:
            yield RootedTree.from_arcs(
                [(f"v{p}", f"v{c}") for p in sorted(children) for c in children[p]]
            )
        level = nxt


def tree_path_hypergraphs(
    max_vertices: int, t_values: Sequence[int] | None = None, unique: bool = True
) -> Iterator[tuple[RootedTree, int, Hypergraph]]:
    """(T, t, H_t(T)) for every rooted tree T on <= max_vertices vertices.

    ``t`` runs over ``t_values`` (default 2..max_vertices), skipping trees
    with no downward t-path. With ``unique`` only the first hypergraph of
    each isomorphism class is kept.
    """
    if t_values is None:
        t_values = range(2, max_vertices + 1)
    pool = _IsoPool()
    for T in enumerate_rooted_trees(max_vertices):
        for t in t_values:
            try:
                H = path_hypergraph_tree(T, t)
            except NoPathsOfLength:
                continue
            if unique and not pool.add([frozenset(e) for e in H.edges]):
                continue
            yield T, t, H
