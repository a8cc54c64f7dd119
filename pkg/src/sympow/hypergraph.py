"""Simple hypergraphs and their combinatorics.

A :class:`Hypergraph` is immutable and canonical: vertices are numbered in
order of first appearance, every edge is a sorted tuple of vertex ids, and
the edge list is sorted lexicographically. Two inputs describing the same
edge list in the same order therefore produce equal objects, which is what
the golden-report tests rely on.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    EmptyEdge,
    IsolatedVertex,
    NestedEdges,
    NotUniform,
    ParseError,
    TooLarge,
)

VERTEX_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

DEFAULT_TRANSITIVITY_BOUND = 10


@dataclass(frozen=True)
class Hypergraph:
    vertex_names: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(_mask(e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def index(self, name: str) -> int:
        return self.vertex_names.index(name)

    def names(self, ids: Iterable[int]) -> list[str]:
        return [self.vertex_names[v] for v in ids]

    def named_edges(self) -> list[list[str]]:
        return [self.names(e) for e in self.edges]

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def _serial_edges(self) -> list[list[str]]:
        """Edges in an order whose first appearances reproduce the vertex ids.

        Greedily takes the least edge whose unseen vertices are exactly the
        next ids; the order the edges were first read in shows one always
        exists. Re-parsing the output therefore gives back ``self``.
        """
        remaining = list(self.edges)
        seen = 0
        out = []
        while remaining:
            for i, e in enumerate(remaining):
                new = [v for v in e if v >= seen]
                if new == list(range(seen, seen + len(new))):
                    break
            else:  # pragma: no cover - impossible for validated hypergraphs
                raise AssertionError("no edge continues the vertex order")
            out.append(self.names(remaining.pop(i)))
            seen += len(new)
        return out

    def to_text(self) -> str:
        return "".join("edge: " + " ".join(names) + "\n" for names in self._serial_edges())

    def to_json(self) -> str:
        return json.dumps({"edges": self._serial_edges()})

    def digest(self) -> str:
        """SHA-256 of the canonical text form."""
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    def add_edges(self, new_edges: Iterable[Iterable[str]]) -> "Hypergraph":
        extra = [sorted(e) if isinstance(e, (set, frozenset)) else list(e) for e in new_edges]
        names = dict.fromkeys(self.vertex_names)
        names.update(dict.fromkeys(n for e in extra for n in e))
        return validate_simple(self.named_edges() + extra, list(names))

    def __repr__(self):
        body = ", ".join("{" + ",".join(names) + "}" for names in self.named_edges())
        return f"Hypergraph({body})"


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def _ids(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _ordered_names(edge) -> list[str]:
    # Python sets have no stable order; fall back to sorting their members.
    if isinstance(edge, (set, frozenset)):
        items = sorted(edge)
    else:
        items = list(edge)
    seen = []
    for name in items:
        if name not in seen:
            seen.append(name)
    return seen


def validate_simple(
    raw_edges: Sequence[Iterable[str]],
    vertices: Sequence[str] | None = None,
    lines: Sequence[int] | None = None,
) -> Hypergraph:
    """Build a canonical simple hypergraph from edges given as vertex names.

    ``vertices`` optionally declares the vertex set and its order; every
    declared vertex must lie on some edge. ``lines`` gives source line
    numbers for messages.
    """

    def where(i):
        return f"line {lines[i]}: " if lines is not None else ""

    named = [_ordered_names(e) for e in raw_edges]
    for i, e in enumerate(named):
        if not e:
            raise EmptyEdge(f"{where(i)}hypergraph edges must be nonempty")
        for name in e:
            if not isinstance(name, str):
                raise ParseError(f"vertex names must be strings, got {name!r}")

    order: dict[str, int] = {}
    for e in named:
        for name in e:
            order.setdefault(name, len(order))
    if vertices is not None:
        unused = [v for v in vertices if v not in order]
        if unused:
            raise IsolatedVertex(f"declared vertices lie on no edge: {unused}")
        undeclared = [v for v in order if v not in set(vertices)]
        if undeclared:
            raise ParseError(f"edges use undeclared vertices: {undeclared}")
        order = {name: i for i, name in enumerate(dict.fromkeys(vertices))}

    edge_sets = [frozenset(order[name] for name in e) for e in named]
    seen: set[frozenset] = set()
    for i, (e, names) in enumerate(zip(edge_sets, named)):
        if e in seen:
            raise DuplicateEdge(f"{where(i)}edge {{{','.join(names)}}} appears twice")
        seen.add(e)
    for a, b in itertools.permutations(range(len(edge_sets)), 2):
        if edge_sets[a] < edge_sets[b]:
            raise NestedEdges(named[a], named[b], where(max(a, b)))

    names = tuple(order)
    edges = tuple(sorted(tuple(sorted(e)) for e in edge_sets))
    return Hypergraph(names, edges)


def parse_text(text: str) -> Hypergraph:
    edges, lines = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep or key.strip() != "edge":
            raise ParseError(f"expected 'edge: v1 v2 ...', got {line!r}", lineno)
        names = rest.split()
        if not names:
            raise ParseError("edge has no vertices", lineno)
        for name in names:
            if not VERTEX_NAME.match(name):
                raise ParseError(f"invalid vertex name {name!r}", lineno)
        edges.append(names)
        lines.append(lineno)
    if not edges:
        raise ParseError("no edges found")
    return validate_simple(edges, lines=lines)


def parse_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
        raise ParseError('JSON hypergraph must be an object with an "edges" list')
    for e in data["edges"]:
        if not isinstance(e, list):
            raise ParseError("each edge must be a list of vertex names")
        for name in e:
            if not isinstance(name, str) or not VERTEX_NAME.match(name):
                raise ParseError(f"invalid vertex name {name!r}")
    if not data["edges"]:
        raise ParseError("no edges found")
    return validate_simple(data["edges"], data.get("vertices"))


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse either accepted file format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def is_uniform(H: Hypergraph, r: int) -> bool:
    return all(len(e) == r for e in H.edges)


# --- r-partitions -----------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    blocks: tuple[frozenset[int], ...]

    def block_of(self, v: int) -> int:
        for i, block in enumerate(self.blocks):
            if v in block:
                return i
        raise KeyError(v)

    def named_blocks(self, H: Hypergraph) -> list[list[str]]:
        return [H.names(sorted(b)) for b in self.blocks]


def is_valid_partition(H: Hypergraph, partition: Partition) -> bool:
    """Check disjointness, coverage, and that each edge meets each block once."""
    blocks = partition.blocks
    union: set[int] = set()
    for b in blocks:
        if union & b:
            return False
        union |= b
    if union != set(range(H.num_vertices)):
        return False
    return all(len(b & set(e)) == 1 for e in H.edges for b in blocks)


def find_r_partition(H: Hypergraph, r: int) -> Partition | None:
    """Return an r-partition of an r-uniform hypergraph, or None.

    Backtracks over vertices in id order, trying blocks in index order,
    so the answer is deterministic.
    """
    if not is_uniform(H, r):
        raise NotUniform(f"hypergraph is not {r}-uniform")
    n = H.num_vertices
    incident = [[e for e in H.edges if v in e] for v in range(n)]
    colour = [-1] * n

    def ok(v, c):
        return all(colour[u] != c for e in incident[v] for u in e if u != v)

    def place(v, opened):
        if v == n:
            return True
        # blocks are interchangeable: only the next unopened block is worth trying
        for c in range(min(opened + 1, r)):
            if ok(v, c):
                colour[v] = c
                if place(v + 1, max(opened, c + 1)):
                    return True
        colour[v] = -1
        return False

    if not place(0, 0):
        return None
    return Partition(tuple(frozenset(v for v in range(n) if colour[v] == c) for c in range(r)))


# --- covers and independent sets ---------------------------------------------


def minimal_cover_masks(H: Hypergraph) -> list[int]:
    """Minimal transversals as bitmasks, by expanding the product of edges."""
    covers = {0}
    for e, emask in zip(H.edges, H.edge_masks):
        grown = set()
        for c in covers:
            if c & emask:
                grown.add(c)
            else:
                grown.update(c | (1 << v) for v in e)
        covers = _minimal_masks(grown)
    return sorted(covers, key=lambda m: _ids(m))


def _minimal_masks(masks: Iterable[int]) -> set[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: bin(m).count("1")):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return set(kept)


def minimal_vertex_covers(H: Hypergraph) -> list[frozenset[int]]:
    return [frozenset(_ids(m)) for m in minimal_cover_masks(H)]


def maximal_independent_sets(H: Hypergraph) -> list[frozenset[int]]:
    """Complements of the minimal vertex covers, in the same order."""
    full = (1 << H.num_vertices) - 1
    return [frozenset(_ids(full & ~m)) for m in minimal_cover_masks(H)]


def is_independent(H: Hypergraph, vertices: Iterable[int]) -> bool:
    m = _mask(vertices)
    return not any(e & m == e for e in H.edge_masks)


def independence_number(H: Hypergraph) -> tuple[int, frozenset[int]]:
    """Largest independent set size, with the lexicographically least witness."""
    best = max(len(s) for s in maximal_independent_sets(H))
    witness = min(tuple(sorted(s)) for s in maximal_independent_sets(H) if len(s) == best)
    return best, frozenset(witness)


# --- bad subhypergraphs of length 3 ------------------------------------------


BAD_EDGES = ((0, 1, 2), (2, 3, 4), (4, 5, 1))  # roles x1..x6 as 0..5


@dataclass(frozen=True)
class BadWitness:
    """Three edges forming {x1,x2,x3}, {x3,x4,x5}, {x5,x6,x2}.

    ``labeling[i]`` is the vertex id playing role x_{i+1}.
    """

    edge_indices: tuple[int, int, int]
    labeling: tuple[int, int, int, int, int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.labeling)

    def role(self, k: int) -> int:
        return self.labeling[k - 1]

    def roles(self) -> dict[str, int]:
        return {f"x{i + 1}": v for i, v in enumerate(self.labeling)}

    def labeled_edges(self) -> list[frozenset[int]]:
        return [frozenset(self.labeling[i] for i in e) for e in BAD_EDGES]

    def verify(self, H: Hypergraph) -> bool:
        if len(set(self.labeling)) != 6 or len(set(self.edge_indices)) != 3:
            return False
        actual = [frozenset(H.edges[i]) for i in self.edge_indices]
        if actual != self.labeled_edges():
            return False
        e1, e2, e3 = actual
        x = self.roles()
        return (
            e1 & e2 == {x["x3"]}
            and e2 & e3 == {x["x5"]}
            and e3 & e1 == {x["x2"]}
            and not (e1 & e2 & e3)
        )

    def to_dict(self, H: Hypergraph) -> dict:
        return {
            "edges": list(self.edge_indices),
            "roles": {k: H.vertex_names[v] for k, v in self.roles().items()},
        }


def _bad_triple(H: Hypergraph, i: int, j: int, k: int) -> BadWitness | None:
    e1, e2, e3 = (set(H.edges[t]) for t in (i, j, k))
    if not (len(e1) == len(e2) == len(e3) == 3):
        return None
    a, b, c = e1 & e2, e2 & e3, e3 & e1
    if not (len(a) == len(b) == len(c) == 1) or len(a | b | c) != 3:
        return None
    (x3,), (x5,), (x2,) = a, b, c
    (x1,) = e1 - {x2, x3}
    (x4,) = e2 - {x3, x5}
    (x6,) = e3 - {x5, x2}
    return BadWitness((i, j, k), (x1, x2, x3, x4, x5, x6))


def find_bad_subhypergraphs(H: Hypergraph) -> list[BadWitness]:
    found = []
    for i, j, k in itertools.combinations(range(H.num_edges), 3):
        w = _bad_triple(H, i, j, k)
        if w is not None:
            found.append(w)
    return found


# --- automorphisms ------------------------------------------------------------


def is_automorphism(H: Hypergraph, perm: Sequence[int]) -> bool:
    edges = set(H.edges)
    return all(tuple(sorted(perm[v] for v in e)) in edges for e in H.edges)


def _automorphism_sending(H: Hypergraph, src: int, dst: int) -> list[int] | None:
    n = H.num_vertices
    edge_set = set(H.edge_masks)
    deg = H.degrees
    if deg[src] != deg[dst]:
        return None
    order = [src] + [v for v in range(n) if v != src]
    # edges become checkable as soon as their last vertex (in `order`) is placed
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H.edges:
        closing[max(pos[v] for v in e)].append(e)
    image = [-1] * n
    used = [False] * n

    def extend(step):
        if step == n:
            return True
        v = order[step]
        candidates = [dst] if step == 0 else range(n)
        for w in candidates:
            if used[w] or deg[w] != deg[v]:
                continue
            image[v] = w
            if all(_mask(image[u] for u in e) in edge_set for e in closing[step]):
                used[w] = True
                if extend(step + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return list(image) if extend(0) else None


def is_vertex_transitive(H: Hypergraph, bound: int = DEFAULT_TRANSITIVITY_BOUND) -> bool:
    """True iff the automorphism group is transitive on vertices.

    Searches permutations by backtracking, pruning on degrees and on edges
    whose image is already determined.
    """
    if H.num_vertices > bound:
        raise TooLarge(f"{H.num_vertices} vertices exceeds transitivity bound {bound}")
    return all(_automorphism_sending(H, 0, v) is not None for v in range(1, H.num_vertices))


def edge_vertex_incidence(H: Hypergraph) -> np.ndarray:
    A = np.zeros((H.num_edges, H.num_vertices), dtype=np.int64)
    for i, e in enumerate(H.edges):
        A[i, list(e)] = 1
    return A
