"""Oriented multigraphs with stable edge identities.

Loops and parallel edges are allowed.  Every operation returns a new graph;
surviving edges keep their identities through deletion, contraction,
restriction and reorientation, so a subset of edges of a minor is literally a
subset of the edge set of the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import GraphFormatError, InvalidInput, UnknownEdgeError

LOOP = "loop"
COLOOP = "coloop"
ORDINARY = "ordinary"


class Edge(NamedTuple):
    id: Hashable
    tail: Hashable
    head: Hashable

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


class Invariants(NamedTuple):
    components: int
    xi: int
    indeg: tuple[int, ...]
    outdeg: tuple[int, ...]


class _DisjointSet:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class OrientedMultigraph:
    """Vertices in canonical (insertion) order and edges ``(id, tail, head)``."""

    vertices: tuple
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        es = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        if len(set(vs)) != len(vs):
            raise InvalidInput("duplicate vertex identity")
        ids = [e.id for e in es]
        if len(set(ids)) != len(ids):
            raise InvalidInput("duplicate edge identity")
        known = set(vs)
        for e in es:
            if e.tail not in known or e.head not in known:
                raise InvalidInput(f"edge {e.id!r} has an endpoint outside the vertex set")

    @classmethod
    def from_pairs(
        cls,
        n_or_vertices: int | Sequence[Hashable],
        pairs: Iterable[tuple[Hashable, Hashable]],
        ids: Iterable[Hashable] | None = None,
    ) -> OrientedMultigraph:
        """Build a graph from ``(tail, head)`` pairs.

        An integer vertex argument means vertices ``1..n``; edge ids default
        to ``1..m`` in the given order.
        """
        if isinstance(n_or_vertices, int):
            vertices = tuple(range(1, n_or_vertices + 1))
        else:
            vertices = tuple(n_or_vertices)
        pairs = list(pairs)
        ids = list(range(1, len(pairs) + 1)) if ids is None else list(ids)
        if len(ids) != len(pairs):
            raise InvalidInput("number of edge ids does not match number of edges")
        return cls(vertices, tuple(Edge(i, u, v) for i, (u, v) in zip(ids, pairs)))

    # -- basic accessors -------------------------------------------------

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge(self, eid) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise UnknownEdgeError(eid)

    def _edge_set(self, S: Iterable[Hashable]) -> frozenset:
        S = frozenset(S)
        known = set(self.edge_ids)
        for eid in S:
            if eid not in known:
                raise UnknownEdgeError(eid)
        return S

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    # -- the four graph operations ---------------------------------------

    def delete(self, S: Iterable[Hashable]) -> OrientedMultigraph:
        S = self._edge_set(S)
        return OrientedMultigraph(self.vertices, tuple(e for e in self.edges if e.id not in S))

    def restrict(self, S: Iterable[Hashable], prune: bool = False) -> OrientedMultigraph:
        """G[S].  The full vertex set is kept unless ``prune`` is set."""
        S = self._edge_set(S)
        g = OrientedMultigraph(self.vertices, tuple(e for e in self.edges if e.id in S))
        return g.prune_isolated() if prune else g

    def contract(self, S: Iterable[Hashable]) -> OrientedMultigraph:
        """G/S: identify the vertices of each component of G[S], drop S.

        A merged vertex is represented by its earliest member in canonical
        order; edges whose endpoints merge become loops.
        """
        S = self._edge_set(S)
        if not S:
            return self
        dsu = _DisjointSet(self.vertices)
        for e in self.edges:
            if e.id in S:
                dsu.union(e.tail, e.head)
        rep = {}
        for v in self.vertices:
            rep.setdefault(dsu.find(v), v)
        to_rep = {v: rep[dsu.find(v)] for v in self.vertices}
        vertices = tuple(v for v in self.vertices if to_rep[v] == v)
        edges = tuple(
            Edge(e.id, to_rep[e.tail], to_rep[e.head]) for e in self.edges if e.id not in S
        )
        return OrientedMultigraph(vertices, edges)

    def reorient(self, sigma: Iterable[Hashable]) -> OrientedMultigraph:
        sigma = self._edge_set(sigma)
        edges = tuple(
            Edge(e.id, e.head, e.tail) if e.id in sigma else e for e in self.edges
        )
        return OrientedMultigraph(self.vertices, edges)

    def prune_isolated(self) -> OrientedMultigraph:
        used = {v for e in self.edges for v in (e.tail, e.head)}
        return OrientedMultigraph(tuple(v for v in self.vertices if v in used), self.edges)

    # -- structure ---------------------------------------------------------

    def component_map(self, skip: Hashable | None = None) -> dict:
        """Map each vertex to a component representative, optionally ignoring one edge."""
        dsu = _DisjointSet(self.vertices)
        for e in self.edges:
            if e.id != skip:
                dsu.union(e.tail, e.head)
        return {v: dsu.find(v) for v in self.vertices}

    @property
    def n_components(self) -> int:
        return len(set(self.component_map().values()))

    @property
    def xi(self) -> int:
        """Cyclotomic number |E| - |V| + c(G)."""
        return self.n_edges - self.n_vertices + self.n_components

    @property
    def rank(self) -> int:
        return self.n_vertices - self.n_components

    def classify_edge(self, eid) -> str:
        e = self.edge(eid)
        if e.is_loop:
            return LOOP
        comp = self.component_map(skip=eid)
        if comp[e.tail] != comp[e.head]:
            return COLOOP
        return ORDINARY

    def invariants(self) -> Invariants:
        idx = self.vertex_index()
        indeg = [0] * len(idx)
        outdeg = [0] * len(idx)
        for e in self.edges:
            outdeg[idx[e.tail]] += 1
            indeg[idx[e.head]] += 1
        return Invariants(self.n_components, self.xi, tuple(indeg), tuple(outdeg))

    def incidence_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows by vertex, columns by edge: -1 at the tail, +1 at the head, loops zero."""
        idx = self.vertex_index()
        rows = [[0] * self.n_edges for _ in self.vertices]
        for j, e in enumerate(self.edges):
            if not e.is_loop:
                rows[idx[e.tail]][j] = -1
                rows[idx[e.head]][j] = 1
        return tuple(tuple(r) for r in rows)

    def apply_incidence(self, values: Sequence[int]) -> tuple[int, ...]:
        """A_G @ values, with ``values`` in canonical edge order."""
        idx = self.vertex_index()
        out = [0] * len(idx)
        for e, x in zip(self.edges, values):
            if not e.is_loop:
                out[idx[e.tail]] -= x
                out[idx[e.head]] += x
        return tuple(out)

    def characteristic_vector(self, sigma: Iterable[Hashable]) -> tuple[int, ...]:
        sigma = self._edge_set(sigma)
        return tuple(1 if e.id in sigma else 0 for e in self.edges)

    def __repr__(self) -> str:
        es = ", ".join(f"{e.id}:{e.tail}->{e.head}" for e in self.edges)
        return f"OrientedMultigraph(V={list(self.vertices)}, E=[{es}])"


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> OrientedMultigraph:
    """Parse ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>``; ``#`` starts a comment line."""
    header = None
    pairs: list[tuple[int, int]] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        last = lineno
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p" or len(parts) != 3:
                raise GraphFormatError("expected header 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("header counts must be non-negative", lineno)
            header = (n, m)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError("expected edge line 'e <u> <v>'", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
        if len(pairs) == header[1]:
            raise GraphFormatError(f"more than {header[1]} edge lines", lineno)
        pairs.append((u, v))
    if header is None:
        raise GraphFormatError("missing header 'p <n> <m>'", last or 1)
    if len(pairs) != header[1]:
        raise GraphFormatError(f"expected {header[1]} edges, found {len(pairs)}", last or 1)
    return OrientedMultigraph.from_pairs(header[0], pairs)


def format_graph(g: OrientedMultigraph) -> str:
    """Inverse of :func:`parse_graph`; vertices are numbered by canonical position."""
    idx = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = [f"p {g.n_vertices} {g.n_edges}"]
    lines += [f"e {idx[e.tail]} {idx[e.head]}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> OrientedMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: OrientedMultigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
