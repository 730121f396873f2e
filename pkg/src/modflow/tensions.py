"""Fundamental cycle bases, modular tensions, tension and chromatic polynomials."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Iterator

from . import caps
from .assignments import Coloring, ModularAssignment
from .errors import InvalidInput
from .graph import COLOOP, LOOP, OrientedMultigraph, _DisjointSet
from .polynomials import Polynomial, interpolate

FOREST = "forest"
SCAN = "scan"
ENUMERATE = "enumerate"
DELETION_CONTRACTION = "deletion-contraction"


def spanning_forest(g: OrientedMultigraph) -> tuple:
    """Breadth-first forest from the earliest vertex of each component, ties by edge order."""
    incident = {v: [] for v in g.vertices}
    for e in g.edges:
        if not e.is_loop:
            incident[e.tail].append((e.id, e.head))
            incident[e.head].append((e.id, e.tail))
    chosen = set()
    seen = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            # incident lists are already in canonical edge order
            for eid, w in incident[v]:
                if w not in seen:
                    seen.add(w)
                    chosen.add(eid)
                    queue.append(w)
    return tuple(eid for eid in g.edge_ids if eid in chosen)


def validate_forest(g: OrientedMultigraph, forest: Iterable[Hashable]) -> tuple:
    forest = set(forest)
    known = set(g.edge_ids)
    unknown = forest - known
    if unknown:
        raise InvalidInput(f"forest mentions unknown edges {sorted(unknown, key=str)}")
    dsu = _DisjointSet(g.vertices)
    for e in g.edges:
        if e.id in forest and not dsu.union(e.tail, e.head):
            raise InvalidInput("edge set is not a forest")
    if len(forest) != g.rank:
        raise InvalidInput("forest does not span every component")
    return tuple(eid for eid in g.edge_ids if eid in forest)


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a spanning forest, one signed row per co-tree edge.

    Rows are indexed like ``graph.edges``.  The row of co-tree edge ``f`` is
    +1 on ``f`` and +-1 on the forest path closing it, the sign recording
    whether the edge agrees with the cycle's direction of travel.
    """

    graph: OrientedMultigraph
    forest: tuple
    cotree: tuple
    rows: dict

    def matrix(self) -> list[tuple[int, ...]]:
        return [self.rows[f] for f in self.cotree]

    def column(self, eid) -> tuple[int, ...]:
        j = self.graph.edge_ids.index(eid)
        return tuple(self.rows[f][j] for f in self.cotree)


def cycle_basis(g: OrientedMultigraph, forest: Iterable[Hashable] | None = None) -> CycleBasis:
    forest = spanning_forest(g) if forest is None else validate_forest(g, forest)
    in_forest = set(forest)
    pos = {eid: j for j, eid in enumerate(g.edge_ids)}

    # root every tree and record parent edge / depth
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.id in in_forest:
            adj[e.tail].append(e)
            adj[e.head].append(e)
    parent: dict = {}
    depth: dict = {}
    for root in g.vertices:
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = None
        todo = [root]
        while todo:
            v = todo.pop()
            for e in adj[v]:
                w = e.head if e.tail == v else e.tail
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = (e, v)
                    todo.append(w)

    rows = {}
    cotree = tuple(eid for eid in g.edge_ids if eid not in in_forest)
    for f in cotree:
        e_f = g.edge(f)
        row = [0] * g.n_edges
        row[pos[f]] = 1
        # travel head(f) -> ... -> tail(f) along the forest
        a, b = e_f.head, e_f.tail
        up, down = [], []
        while a != b:
            if depth[a] >= depth[b]:
                e, p = parent[a]
                up.append((e, a, p))
                a = p
            else:
                e, p = parent[b]
                down.append((e, p, b))
                b = p
        for e, frm, to in up + down[::-1]:
            row[pos[e.id]] = 1 if (e.tail, e.head) == (frm, to) else -1
        rows[f] = tuple(row)
    return CycleBasis(g, forest, cotree, rows)


# -- tensions ------------------------------------------------------------------


def is_tension(g: OrientedMultigraph, t: ModularAssignment, basis: CycleBasis | None = None) -> bool:
    """Signed sum vanishes mod l on every fundamental cycle."""
    vec = t.vector(g)
    basis = cycle_basis(g) if basis is None else basis
    return all(sum(r * x for r, x in zip(row, vec)) % t.modulus == 0 for row in basis.matrix())


def undirected_cycles(g: OrientedMultigraph) -> list[dict]:
    """Every simple cycle of the underlying multigraph as ``{edge id: +-1}``."""
    pos = g.vertex_index()
    incident = {v: [] for v in g.vertices}
    for e in g.edges:
        incident[e.tail].append((e, e.head, 1))
        if not e.is_loop:
            incident[e.head].append((e, e.tail, -1))
    found: dict[frozenset, dict] = {}
    for s in g.vertices:
        floor = pos[s]
        stack = [(s, iter(incident[s]), {}, {s})]
        while stack:
            v, it, signs, on_path = stack[-1]
            for e, w, sign in it:
                if pos[w] < floor or e.id in signs:
                    continue
                if w == s:
                    cyc = dict(signs)
                    cyc[e.id] = sign
                    found.setdefault(frozenset(cyc), cyc)
                elif w not in on_path:
                    nxt = dict(signs)
                    nxt[e.id] = sign
                    stack.append((w, iter(incident[w]), nxt, on_path | {w}))
                    break
            else:
                stack.pop()
    return list(found.values())


def is_tension_all_cycles(g: OrientedMultigraph, t: ModularAssignment) -> bool:
    """Oracle: check the signed sum on every undirected cycle."""
    return all(
        sum(sign * t[eid] for eid, sign in cyc.items()) % t.modulus == 0
        for cyc in undirected_cycles(g)
    )


def iter_tensions(
    g: OrientedMultigraph,
    modulus: int,
    method: str = FOREST,
    nowhere_zero: bool = False,
    basis: CycleBasis | None = None,
    cap: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield tension vectors (canonical edge order).

    ``forest`` fixes the forest coordinates and solves each co-tree edge from
    its fundamental cycle; ``scan`` filters every labeling.
    """
    values = range(1, modulus) if nowhere_zero else range(modulus)
    if method == SCAN:
        caps.check_scan_cap(modulus, g.n_edges, cap)
        basis = cycle_basis(g) if basis is None else basis
        rows = basis.matrix()
        for vec in product(values, repeat=g.n_edges):
            if all(sum(r * x for r, x in zip(row, vec)) % modulus == 0 for row in rows):
                yield vec
        return
    if method != FOREST:
        raise ValueError(f"unknown method {method!r}")
    basis = cycle_basis(g) if basis is None else basis
    caps.check_scan_cap(modulus, len(basis.forest), cap)
    pos = {eid: j for j, eid in enumerate(g.edge_ids)}
    forest_pos = [pos[e] for e in basis.forest]
    solve = [(pos[f], [(pos[e], basis.rows[f][pos[e]]) for e in basis.forest if basis.rows[f][pos[e]]])
             for f in basis.cotree]
    for coords in product(values, repeat=len(forest_pos)):
        vec = [0] * g.n_edges
        for j, x in zip(forest_pos, coords):
            vec[j] = x
        ok = True
        for j, terms in solve:
            x = -sum(s * vec[i] for i, s in terms) % modulus
            if nowhere_zero and x == 0:
                ok = False
                break
            vec[j] = x
        if ok:
            yield tuple(vec)


def count_nowhere_zero_tensions(
    g: OrientedMultigraph, modulus: int, method: str = FOREST, cap: int | None = None
) -> int:
    return sum(1 for _ in iter_tensions(g, modulus, method, nowhere_zero=True, cap=cap))


def _tension_dc(g: OrientedMultigraph) -> Polynomial:
    if not g.edges:
        return Polynomial([1])
    kinds = {e.id: g.classify_edge(e.id) for e in g.edges}
    for eid, kind in kinds.items():
        if kind == LOOP:
            return Polynomial()
    for eid, kind in kinds.items():
        if kind == COLOOP:
            return Polynomial([-1, 1]) * _tension_dc(g.contract({eid}))
    eid = g.edge_ids[0]
    return _tension_dc(g.delete({eid})) - _tension_dc(g.contract({eid}))


def tension_polynomial(
    g: OrientedMultigraph, method: str = DELETION_CONTRACTION, cap: int | None = None
) -> Polynomial:
    """Nowhere-zero Z_l-tension count as a polynomial in l."""
    if method == DELETION_CONTRACTION:
        return _tension_dc(g)
    if method in (ENUMERATE, FOREST, SCAN):
        inner = SCAN if method == SCAN else FOREST
        d = g.rank
        nodes = range(d + 1, 2 * d + 2)
        return interpolate((l, count_nowhere_zero_tensions(g, l, inner, cap)) for l in nodes)
    raise ValueError(f"unknown method {method!r}")


def chromatic_polynomial(g: OrientedMultigraph, method: str = DELETION_CONTRACTION) -> Polynomial:
    """l^c(G) times the tension polynomial."""
    return Polynomial.variable() ** g.n_components * tension_polynomial(g, method)


def count_proper_colorings(g: OrientedMultigraph, colors: int, cap: int | None = None) -> int:
    caps.check_scan_cap(colors, g.n_vertices, cap)
    idx = g.vertex_index()
    ends = [(idx[e.tail], idx[e.head]) for e in g.edges]
    return sum(
        1
        for c in product(range(colors), repeat=g.n_vertices)
        if all(c[u] != c[v] for u, v in ends)
    )


# -- colorings <-> tensions --------------------------------------------------------


def coloring_tension(g: OrientedMultigraph, c: Coloring) -> ModularAssignment:
    """t(uv) = c(u) - c(v) for every edge u -> v."""
    try:
        return ModularAssignment(c.modulus, {e.id: c[e.tail] - c[e.head] for e in g.edges})
    except KeyError as exc:
        raise InvalidInput(f"coloring has no value for vertex {exc.args[0]!r}") from None


def tension_colorings(g: OrientedMultigraph, t: ModularAssignment) -> list[Coloring]:
    """All l^c(G) colorings inducing ``t`` (one free color per component)."""
    if not is_tension(g, t):
        raise InvalidInput("assignment is not a tension")
    ell = t.modulus
    incident = {v: [] for v in g.vertices}
    for e in g.edges:
        incident[e.tail].append(e)
        incident[e.head].append(e)
    roots = []
    offset: dict = {}
    for root in g.vertices:
        if root in offset:
            continue
        roots.append(root)
        offset[root] = (root, 0)
        todo = [root]
        while todo:
            v = todo.pop()
            base = offset[v][1]
            for e in incident[v]:
                if e.tail == v and e.head not in offset:
                    offset[e.head] = (root, base - t[e.id])
                    todo.append(e.head)
                elif e.head == v and e.tail not in offset:
                    offset[e.tail] = (root, base + t[e.id])
                    todo.append(e.tail)
    out = []
    for start in product(range(ell), repeat=len(roots)):
        color_of = dict(zip(roots, start))
        out.append(Coloring(ell, {v: color_of[r] + d for v, (r, d) in offset.items()}))
    return out


def signed_tension_value(g: OrientedMultigraph, l: int) -> Fraction:
    """(-1)^(|V|-c) * tension polynomial at -l."""
    return (-1) ** g.rank * tension_polynomial(g)(-l)
