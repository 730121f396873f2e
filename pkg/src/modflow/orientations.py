"""Totally cyclic and acyclic reorientations, cyclic parts, cycle reversals."""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Hashable, Iterable, Iterator

from . import caps
from .errors import InvalidInput
from .graph import OrientedMultigraph

TOTALLY_CYCLIC = "totally-cyclic"
ACYCLIC = "acyclic"


def strong_components(g: OrientedMultigraph) -> dict:
    """Map each vertex to the index of its strongly connected component (Kosaraju)."""
    succ = {v: [] for v in g.vertices}
    pred = {v: [] for v in g.vertices}
    for e in g.edges:
        succ[e.tail].append(e.head)
        pred[e.head].append(e.tail)

    order = []
    seen = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in seen:
                    seen.add(w)
                    stack.append((w, iter(succ[w])))
                    break
            else:
                stack.pop()
                order.append(v)

    comp: dict = {}
    label = 0
    for root in reversed(order):
        if root in comp:
            continue
        comp[root] = label
        todo = [root]
        while todo:
            v = todo.pop()
            for w in pred[v]:
                if w not in comp:
                    comp[w] = label
                    todo.append(w)
        label += 1
    return comp


def cyclic_part(g: OrientedMultigraph) -> frozenset:
    """Edges lying on some directed cycle (loops included)."""
    comp = strong_components(g)
    return frozenset(e.id for e in g.edges if comp[e.tail] == comp[e.head])


def is_totally_cyclic(g: OrientedMultigraph) -> bool:
    return len(cyclic_part(g)) == g.n_edges


def is_acyclic(g: OrientedMultigraph) -> bool:
    return not cyclic_part(g)


def _predicate(mode: str):
    if mode == TOTALLY_CYCLIC:
        return is_totally_cyclic
    if mode == ACYCLIC:
        return is_acyclic
    raise ValueError(f"unknown mode {mode!r}")


def iter_subsets(edge_ids: tuple, cap: int | None = None) -> Iterator[frozenset]:
    """All subsets, ordered lexicographically by characteristic vector."""
    caps.check_subset_cap(len(edge_ids), cap)
    for bits in product((0, 1), repeat=len(edge_ids)):
        yield frozenset(eid for eid, b in zip(edge_ids, bits) if b)


def enumerate_reorientations(
    g: OrientedMultigraph, mode: str = TOTALLY_CYCLIC, cap: int | None = None
) -> list[frozenset]:
    """All sigma with reorient(G, sigma) totally cyclic (or acyclic), lexicographic."""
    pred = _predicate(mode)
    return [s for s in iter_subsets(g.edge_ids, cap) if pred(g.reorient(s))]


def cycle_reversal_equivalent(g: OrientedMultigraph, sigma, sigma_prime) -> bool:
    """Whether two totally cyclic reorientations share a fiber (A e_sigma = A e_sigma')."""
    sigma, sigma_prime = frozenset(sigma), frozenset(sigma_prime)
    for s in (sigma, sigma_prime):
        if not is_totally_cyclic(g.reorient(s)):
            raise InvalidInput(f"{sorted(s, key=str)} is not a totally cyclic reorientation")
    a = g.apply_incidence(g.characteristic_vector(sigma))
    b = g.apply_incidence(g.characteristic_vector(sigma_prime))
    return a == b


# -- definitional oracles ------------------------------------------------------


def directed_cycles(g: OrientedMultigraph) -> Iterator[frozenset]:
    """Every simple directed cycle, as a set of edge ids, each exactly once."""
    pos = g.vertex_index()
    out_edges = {v: [] for v in g.vertices}
    for e in g.edges:
        out_edges[e.tail].append(e)
    for s in g.vertices:
        floor = pos[s]
        # depth-first over simple paths from s through vertices later than s
        stack = [(s, iter(out_edges[s]), [], {s})]
        while stack:
            v, it, path, on_path = stack[-1]
            for e in it:
                w = e.head
                if pos[w] < floor:
                    continue
                if w == s:
                    yield frozenset(path + [e.id])
                elif w not in on_path:
                    stack.append((w, iter(out_edges[w]), path + [e.id], on_path | {w}))
                    break
            else:
                stack.pop()


def has_directed_path(g: OrientedMultigraph, u: Hashable, v: Hashable) -> bool:
    succ = {x: [] for x in g.vertices}
    for e in g.edges:
        succ[e.tail].append(e.head)
    seen = {u}
    todo = [u]
    while todo:
        x = todo.pop()
        if x == v:
            return True
        for y in succ[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return False


def is_totally_cyclic_by_paths(g: OrientedMultigraph) -> bool:
    """Directed path between every ordered pair sharing a weak component."""
    comp = g.component_map()
    return all(
        has_directed_path(g, u, v)
        for u in g.vertices
        for v in g.vertices
        if comp[u] == comp[v]
    )


def is_totally_cyclic_by_cycles(g: OrientedMultigraph) -> bool:
    covered: set = set()
    for c in directed_cycles(g):
        covered |= c
    return len(covered) == g.n_edges


def cycle_reversal_class(g: OrientedMultigraph, sigma: Iterable[Hashable]) -> set[frozenset]:
    """Reorientations reachable from sigma by reversing one directed cycle at a time."""
    start = frozenset(sigma)
    seen = {start}
    todo = deque([start])
    while todo:
        s = todo.popleft()
        for c in directed_cycles(g.reorient(s)):
            nxt = s ^ c
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen
