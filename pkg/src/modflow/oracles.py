"""Brute-force counters for the reciprocity statements.

These are the independent sides of every theorem check, so they stay as
plain as possible: full residue scans, colorings enumerated outright,
reorientations tested by reachability.  Nothing here reuses the polynomial,
basis or strong-component machinery of the other modules; only the graph
operations are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Hashable, Iterable, Iterator, NamedTuple

from . import caps
from .assignments import ModularAssignment
from .errors import InvalidInput
from .graph import COLOOP, LOOP, OrientedMultigraph


# -- small self-contained helpers ----------------------------------------------


def _subsets(items) -> Iterator[frozenset]:
    items = list(items)
    for bits in product((0, 1), repeat=len(items)):
        yield frozenset(x for x, b in zip(items, bits) if b)


def _reach(g: OrientedMultigraph) -> dict:
    succ = {v: [] for v in g.vertices}
    for e in g.edges:
        succ[e.tail].append(e.head)
    out = {}
    for s in g.vertices:
        seen = {s}
        todo = [s]
        while todo:
            x = todo.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        out[s] = seen
    return out


def _on_directed_cycle(g: OrientedMultigraph) -> frozenset:
    """Edge u -> v lies on a directed cycle iff u is reachable from v."""
    reach = _reach(g)
    return frozenset(e.id for e in g.edges if e.tail in reach[e.head])


def _totally_cyclic(g: OrientedMultigraph) -> bool:
    return len(_on_directed_cycle(g)) == g.n_edges


def _acyclic(g: OrientedMultigraph) -> bool:
    return not _on_directed_cycle(g)


def _scan_flows(g: OrientedMultigraph, k: int, cap=None) -> list[tuple[int, ...]]:
    caps.check_scan_cap(k, g.n_edges, cap)
    return [
        vec
        for vec in product(range(k), repeat=g.n_edges)
        if all(x % k == 0 for x in g.apply_incidence(vec))
    ]


def _tensions_from_colorings(g: OrientedMultigraph, l: int, cap=None) -> set[tuple[int, ...]]:
    caps.check_scan_cap(l, g.n_vertices, cap)
    idx = g.vertex_index()
    ends = [(idx[e.tail], idx[e.head]) for e in g.edges]
    return {
        tuple((c[u] - c[v]) % l for u, v in ends)
        for c in product(range(l), repeat=g.n_vertices)
    }


def _is_tension_by_potentials(g: OrientedMultigraph, values: dict, l: int) -> bool:
    """Propagate c(head) = c(tail) - t along edges and look for a clash."""
    incident = {v: [] for v in g.vertices}
    for e in g.edges:
        incident[e.tail].append(e)
        incident[e.head].append(e)
    pot: dict = {}
    for root in g.vertices:
        if root in pot:
            continue
        pot[root] = 0
        todo = [root]
        while todo:
            v = todo.pop()
            for e in incident[v]:
                t = values[e.id]
                if e.tail == v:
                    other, want = e.head, pot[v] - t
                else:
                    other, want = e.tail, pot[v] + t
                if other in pot:
                    if (pot[other] - want) % l:
                        return False
                else:
                    pot[other] = want
                    todo.append(other)
    return True


def _support(g: OrientedMultigraph, vec) -> frozenset:
    return frozenset(eid for eid, x in zip(g.edge_ids, vec) if x)


# -- records -------------------------------------------------------------------


class FlowPair(NamedTuple):
    f: ModularAssignment
    sigma: frozenset


class TensionPair(NamedTuple):
    t: ModularAssignment
    sigma: frozenset


class TutteTriple(NamedTuple):
    f: ModularAssignment
    t: ModularAssignment
    sigma: frozenset


# -- flow reciprocity ------------------------------------------------------------


def _flow_pairs_raw(g: OrientedMultigraph, k: int, cap=None):
    caps.check_subset_cap(g.n_edges, None)
    for vec in _scan_flows(g, k, cap):
        supp = _support(g, vec)
        minor = g.contract(supp)
        for sigma in _subsets(minor.edge_ids):
            if _totally_cyclic(minor.reorient(sigma)):
                yield vec, sigma


def flow_pairs(g: OrientedMultigraph, k: int, cap=None) -> Iterator[FlowPair]:
    """(f, sigma): f a Z_k-flow, sigma a totally cyclic reorientation of G/supp(f)."""
    for vec, sigma in _flow_pairs_raw(g, k, cap):
        yield FlowPair(ModularAssignment.of(g, vec, k), sigma)


def count_flow_pairs(g: OrientedMultigraph, k: int, cap=None) -> int:
    if k < 1:
        raise InvalidInput("k must be positive")
    return sum(1 for _ in _flow_pairs_raw(g, k, cap))


def flow_pair_census(g: OrientedMultigraph, k: int, cap=None) -> dict[int, int]:
    """Number of pairs grouped by the support size of the flow."""
    census: dict[int, int] = {}
    for vec, _ in _flow_pairs_raw(g, k, cap):
        n = sum(1 for x in vec if x)
        census[n] = census.get(n, 0) + 1
    return dict(sorted(census.items()))


def flow_pair_from_point(g: OrientedMultigraph, point, k: int) -> tuple[tuple[int, ...], frozenset]:
    """Lattice point of some k*P(b) -> (point mod k, edges sitting at k)."""
    sigma = frozenset(eid for eid, x in zip(g.edge_ids, point) if x == k)
    return tuple(x % k for x in point), sigma


def point_from_flow_pair(g: OrientedMultigraph, fbar, sigma: Iterable[Hashable], k: int) -> tuple[int, ...]:
    """Inverse lift: coordinate k on sigma, the residue elsewhere."""
    sigma = frozenset(sigma)
    return tuple(k if eid in sigma else x for eid, x in zip(g.edge_ids, fbar))


# -- tension / Stanley reciprocity ---------------------------------------------------


def _tension_pairs_raw(g: OrientedMultigraph, l: int, cap=None):
    caps.check_subset_cap(g.n_edges, None)
    for vec in sorted(_tensions_from_colorings(g, l, cap)):
        minor = g.delete(_support(g, vec))
        for sigma in _subsets(minor.edge_ids):
            if _acyclic(minor.reorient(sigma)):
                yield vec, sigma


def tension_pairs(g: OrientedMultigraph, l: int, cap=None) -> Iterator[TensionPair]:
    for vec, sigma in _tension_pairs_raw(g, l, cap):
        yield TensionPair(ModularAssignment.of(g, vec, l), sigma)


def count_tension_pairs(g: OrientedMultigraph, l: int, cap=None) -> int:
    """(t, sigma): t a Z_l-tension, sigma an acyclic reorientation of G minus supp(t)."""
    if l < 1:
        raise InvalidInput("l must be positive")
    return sum(1 for _ in _tension_pairs_raw(g, l, cap))


def count_stanley_pairs(g: OrientedMultigraph, l: int, cap=None) -> int:
    """(c, sigma): c an l-coloring, sigma acyclic with c(tail) <= c(head) on every reoriented edge."""
    if l < 1:
        raise InvalidInput("l must be positive")
    caps.check_scan_cap(l, g.n_vertices, cap)
    caps.check_subset_cap(g.n_edges, None)
    total = 0
    for colors in product(range(l), repeat=g.n_vertices):
        c = dict(zip(g.vertices, colors))
        forced, free = set(), []
        for e in g.edges:
            if c[e.tail] > c[e.head]:
                forced.add(e.id)
            elif c[e.tail] == c[e.head]:
                free.append(e.id)
        for extra in _subsets(free):
            h = g.reorient(forced | extra)
            if all(c[e.tail] <= c[e.head] for e in h.edges) and _acyclic(h):
                total += 1
    return total


# -- Tutte triples -------------------------------------------------------------------


def _disjoint_flow_tension(g: OrientedMultigraph, l: int, k: int, cap=None):
    flows = _scan_flows(g, k, cap)
    tensions = sorted(_tensions_from_colorings(g, l, cap))
    for f in flows:
        for t in tensions:
            if not any(x and y for x, y in zip(f, t)):
                yield f, t


def tutte_triples(g: OrientedMultigraph, l: int, k: int, cap=None) -> Iterator[TutteTriple]:
    """Every (f, t, sigma) with disjoint supports and sigma off both supports."""
    caps.check_subset_cap(g.n_edges, None)
    for f, t in _disjoint_flow_tension(g, l, k, cap):
        free = [eid for eid, x, y in zip(g.edge_ids, f, t) if not x and not y]
        fa, ta = ModularAssignment.of(g, f, k), ModularAssignment.of(g, t, l)
        for sigma in _subsets(free):
            yield TutteTriple(fa, ta, sigma)


def count_tutte_triples(g: OrientedMultigraph, l: int, k: int, cap=None) -> int:
    if l < 1 or k < 1:
        raise InvalidInput("l and k must be positive")
    return sum(
        2 ** sum(1 for x, y in zip(f, t) if not x and not y)
        for f, t in _disjoint_flow_tension(g, l, k, cap)
    )


def reiner_sum(g: OrientedMultigraph, l: int, k: int, cap=None) -> int:
    """Sum over S within T of 2^|T - S| * (nowhere-zero flows of G[S]) * (nowhere-zero tensions of G/T)."""
    caps.check_subset_cap(g.n_edges, cap)
    nz_flow: dict[frozenset, int] = {}
    nz_tension: dict[frozenset, int] = {}
    total = 0
    for T in _subsets(g.edge_ids):
        if T not in nz_tension:
            minor = g.contract(T)
            nz_tension[T] = sum(1 for t in _tensions_from_colorings(minor, l) if all(t))
        if not nz_tension[T]:
            continue
        for S in _subsets(sorted(T, key=g.edge_ids.index)):
            if S not in nz_flow:
                sub = g.restrict(S)
                nz_flow[S] = sum(1 for f in _scan_flows(sub, k) if all(f))
            total += 2 ** (len(T) - len(S)) * nz_flow[S] * nz_tension[T]
    return total


def count_tcs(g: OrientedMultigraph, l: int, k: int) -> int:
    """#{(S, t, f): t a Z_l-tension on G/S, f a Z_k-flow on G[S]}."""
    total = 0
    for S in _subsets(g.edge_ids):
        total += len(_tensions_from_colorings(g.contract(S), l)) * len(_scan_flows(g.restrict(S), k))
    return total


# -- the unique split of a triple ----------------------------------------------------


def _check_triple(g: OrientedMultigraph, f: ModularAssignment, t: ModularAssignment, sigma) -> frozenset:
    sigma = frozenset(sigma)
    fv, tv = f.vector(g), t.vector(g)
    if any(x % f.modulus for x in g.apply_incidence(fv)):
        raise InvalidInput("f is not a flow")
    if not _is_tension_by_potentials(g, t.values, t.modulus):
        raise InvalidInput("t is not a tension")
    if f.support & t.support:
        raise InvalidInput("f and t have overlapping supports")
    if sigma & (f.support | t.support) or not sigma <= set(g.edge_ids):
        raise InvalidInput("sigma must avoid both supports")
    return sigma


def is_split_witness(g: OrientedMultigraph, f: ModularAssignment, t: ModularAssignment, sigma, S) -> bool:
    """Whether S splits the triple into a flow pair on G[S] and a tension pair on G/S."""
    sigma, S = frozenset(sigma), frozenset(S)
    if not f.support <= S or t.support & S:
        return False
    inner = g.restrict(S)
    if any(x % f.modulus for x in inner.apply_incidence(f.restrict(inner.edge_ids).vector(inner))):
        return False
    if not _totally_cyclic(inner.contract(f.support).reorient(sigma & S)):
        return False
    outer = g.contract(S)
    if not _is_tension_by_potentials(outer, t.restrict(outer.edge_ids).values, t.modulus):
        return False
    return _acyclic(outer.delete(t.support).reorient(sigma - S))


def unique_split_witness(g: OrientedMultigraph, f: ModularAssignment, t: ModularAssignment, sigma) -> frozenset:
    """supp(f) together with the cyclic part of the sigma-reoriented G/supp(f) minus supp(t)."""
    sigma = _check_triple(g, f, t, sigma)
    minor = g.contract(f.support).delete(t.support).reorient(sigma)
    return _on_directed_cycle(minor) | f.support


# -- recursion checks ---------------------------------------------------------------


@dataclass(frozen=True)
class ClauseCheck:
    edge: Hashable
    clause: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def appendix_recursion_clauses(g: OrientedMultigraph, k: int, cap=None) -> list[ClauseCheck]:
    """Evaluate the pair-count recursion (empty, coloop, loop, ordinary) at every edge."""
    R = count_flow_pairs(g, k, cap)
    if not g.edges:
        return [ClauseCheck(None, "empty", R, 1)]
    out = []
    for e in g.edges:
        kind = g.classify_edge(e.id)
        if kind == COLOOP:
            out.append(ClauseCheck(e.id, "coloop", R, 0))
        elif kind == LOOP:
            out.append(ClauseCheck(e.id, "loop", R, (k + 1) * count_flow_pairs(g.delete({e.id}), k, cap)))
        else:
            rhs = count_flow_pairs(g.delete({e.id}), k, cap) + count_flow_pairs(g.contract({e.id}), k, cap)
            out.append(ClauseCheck(e.id, "ordinary", R, rhs))
    return out


def appendix_recursion_check(g: OrientedMultigraph, k: int, cap=None) -> bool:
    return all(c.ok for c in appendix_recursion_clauses(g, k, cap))


def tcs_recursion_clauses(g: OrientedMultigraph, l: int, k: int) -> list[ClauseCheck]:
    """T_G = l^[coloop] T_{G-e} + k^[loop] T_{G/e} at every edge."""
    T = count_tcs(g, l, k)
    if not g.edges:
        return [ClauseCheck(None, "empty", T, 1)]
    out = []
    for e in g.edges:
        kind = g.classify_edge(e.id)
        a = l if kind == COLOOP else 1
        b = k if kind == LOOP else 1
        rhs = a * count_tcs(g.delete({e.id}), l, k) + b * count_tcs(g.contract({e.id}), l, k)
        out.append(ClauseCheck(e.id, kind, T, rhs))
    return out
