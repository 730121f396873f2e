"""Lattice points in dilated cube slices {0 <= p <= 1, A p = b}.

For each feasible right-hand side ``b`` the integer points of ``k * P(b)`` are
the integer vectors ``f`` with ``A f = k b`` and ``0 <= f_e <= k`` (closed) or
``0 < f_e < k`` (open).  Summing the open counts over all feasible ``b``
recovers the number of nowhere-zero Z_k-flows.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Hashable, Iterable, Iterator, Sequence

from . import caps
from .errors import InvalidInput
from .graph import OrientedMultigraph
from .orientations import TOTALLY_CYCLIC, enumerate_reorientations
from .polynomials import Polynomial, interpolate
from .tensions import cycle_basis, spanning_forest, validate_forest

OPEN = "open"
CLOSED = "closed"
TRANSFER = "transfer"
COTREE = "cotree"
BOX = "box"


@dataclass(frozen=True)
class FacePartition:
    """Coordinates at 0, strictly inside, and at the upper bound."""

    sigma_minus: frozenset
    sigma_zero: frozenset
    sigma_plus: frozenset


def feasible_b_set(g: OrientedMultigraph, cap: int | None = None) -> list[tuple[int, ...]]:
    """{A e_sigma : sigma totally cyclic}, deduplicated and sorted."""
    found = {
        g.apply_incidence(g.characteristic_vector(s))
        for s in enumerate_reorientations(g, TOTALLY_CYCLIC, cap)
    }
    return sorted(found)


def _require_feasible(g: OrientedMultigraph, b: Sequence[int], cap: int | None = None) -> tuple:
    b = tuple(b)
    if len(b) != g.n_vertices:
        raise InvalidInput(f"b has length {len(b)}, expected {g.n_vertices}")
    if b not in feasible_b_set(g, cap):
        raise InvalidInput(f"b = {b} is not feasible")
    return b


def _bounds(k: int, openness: str) -> range:
    if openness == OPEN:
        if k < 1:
            raise InvalidInput("open fibers need k >= 1")
        return range(1, k)
    if openness == CLOSED:
        if k < 0:
            raise InvalidInput("closed fibers need k >= 0")
        return range(0, k + 1)
    raise ValueError(f"unknown openness {openness!r}")


class _ForestSolver:
    """Solves A_T x = r on a spanning forest by peeling leaves."""

    def __init__(self, g: OrientedMultigraph, forest: Sequence[Hashable]):
        in_forest = set(forest)
        self.idx = g.vertex_index()
        self.pos = {eid: j for j, eid in enumerate(g.edge_ids)}
        adj = {v: [] for v in g.vertices}
        for e in g.edges:
            if e.id in in_forest:
                adj[e.tail].append(e)
                adj[e.head].append(e)
        self.order = []  # (vertex index, edge position, parent index, head is vertex)
        self.roots = []
        seen = set()
        for root in g.vertices:
            if root in seen:
                continue
            seen.add(root)
            self.roots.append(self.idx[root])
            todo = [root]
            while todo:
                v = todo.pop()
                for e in adj[v]:
                    w = e.head if e.tail == v else e.tail
                    if w not in seen:
                        seen.add(w)
                        self.order.append((self.idx[w], self.pos[e.id], self.idx[v], e.head == w))
                        todo.append(w)

    def solve(self, demand: list[int]) -> dict[int, int] | None:
        """Edge position -> value, or None when some component's demand does not sum to 0."""
        rem = list(demand)
        out = {}
        for v, j, p, head_is_v in reversed(self.order):
            need = rem[v]
            out[j] = need if head_is_v else -need
            rem[p] += need
        if any(rem[r] for r in self.roots):
            return None
        return out


def fiber_points(
    g: OrientedMultigraph,
    b: Sequence[int],
    k: int,
    openness: str = CLOSED,
    method: str = COTREE,
    cap: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Integer points of k*P(b) (closed) or k*P°(b) (open), in canonical edge order."""
    allowed = _bounds(k, openness)
    target = [k * x for x in b]
    if method == BOX:
        caps.check_scan_cap(len(allowed), g.n_edges, cap)
        for vec in product(allowed, repeat=g.n_edges):
            if list(g.apply_incidence(vec)) == target:
                yield vec
        return
    if method != COTREE:
        raise ValueError(f"unknown method {method!r}")
    forest = spanning_forest(g)
    solver = _ForestSolver(g, forest)
    in_forest = set(forest)
    co = [e for e in g.edges if e.id not in in_forest]
    co_pos = [solver.pos[e.id] for e in co]
    co_ends = [(solver.idx[e.tail], solver.idx[e.head], e.is_loop) for e in co]
    caps.check_scan_cap(len(allowed), len(co), cap)
    lo, hi = allowed.start, allowed.stop - 1
    for h in product(allowed, repeat=len(co)):
        demand = list(target)
        for x, (u, v, loop) in zip(h, co_ends):
            if not loop:
                demand[u] += x
                demand[v] -= x
        tree = solver.solve(demand)
        if tree is None or any(not lo <= x <= hi for x in tree.values()):
            continue
        vec = [0] * g.n_edges
        for j, x in zip(co_pos, h):
            vec[j] = x
        for j, x in tree.items():
            vec[j] = x
        yield tuple(vec)


def _transfer_fiber_count(g: OrientedMultigraph, target: list[int], allowed: range) -> int:
    idx = g.vertex_index()
    last = {}
    for j, e in enumerate(g.edges):
        last[e.tail] = j
        last[e.head] = j
    untouched = [i for v, i in idx.items() if v not in last]
    if any(target[i] for i in untouched):
        return 0
    factor = 1
    states: dict[tuple, int] = {(0,) * len(idx): 1}
    for j, e in enumerate(g.edges):
        if e.is_loop:
            factor *= len(allowed)
        else:
            u, v = idx[e.tail], idx[e.head]
            nxt: dict[tuple, int] = defaultdict(int)
            for state, count in states.items():
                for x in allowed:
                    s = list(state)
                    s[u] -= x
                    s[v] += x
                    nxt[tuple(s)] += count
            states = nxt
        done = [idx[w] for w in {e.tail, e.head} if last[w] == j]
        if done:
            states = {s: c for s, c in states.items() if all(s[i] == target[i] for i in done)}
    return factor * sum(states.values())


def count_fiber_points(
    g: OrientedMultigraph,
    b: Sequence[int],
    k: int,
    openness: str = CLOSED,
    method: str = TRANSFER,
    cap: int | None = None,
) -> int:
    """Number of integer f with A f = k b and 0 <= f <= k (closed) or 0 < f < k (open)."""
    if len(b) != g.n_vertices:
        raise InvalidInput(f"b has length {len(b)}, expected {g.n_vertices}")
    if method == TRANSFER:
        return _transfer_fiber_count(g, [k * x for x in b], _bounds(k, openness))
    return sum(1 for _ in fiber_points(g, b, k, openness, method, cap))


def ehrhart_polynomial(g: OrientedMultigraph, b: Sequence[int], cap: int | None = None) -> Polynomial:
    """Closed Ehrhart polynomial of P(b), fitted on k = 0..xi."""
    b = _require_feasible(g, b, cap)
    return interpolate((k, count_fiber_points(g, b, k, CLOSED)) for k in range(g.xi + 1))


def open_ehrhart_polynomial(g: OrientedMultigraph, b: Sequence[int], cap: int | None = None) -> Polynomial:
    """Ehrhart polynomial of the relatively open P°(b), fitted on k = 1..xi+1."""
    b = _require_feasible(g, b, cap)
    return interpolate((k, count_fiber_points(g, b, k, OPEN)) for k in range(1, g.xi + 2))


def flow_polynomial_from_fibers(g: OrientedMultigraph, cap: int | None = None) -> Polynomial:
    """Sum over feasible b of the open Ehrhart polynomials."""
    total = Polynomial()
    for b in feasible_b_set(g, cap):
        total = total + open_ehrhart_polynomial(g, b, cap)
    return total


def ehrhart_macdonald_sides(
    g: OrientedMultigraph, b: Sequence[int], k: int, cap: int | None = None
) -> tuple[int, Fraction]:
    """(open count at k, (-1)^xi * closed polynomial at -k)."""
    if k < 1:
        raise InvalidInput("k must be positive")
    poly = ehrhart_polynomial(g, b, cap)
    return count_fiber_points(g, b, k, OPEN), (-1) ** g.xi * poly(-k)


def check_ehrhart_macdonald(g: OrientedMultigraph, b: Sequence[int], k: int, cap: int | None = None) -> bool:
    lhs, rhs = ehrhart_macdonald_sides(g, b, k, cap)
    return lhs == rhs


def indegree_map(g: OrientedMultigraph, cap: int | None = None) -> dict[tuple, tuple]:
    """b -> in-degree sequence I = (D + A 1 - 2 b) / 2 of the reorientations in that fiber."""
    inv = g.invariants()
    degree = [i + o for i, o in zip(inv.indeg, inv.outdeg)]
    b0 = g.apply_incidence([1] * g.n_edges)
    out = {}
    for b in feasible_b_set(g, cap):
        twice = [d + x - 2 * y for d, x, y in zip(degree, b0, b)]
        assert all(t % 2 == 0 for t in twice)
        out[b] = tuple(t // 2 for t in twice)
    return out


def face_partition(g: OrientedMultigraph, f: Sequence[int], k: int) -> FacePartition:
    """Which coordinates of a point of k*P(b) sit at 0, strictly inside, or at k."""
    ids = g.edge_ids
    return FacePartition(
        frozenset(e for e, x in zip(ids, f) if x == 0),
        frozenset(e for e, x in zip(ids, f) if 0 < x < k),
        frozenset(e for e, x in zip(ids, f) if x == k),
    )


# -- inside-out counts -------------------------------------------------------------


def inside_out_flow_count(
    g: OrientedMultigraph, k: int, forest: Iterable[Hashable] | None = None, cap: int | None = None
) -> int:
    """Points h in the open cube (0,k)^{co-tree} with (h C)_e nonzero mod k on every forest edge."""
    if k < 1:
        raise InvalidInput("k must be positive")
    basis = cycle_basis(g, forest)
    columns = [basis.column(e) for e in basis.forest]
    caps.check_scan_cap(k - 1, len(basis.cotree), cap)
    count = 0
    for h in product(range(1, k), repeat=len(basis.cotree)):
        if all(sum(x * c for x, c in zip(h, col)) % k for col in columns):
            count += 1
    return count


def inside_out_flow_polynomial(
    g: OrientedMultigraph, nodes: Iterable[int] | None = None, forest=None
) -> Polynomial:
    nodes = list(range(g.xi + 1, 2 * g.xi + 2) if nodes is None else nodes)
    return interpolate((k, inside_out_flow_count(g, k, forest)) for k in nodes)


def inside_out_tension_count(
    g: OrientedMultigraph, l: int, forest: Iterable[Hashable] | None = None, cap: int | None = None
) -> int:
    """Points g in (0,l)^{forest} whose implied co-tree values are nonzero mod l."""
    if l < 1:
        raise InvalidInput("l must be positive")
    basis = cycle_basis(g, forest)
    pos = {eid: j for j, eid in enumerate(g.edge_ids)}
    rows = [[basis.rows[f][pos[e]] for e in basis.forest] for f in basis.cotree]
    caps.check_scan_cap(l - 1, len(basis.forest), cap)
    count = 0
    for coords in product(range(1, l), repeat=len(basis.forest)):
        if all(sum(r * x for r, x in zip(row, coords)) % l for row in rows):
            count += 1
    return count


def spanning_forests(g: OrientedMultigraph) -> list[tuple]:
    """Every spanning forest (test helper for forest independence)."""
    out = []
    for combo in combinations(g.edge_ids, g.rank):
        try:
            out.append(validate_forest(g, combo))
        except InvalidInput:
            pass
    return out
