"""Modular flows and the modular flow polynomial."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterator

from . import caps
from .assignments import ModularAssignment
from .errors import InvalidInput
from .graph import COLOOP, LOOP, ORDINARY, OrientedMultigraph
from .polynomials import Polynomial, interpolate
from .tensions import cycle_basis

TRANSFER = "transfer"
BASIS = "basis"
SCAN = "scan"
ENUMERATE = "enumerate"
DELETION_CONTRACTION = "deletion-contraction"
CONTRACT = "contract"
DELETE = "delete"


def net_flow(g: OrientedMultigraph, vector) -> tuple[int, ...]:
    """Inflow minus outflow at every vertex, as integers."""
    return g.apply_incidence(vector)


def is_flow(g: OrientedMultigraph, f: ModularAssignment) -> bool:
    return all(x % f.modulus == 0 for x in net_flow(g, f.vector(g)))


def iter_flows(
    g: OrientedMultigraph, k: int, method: str = BASIS, cap: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Every Z_k-flow as a residue vector in canonical edge order.

    ``basis`` runs over k^xi co-tree coordinates and combines fundamental
    cycles; ``scan`` filters all k^|E| labelings.
    """
    if method == SCAN:
        caps.check_scan_cap(k, g.n_edges, cap)
        for vec in product(range(k), repeat=g.n_edges):
            if all(x % k == 0 for x in g.apply_incidence(vec)):
                yield vec
        return
    if method != BASIS:
        raise ValueError(f"unknown method {method!r}")
    basis = cycle_basis(g)
    rows = basis.matrix()
    caps.check_scan_cap(k, len(rows), cap)
    for h in product(range(k), repeat=len(rows)):
        vec = [0] * g.n_edges
        for coeff, row in zip(h, rows):
            if coeff:
                for j, r in enumerate(row):
                    if r:
                        vec[j] += coeff * r
        yield tuple(x % k for x in vec)


def _transfer_count(g: OrientedMultigraph, k: int, allowed: range) -> int:
    """Count labelings from ``allowed`` with zero net flow mod k everywhere.

    Edges are absorbed one at a time; the state is the vector of partial net
    residues, and a vertex is checked and frozen after its last incident edge.
    """
    idx = g.vertex_index()
    last = {}
    for j, e in enumerate(g.edges):
        last[e.tail] = j
        last[e.head] = j
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
                    s[u] = (s[u] - x) % k
                    s[v] = (s[v] + x) % k
                    nxt[tuple(s)] += count
            states = nxt
        done = [idx[w] for w in {e.tail, e.head} if last[w] == j]
        if done:
            states = {s: c for s, c in states.items() if all(s[i] == 0 for i in done)}
    return factor * sum(states.values())


def count_flows(g: OrientedMultigraph, k: int) -> int:
    return _transfer_count(g, k, range(k))


def count_nowhere_zero_flows(
    g: OrientedMultigraph, k: int, method: str = TRANSFER, cap: int | None = None
) -> int:
    if k < 1:
        raise InvalidInput("modulus must be positive")
    if method == TRANSFER:
        return _transfer_count(g, k, range(1, k))
    return sum(1 for vec in iter_flows(g, k, method, cap) if all(vec))


def _flow_dc(g: OrientedMultigraph) -> Polynomial:
    if not g.edges:
        return Polynomial([1])
    kinds = {e.id: g.classify_edge(e.id) for e in g.edges}
    for eid, kind in kinds.items():
        if kind == LOOP:
            return Polynomial([-1, 1]) * _flow_dc(g.delete({eid}))
    if COLOOP in kinds.values():
        return Polynomial()
    eid = g.edge_ids[0]
    return _flow_dc(g.contract({eid})) - _flow_dc(g.delete({eid}))


def flow_polynomial(
    g: OrientedMultigraph, method: str = DELETION_CONTRACTION, cap: int | None = None
) -> Polynomial:
    """Nowhere-zero Z_k-flow count as a polynomial in k.

    ``enumerate`` interpolates exact counts at k = xi+1, ..., 2*xi+1.
    """
    if method == DELETION_CONTRACTION:
        return _flow_dc(g)
    if method in (ENUMERATE, TRANSFER, BASIS, SCAN):
        inner = TRANSFER if method == ENUMERATE else method
        d = g.xi
        nodes = range(d + 1, 2 * d + 2)
        return interpolate((k, count_nowhere_zero_flows(g, k, inner, cap)) for k in nodes)
    raise ValueError(f"unknown method {method!r}")


def signed_flow_value(g: OrientedMultigraph, k: int) -> Fraction:
    """(-1)^xi * flow polynomial at -k."""
    return (-1) ** g.xi * flow_polynomial(g)(-k)


def restrict_lift_flow(
    g: OrientedMultigraph, eid: Hashable, f_prime: ModularAssignment, minor: str = CONTRACT
) -> ModularAssignment:
    """Extend a flow on G/e (or G\\e) to the unique flow on G agreeing off e."""
    if g.classify_edge(eid) != ORDINARY:
        raise InvalidInput(f"edge {eid!r} is a loop or a coloop")
    if minor == CONTRACT:
        h = g.contract({eid})
    elif minor == DELETE:
        h = g.delete({eid})
    else:
        raise ValueError(f"unknown minor {minor!r}")
    if not is_flow(h, f_prime):
        raise InvalidInput("assignment is not a flow on the minor")
    k = f_prime.modulus
    e = g.edge(eid)
    rest = g.delete({eid})
    net = dict(zip(rest.vertices, net_flow(rest, f_prime.vector(rest))))
    # at the tail, -f(e) must cancel the remaining net inflow
    value = net[e.tail] % k
    lifted = dict(f_prime.values)
    lifted[eid] = value
    f = ModularAssignment(k, {x: lifted[x] for x in g.edge_ids})
    assert is_flow(g, f)
    return f
