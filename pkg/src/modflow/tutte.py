"""Tutte polynomial, Tutte-Grothendieck evaluation and the flow/tension specializations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import caps
from .errors import InvalidInput
from .graph import COLOOP, LOOP, OrientedMultigraph
from .orientations import iter_subsets
from .polynomials import BivariatePolynomial

FLOW = "flow"
TENSION = "tension"


def _tutte_dc(g: OrientedMultigraph) -> BivariatePolynomial:
    if not g.edges:
        return BivariatePolynomial.one()
    kinds = {e.id: g.classify_edge(e.id) for e in g.edges}
    for eid, kind in kinds.items():
        if kind == LOOP:
            return BivariatePolynomial.y() * _tutte_dc(g.delete({eid}))
    for eid, kind in kinds.items():
        if kind == COLOOP:
            return BivariatePolynomial.x() * _tutte_dc(g.contract({eid}))
    eid = g.edge_ids[0]
    return _tutte_dc(g.delete({eid})) + _tutte_dc(g.contract({eid}))


def tutte_polynomial(g: OrientedMultigraph) -> BivariatePolynomial:
    """t_G(x, y) by deletion-contraction, loops and coloops stripped first."""
    return _tutte_dc(g)


def _binomial_expand(shift: int, power: int) -> dict[int, int]:
    """Coefficients of (z + shift)^power."""
    return {i: comb(power, i) * shift ** (power - i) for i in range(power + 1)}


def tutte_corank_nullity(g: OrientedMultigraph, cap: int | None = None) -> BivariatePolynomial:
    """Oracle: sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))."""
    full_rank = g.rank
    terms: dict[tuple[int, int], int] = {}
    for S in iter_subsets(g.edge_ids, cap):
        r = g.restrict(S).rank
        xs = _binomial_expand(-1, full_rank - r)
        ys = _binomial_expand(-1, len(S) - r)
        for i, a in xs.items():
            for j, b in ys.items():
                terms[(i, j)] = terms.get((i, j), 0) + a * b
    return BivariatePolynomial(terms)


@dataclass(frozen=True)
class TGParams:
    """Structure constants and loop/coloop values of a Tutte-Grothendieck invariant."""

    sigma: int
    tau: int
    loop_value: Fraction | int
    coloop_value: Fraction | int


def tg_evaluate(g: OrientedMultigraph, p: TGParams, tutte: BivariatePolynomial | None = None) -> Fraction:
    """sigma^xi * tau^(|V|-c) * t_G(f_I / tau, f_L / sigma)."""
    if p.sigma == 0 or p.tau == 0:
        raise InvalidInput("structure constants must be nonzero")
    t = tutte_polynomial(g) if tutte is None else tutte
    x = Fraction(p.coloop_value) / p.tau
    y = Fraction(p.loop_value) / p.sigma
    return Fraction(p.sigma) ** g.xi * Fraction(p.tau) ** g.rank * t(x, y)


def flow_params(k: int) -> TGParams:
    return TGParams(sigma=-1, tau=1, loop_value=k - 1, coloop_value=0)


def tension_params(l: int) -> TGParams:
    return TGParams(sigma=1, tau=-1, loop_value=0, coloop_value=l - 1)


def specialize(g: OrientedMultigraph, which: str, arg: int, tutte: BivariatePolynomial | None = None) -> Fraction:
    """t_G(0, 1+k) for flows, t_G(1+l, 0) for tensions."""
    if arg < 0:
        raise InvalidInput("argument must be non-negative")
    t = tutte_polynomial(g) if tutte is None else tutte
    if which == FLOW:
        return t(0, 1 + arg)
    if which == TENSION:
        return t(1 + arg, 0)
    raise ValueError(f"unknown specialization {which!r}")


def convolution(g: OrientedMultigraph, l: int, k: int, cap: int | None = None) -> int:
    """Sum over S of t_{G[S]}(0, 1+k) * t_{G/S}(1+l, 0)."""
    if l < 0 or k < 0:
        raise InvalidInput("l and k must be non-negative")
    caps.check_subset_cap(g.n_edges, cap)
    total = Fraction(0)
    for S in iter_subsets(g.edge_ids, cap):
        inner = tutte_polynomial(g.restrict(S, prune=True))
        outer = tutte_polynomial(g.contract(S).prune_isolated())
        total += inner(0, 1 + k) * outer(1 + l, 0)
    assert total.denominator == 1
    return int(total)
