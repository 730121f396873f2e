from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import g1, g2, graphs
from modflow import flows
from modflow.assignments import ModularAssignment
from modflow.errors import CapExceeded, InvalidInput
from modflow.graph import ORDINARY, OrientedMultigraph
from modflow.polynomials import Polynomial

K = Polynomial.variable()
COLOOP_GRAPH = OrientedMultigraph.from_pairs(3, [(1, 2), (2, 1), (2, 3)])


def test_is_flow_examples():
    g = g1()
    assert flows.is_flow(g, ModularAssignment.of(g, (1, 1, 2), 4))
    assert not flows.is_flow(g, ModularAssignment.of(g, (1, 1, 1), 4))
    for m in (1, 2, 5):
        assert flows.is_flow(g2(), ModularAssignment.zero(g2(), m))
    single = OrientedMultigraph.from_pairs(2, [(1, 2)])
    assert not flows.is_flow(single, ModularAssignment.of(single, (1,), 3))


def test_is_flow_missing_value():
    with pytest.raises(InvalidInput):
        flows.is_flow(g1(), ModularAssignment(3, {1: 1, 2: 2}))


def test_count_examples():
    assert flows.count_nowhere_zero_flows(g1(), 4) == 6
    assert flows.count_nowhere_zero_flows(g2(), 3) == 2
    for method in (flows.TRANSFER, flows.BASIS, flows.SCAN):
        assert flows.count_nowhere_zero_flows(COLOOP_GRAPH, 5, method) == 0
    with pytest.raises(InvalidInput):
        flows.count_nowhere_zero_flows(g1(), 0)


def test_g1_nowhere_zero_z4_flows_listed():
    found = sorted(v for v in flows.iter_flows(g1(), 4) if all(v))
    assert found == [(1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 3, 3), (3, 2, 3), (3, 3, 2)]


def test_polynomial_examples():
    for method in (flows.DELETION_CONTRACTION, flows.ENUMERATE, flows.BASIS, flows.SCAN):
        assert flows.flow_polynomial(g1(), method) == (K - 1) * (K - 2)
        assert flows.flow_polynomial(g2(), method) == (K - 1) * (K - 2) ** 2
    assert flows.flow_polynomial(OrientedMultigraph.from_pairs(3, [])) == 1
    assert flows.flow_polynomial(COLOOP_GRAPH).is_zero()
    with pytest.raises(ValueError):
        flows.flow_polynomial(g1(), "nope")


def test_signed_value():
    assert [flows.signed_flow_value(g1(), k) for k in (1, 2, 3)] == [6, 12, 20]
    assert [flows.signed_flow_value(g2(), k) for k in (1, 2, 3)] == [18, 48, 100]


def test_scan_cap():
    g = OrientedMultigraph.from_pairs(1, [(1, 1)] * 6)
    with pytest.raises(CapExceeded):
        list(flows.iter_flows(g, 10, flows.SCAN, cap=1000))


def test_methods_agree_on_exhaustive_corpus(corpus46):
    bad = [g for g in corpus46 if flows.flow_polynomial(g) != flows.flow_polynomial(g, flows.ENUMERATE)]
    assert bad == []


@settings(max_examples=60)
@given(graphs(max_vertices=4, max_edges=6))
def test_polynomial_matches_counts(g):
    p = flows.flow_polynomial(g)
    assert p.is_integral()
    for k in range(1, 6):
        assert p(k) == flows.count_nowhere_zero_flows(g, k)
    assert p(1) == (0 if g.edges else 1)
    coloop_free = all(g.classify_edge(e) != "coloop" for e in g.edge_ids)
    if coloop_free:
        assert p.degree == g.xi and p.leading == 1
    else:
        assert p.is_zero()


@settings(max_examples=60)
@given(graphs(max_vertices=4, max_edges=5), st.integers(1, 4))
def test_enumeration_methods_agree(g, k):
    basis = sorted(flows.iter_flows(g, k, flows.BASIS))
    scan = sorted(flows.iter_flows(g, k, flows.SCAN))
    assert basis == scan
    assert len(basis) == k**g.xi == flows.count_flows(g, k)


@settings(max_examples=60)
@given(graphs(max_vertices=4, max_edges=5), st.integers(2, 4), st.data())
def test_projection_lemma(g, k, data):
    ordinary = [e for e in g.edge_ids if g.classify_edge(e) == ORDINARY]
    if not ordinary:
        return
    e = data.draw(st.sampled_from(ordinary))
    contracted, deleted = g.contract({e}), g.delete({e})
    for vec in flows.iter_flows(g, k):
        f = ModularAssignment.of(g, vec, k)
        rest = f.restrict(contracted.edge_ids)
        assert flows.is_flow(contracted, rest)
        assert flows.is_flow(deleted, rest) == (f[e] == 0)


@settings(max_examples=60)
@given(graphs(max_vertices=4, max_edges=5), st.integers(2, 4), st.data())
def test_lift_is_unique_extension(g, k, data):
    ordinary = [e for e in g.edge_ids if g.classify_edge(e) == ORDINARY]
    if not ordinary:
        return
    e = data.draw(st.sampled_from(ordinary))
    for minor, h in ((flows.CONTRACT, g.contract({e})), (flows.DELETE, g.delete({e}))):
        for vec in flows.iter_flows(h, k):
            fp = ModularAssignment.of(h, vec, k)
            f = flows.restrict_lift_flow(g, e, fp, minor)
            assert f.restrict(h.edge_ids) == fp
            candidates = [
                x for x in range(k)
                if flows.is_flow(g, ModularAssignment(k, {**fp.values, e: x}))
            ]
            assert candidates == [f[e]]
            if minor == flows.DELETE:
                assert f[e] == 0


def test_lift_examples():
    g = g1()
    h = g.contract({1})
    f = flows.restrict_lift_flow(g, 1, ModularAssignment.of(h, (1, 2), 3))
    assert f.vector(g) == (0, 1, 2)
    f = flows.restrict_lift_flow(g, 1, ModularAssignment.of(h, (1, 1), 3))
    assert f.vector(g) == (1, 1, 1)
    zero = flows.restrict_lift_flow(g, 1, ModularAssignment.zero(g.delete({1}), 3), flows.DELETE)
    assert zero == ModularAssignment.zero(g, 3)


def test_lift_errors():
    loop = OrientedMultigraph.from_pairs(1, [(1, 1), (1, 1)])
    with pytest.raises(InvalidInput):
        flows.restrict_lift_flow(loop, 1, ModularAssignment.zero(loop.delete({1}), 2))
    with pytest.raises(InvalidInput):
        flows.restrict_lift_flow(COLOOP_GRAPH, 3, ModularAssignment.zero(COLOOP_GRAPH.delete({3}), 2))
    g = g1()
    with pytest.raises(InvalidInput):
        flows.restrict_lift_flow(g, 1, ModularAssignment.of(g.delete({1}), (1, 1), 3), flows.DELETE)


def test_small_moduli_exhaustively():
    for g, k in product((g1(), g2()), (1, 2, 3)):
        assert flows.count_nowhere_zero_flows(g, k, flows.SCAN) == flows.flow_polynomial(g)(k)
