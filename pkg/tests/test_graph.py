import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DATA, g1, g2, graphs, triangle
from modflow.errors import GraphFormatError, InvalidInput, UnknownEdgeError
from modflow.graph import (
    COLOOP,
    LOOP,
    ORDINARY,
    Edge,
    OrientedMultigraph,
    format_graph,
    parse_graph,
    read_graph,
    write_graph,
)


def loop_graph():
    return OrientedMultigraph.from_pairs(1, [(1, 1)])


def test_construction_defaults():
    g = g1()
    assert g.vertices == (1, 2)
    assert g.edge_ids == (1, 2, 3)
    assert g.edge(2) == Edge(2, 1, 2)


def test_construction_rejects_bad_input():
    with pytest.raises(InvalidInput):
        OrientedMultigraph((1, 1), ())
    with pytest.raises(InvalidInput):
        OrientedMultigraph((1, 2), ((1, 1, 2), (1, 2, 1)))
    with pytest.raises(InvalidInput):
        OrientedMultigraph((1, 2), ((1, 1, 3),))
    with pytest.raises(InvalidInput):
        OrientedMultigraph.from_pairs(2, [(1, 2)], ids=[1, 2])


def test_delete():
    g = g1()
    h = g.delete({1})
    assert h.vertices == (1, 2)
    assert h.edge_ids == (2, 3)
    assert g.delete(set()) == g
    assert loop_graph().delete({1}) == OrientedMultigraph((1,), ())


def test_contract_g1_makes_loop():
    h = g1().contract({2, 3})
    assert h.vertices == (1,)
    assert h.edges == (Edge(1, 1, 1),)
    assert g1().contract(set()) == g1()


def test_contract_triangle_edge_gives_parallel_pair():
    h = triangle().contract({1})
    assert h.n_vertices == 2
    assert h.edge_ids == (2, 3)
    assert not any(e.is_loop for e in h.edges)
    assert {frozenset((e.tail, e.head)) for e in h.edges} == {frozenset((1, 3))}


def test_contract_set_is_componentwise():
    # contracting a path 1-2-3 in one step merges all three vertices
    g = OrientedMultigraph.from_pairs(4, [(1, 2), (3, 2), (3, 4), (4, 1)])
    h = g.contract({1, 2})
    assert h.vertices == (1, 4)
    assert h.edges == (Edge(3, 1, 4), Edge(4, 4, 1))


def test_restrict():
    g = g1()
    assert g.restrict(g.edge_ids) == g
    assert g.restrict(()) == OrientedMultigraph((1, 2), ())
    h = g.restrict({1, 2})
    assert h.n_vertices == 2 and h.edge_ids == (1, 2)
    path = OrientedMultigraph.from_pairs(3, [(1, 2), (2, 3)])
    assert path.restrict({2}, prune=True).vertices == (2, 3)


def test_reorient():
    g = g1()
    assert g.reorient(()) == g
    assert g.reorient(g.edge_ids).reorient(g.edge_ids) == g
    h = g.reorient({1})
    assert h.edge(1) == Edge(1, 2, 1)
    assert h.edge(2) == Edge(2, 1, 2)


def test_unknown_edge_errors():
    g = g1()
    for op in (g.delete, g.contract, g.restrict, g.reorient):
        with pytest.raises(UnknownEdgeError) as info:
            op({9})
        assert info.value.edge == 9
    with pytest.raises(UnknownEdgeError):
        g.classify_edge(9)


def test_classify_edge():
    assert OrientedMultigraph.from_pairs(2, [(1, 2)]).classify_edge(1) == COLOOP
    assert loop_graph().classify_edge(1) == LOOP
    assert all(g1().classify_edge(e) == ORDINARY for e in (1, 2, 3))


def test_invariants_examples():
    inv = g1().invariants()
    assert (inv.components, inv.xi) == (1, 2)
    assert inv.indeg == (0, 3) and inv.outdeg == (3, 0)
    assert g2().invariants().xi == 3
    empty = OrientedMultigraph.from_pairs(4, [])
    assert (empty.n_components, empty.xi) == (4, 0)
    loop = loop_graph().invariants()
    assert loop.indeg == (1,) and loop.outdeg == (1,)


def test_incidence_matrix():
    assert g1().incidence_matrix() == ((-1, -1, -1), (1, 1, 1))
    assert loop_graph().incidence_matrix() == ((0,),)
    assert g1().apply_incidence((1, 0, 2)) == (-3, 3)
    assert g1().characteristic_vector({3}) == (0, 0, 1)


@given(graphs(max_edges=6))
def test_incidence_columns_sum_to_zero_and_reorient_negates(g):
    a = g.incidence_matrix()
    for j in range(g.n_edges):
        assert sum(row[j] for row in a) == 0
    sigma = set(g.edge_ids[::2])
    b = g.reorient(sigma).incidence_matrix()
    for j, eid in enumerate(g.edge_ids):
        sign = -1 if eid in sigma else 1
        assert all(rb[j] == sign * ra[j] for ra, rb in zip(a, b))


@given(graphs(max_edges=6))
def test_indegree_minus_outdegree_is_incidence_of_ones(g):
    inv = g.invariants()
    diff = tuple(i - o for i, o in zip(inv.indeg, inv.outdeg))
    assert diff == g.apply_incidence([1] * g.n_edges)


@given(graphs(max_edges=6), st.data())
def test_minor_invariants(g, data):
    if not g.edges:
        return
    eid = data.draw(st.sampled_from(g.edge_ids))
    kind = g.classify_edge(eid)
    deleted, contracted = g.delete({eid}), g.contract({eid})
    assert set(deleted.edge_ids) == set(contracted.edge_ids) == set(g.edge_ids) - {eid}
    if kind == ORDINARY:
        assert deleted.n_components == contracted.n_components == g.n_components
        assert contracted.xi == g.xi and deleted.xi == g.xi - 1
    elif kind == COLOOP:
        assert deleted.n_components == g.n_components + 1
        assert contracted.xi == g.xi
    else:
        assert deleted.xi == g.xi - 1


@given(graphs(max_edges=6), st.data())
def test_identity_stability_for_sets(g, data):
    S = data.draw(st.sets(st.sampled_from(g.edge_ids))) if g.edges else set()
    rest = set(g.edge_ids) - S
    assert set(g.delete(S).edge_ids) == rest
    assert set(g.contract(S).edge_ids) == rest
    assert set(g.restrict(S).edge_ids) == S


# -- text format --------------------------------------------------------------


def test_parse_with_comments():
    g = parse_graph("# a comment\np 2 3\n\ne 1 2\n# another\ne 1 2\ne 1 2\n")
    assert g == g1()


def test_read_data_files():
    assert read_graph(DATA / "g1.graph") == g1()
    assert read_graph(DATA / "g2.graph") == g2()
    assert read_graph(DATA / "empty.graph") == OrientedMultigraph((1,), ())


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", 1),
        ("e 1 2\n", 1),
        ("p 2\n", 1),
        ("p x 1\n", 1),
        ("p 2 1\ne 1 3\n", 2),
        ("p 2 1\ne 1\n", 2),
        ("p 2 1\n# ok\ne 1 2\ne 2 1\n", 4),
        ("p 2 2\ne 1 2\n", 2),
        ("p 2 1\nx 1 2\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}: ")


@settings(max_examples=50)
@given(graphs(max_vertices=5, max_edges=8))
def test_format_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_write_read_is_bit_exact(tmp_path):
    src = (DATA / "g2.graph").read_text()
    g = parse_graph(src)
    out = tmp_path / "copy.graph"
    write_graph(g, out)
    assert read_graph(out) == g
    body = [line for line in src.splitlines() if not line.startswith("#")]
    assert out.read_text().splitlines() == body
