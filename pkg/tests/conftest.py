import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from modflow.corpus import exhaustive_graphs, standard_corpus
from modflow.graph import OrientedMultigraph

DATA = Path(__file__).parent / "data"


def g1() -> OrientedMultigraph:
    """Two vertices, three parallel edges all oriented 1 -> 2."""
    return OrientedMultigraph.from_pairs(2, [(1, 2)] * 3)


def g2() -> OrientedMultigraph:
    """Directed triangle a, b, c with b and c doubled; ids 1..5 are a, b, b', c, c'."""
    return OrientedMultigraph.from_pairs(3, [(1, 2), (2, 3), (2, 3), (3, 1), (3, 1)])


def triangle(cyclic: bool = True) -> OrientedMultigraph:
    last = (3, 1) if cyclic else (1, 3)
    return OrientedMultigraph.from_pairs(3, [(1, 2), (2, 3), last])


@pytest.fixture
def G1():
    return g1()


@pytest.fixture
def G2():
    return g2()


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def corpus46():
    """Every graph with |V| <= 4 and |E| <= 6, up to vertex relabeling."""
    return list(exhaustive_graphs(4, 6))


@st.composite
def graphs(draw, max_vertices=4, max_edges=5, min_edges=0):
    n = draw(st.integers(1, max_vertices))
    vertex = st.integers(1, n)
    pairs = draw(st.lists(st.tuples(vertex, vertex), min_size=min_edges, max_size=max_edges))
    return OrientedMultigraph.from_pairs(n, pairs)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, text = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {text}")
