import pytest
from hypothesis import given

from shannon_coloring.errors import GraphFormatError, InfeasibleParameters
from shannon_coloring.multigraph import (
    Multigraph,
    parse_graph,
    random_multigraph,
    serialize_graph,
    shannon_extremal,
)

from conftest import multigraphs


def test_parallel_edges_counted():
    g = Multigraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 3
    assert g.degree(1) == 3
    assert g.multiplicity(0, 1) == 2
    assert g.delta == 3 and g.mu == 2
    assert g.neighbors(1) == [0, 2]
    assert g.other(0, 0) == 1
    assert g.shannon_bound == 4
    assert g.vizing_bound == 5


def test_loops_and_bad_vertices_rejected():
    with pytest.raises(GraphFormatError):
        Multigraph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Multigraph.from_edges(2, [(0, 2)])


def test_parse_ignores_comments():
    g = parse_graph("# hi\n\n3 2\n0 1\n# mid\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 x\n", "2 2\n0 1\n", "2 1\n0 0\n", "2 1\n0 1 2\n"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@given(multigraphs())
def test_serialize_roundtrip(g):
    assert parse_graph(serialize_graph(g, "c1\nc2")) == g


@pytest.mark.parametrize("n,delta,mu", [(64, 2, 1), (64, 3, 3), (200, 6, 3), (100, 8, 8)])
def test_random_respects_caps(n, delta, mu):
    for seed in range(5):
        g = random_multigraph(n, delta, mu, seed)
        assert g.delta <= delta and g.mu <= mu
        assert g.m >= 0.8 * n * delta / 2


def test_random_is_deterministic():
    assert random_multigraph(50, 4, 2, 7) == random_multigraph(50, 4, 2, 7)
    assert random_multigraph(50, 4, 2, 7) != random_multigraph(50, 4, 2, 8)


@pytest.mark.parametrize("args", [(1, 3, 1), (10, 0, 1), (10, 3, 0), (10, 3, 4)])
def test_random_infeasible(args):
    with pytest.raises(InfeasibleParameters):
        random_multigraph(*args, seed=0)


def test_extremal():
    g = shannon_extremal(6)
    assert (g.n, g.m, g.delta, g.mu) == (3, 9, 6, 3)
    assert g.shannon_bound == 9
    for bad in (0, 3, 5):
        with pytest.raises(InfeasibleParameters):
            shannon_extremal(bad)
