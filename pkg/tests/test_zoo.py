import networkx as nx
import pytest

from corpus import to_nx
from wheelkit import Graph, find_wheel, fixture, kappa, make_wheel_free, random_graph, twin_pairs
from wheelkit.cli import digest
from wheelkit.oracle import alpha_omega, brute_cycle_through, brute_wheel, chromatic_number
from wheelkit.zoo import FIXTURES, degree_condition_problems, random_wheel_free


def test_k33_facts():
    g = fixture("k33")
    assert (g.n, g.num_edges) == (6, 9)
    assert brute_wheel(g) is None
    assert kappa(g)[0] == 3
    assert len(twin_pairs(g)) == 6
    assert chromatic_number(g) == 2 and alpha_omega(g) == (3, 2)


def test_k23_has_no_cycle_through_middles():
    g = fixture("theta", 2, 2, 2)
    assert (g.n, g.num_edges) == (5, 6)
    assert brute_cycle_through(g, 2, 3, 4) is None


def test_ramsey_facts():
    g = fixture("ramsey_r35")
    assert g.n == 13 and set(g.degrees()) == {4}
    assert chromatic_number(g) == 4
    assert alpha_omega(g) == (4, 2)


def test_other_fixtures():
    assert brute_wheel(fixture("k4")) is not None
    assert fixture("diamond") == fixture("kite") and fixture("diamond").num_edges == 5
    assert fixture("k33_minus_e").num_edges == 8 and not fixture("k33_minus_e").has_edge(0, 3)
    cube = fixture("cube")
    assert set(cube.degrees()) == {3} and cube.num_edges == 12 and chromatic_number(cube) == 2
    p = fixture("petersen")
    assert set(p.degrees()) == {3} and alpha_omega(p) == (4, 2) and chromatic_number(p) == 3
    glued = fixture("glued_k33_pair")
    assert (glued.n, glued.num_edges) == (10, 17) and kappa(glued)[0] == 2
    assert fixture("star", 3).degrees()[0] == 3
    assert fixture("path", 4) == Graph.path(4)


def test_every_fixture_builds():
    for name in FIXTURES:
        params = {"cycle": (5,), "theta": (1, 2, 3), "complete": (4,), "path": (3,), "star": (3,)}
        assert fixture(name, *params.get(name, ())).n > 0


@pytest.mark.parametrize("args", [
    ("nope",), ("k33", 1), ("cycle",), ("cycle", 2), ("theta", 1, 1, 2), ("theta", 0, 2, 2),
    ("complete", -1),
])
def test_bad_fixture_parameters(args):
    with pytest.raises(ValueError):
        fixture(*args)


def test_random_graph():
    assert random_graph(0, 0.5, 1).n == 0
    assert random_graph(1, 0.5, 1) == Graph(1)
    assert random_graph(5, 1, 9) == Graph.complete(5)
    g = random_graph(10, 0.3, 42)
    assert digest(g) == "88e02666d9cf117100a48fe67638bd4ce046b7a58c7e97ad328cdc496d187c91"
    assert random_graph(10, 0.3, 42) == g
    with pytest.raises(ValueError):
        random_graph(5, 1.5, 0)
    with pytest.raises(ValueError):
        random_graph(-1, 0.5, 0)


def test_make_wheel_free_examples():
    k4 = make_wheel_free(Graph.complete(4), 0)
    assert find_wheel(k4) is None and k4.n > 4
    assert make_wheel_free(Graph.cycle(5), 7) == Graph.cycle(5)
    k5 = make_wheel_free(Graph.complete(5), 3)
    assert find_wheel(k5) is None
    assert list(k5.degrees())[:5] == [4] * 5
    assert sum(d <= 3 for d in k5.degrees()) >= 2


def test_make_wheel_free_is_seeded_and_sound():
    for seed in range(200):
        g = random_wheel_free(12, 0.4, seed)
        assert degree_condition_problems(g) == []
        assert find_wheel(g) is None
        assert g == random_wheel_free(12, 0.4, seed)


def test_subdivision_preserves_the_original_graph_topologically():
    g = Graph.complete(5)
    h = to_nx(make_wheel_free(g, 5))
    # suppressing the degree-2 vertices recovers K5
    for v in [v for v in h if h.degree(v) == 2]:
        a, b = h.neighbors(v)
        h.remove_node(v)
        h.add_edge(a, b)
    assert nx.is_isomorphic(h, nx.complete_graph(5))
