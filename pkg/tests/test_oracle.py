import networkx as nx
import pytest

from corpus import random_sample, to_nx
from wheelkit import BudgetExceeded, Graph, fixture
from wheelkit.oracle import (
    OracleBudget, all_labeled_graphs, alpha_omega, brute_cycle_through, brute_k33_subdivision,
    brute_wheel, chromatic_number, optimal_coloring, simple_cycles,
)


def test_simple_cycles_counts():
    assert len(list(simple_cycles(Graph.complete(4)))) == 7
    assert len(list(simple_cycles(fixture("k33")))) == 15
    assert list(simple_cycles(Graph.path(5))) == []


def test_simple_cycles_match_networkx():
    for g in random_sample(40, (4, 8), (0.3, 0.5), seed=4):
        ours = {frozenset(c) for c in simple_cycles(g) if len(c) == 3}
        theirs = {frozenset(c) for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == 3}
        assert ours == theirs
        assert len(list(simple_cycles(g))) == sum(1 for _ in nx.simple_cycles(to_nx(g)))


def test_labeled_graph_counts():
    assert [sum(1 for _ in all_labeled_graphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]


def test_chromatic_number():
    assert chromatic_number(Graph(0)) == 0
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(Graph.cycle(5)) == 3
    assert chromatic_number(fixture("petersen")) == 3
    assert chromatic_number(Graph.complete(5)) == 5


def test_optimal_coloring_is_proper():
    g = fixture("petersen")
    c = optimal_coloring(g)
    assert max(c) + 1 == 3
    assert all(c[u] != c[v] for u, v in g.edges())


def test_alpha_omega():
    assert alpha_omega(fixture("petersen")) == (4, 2)
    assert alpha_omega(fixture("ramsey_r35")) == (4, 2)
    assert alpha_omega(Graph.complete(4)) == (1, 4)


def test_cycle_through_and_wheel():
    assert brute_cycle_through(Graph.cycle(5), 0, 2, 4) is not None
    assert brute_cycle_through(fixture("theta", 2, 2, 2), 2, 3, 4) is None
    assert brute_wheel(fixture("k33")) is None
    assert brute_wheel(Graph.complete(4)).center == 0


def test_k33_subdivision():
    assert brute_k33_subdivision(fixture("k33")) is not None
    assert brute_k33_subdivision(fixture("theta", 2, 3, 2)) is None
    assert brute_k33_subdivision(fixture("petersen")) is not None
    assert brute_k33_subdivision(Graph.complete(5)) is None


def test_budgets_refuse_large_graphs():
    with pytest.raises(BudgetExceeded):
        brute_wheel(Graph.cycle(20))
    with pytest.raises(BudgetExceeded):
        chromatic_number(Graph.cycle(5), OracleBudget(4))
    with pytest.raises(BudgetExceeded):
        list(simple_cycles(Graph.complete(9), OracleBudget(9, max_cycles=100)))
