import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from corpus import random_sample, to_nx, three_connected_corpus, wheel_free_corpus
from wheelkit import (
    Graph, ReductionOutcome, TwinPair, classify, close_to_twin, disjoint_twin_pairs, fixture,
    reduction_step, twin_pairs, verify_outcome,
)
from wheelkit.structure import TRICHOTOMY, twin_problems


def test_twin_pairs_examples():
    assert twin_pairs(fixture("k33")) == [
        TwinPair(0, 1), TwinPair(0, 2), TwinPair(1, 2), TwinPair(3, 4), TwinPair(3, 5), TwinPair(4, 5)]
    assert twin_pairs(Graph.cycle(5)) == []
    assert twin_pairs(Graph.complete(4)) == []


def test_twin_pairs_match_definition():
    for g in random_sample(200, (4, 9), (0.3, 0.5), seed=41):
        want = sorted(TwinPair(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                      if not twin_problems(g, u, v))
        assert twin_pairs(g) == want


def test_twin_problems():
    g = fixture("k33")
    assert twin_problems(g, 0, 1) == []
    assert twin_problems(g, 0, 3)
    assert twin_problems(g, 0, 0)
    assert twin_problems(g, 0, 9)
    assert twin_problems(fixture("theta", 2, 2, 2), 2, 3)


def test_disjoint_twin_pairs():
    assert disjoint_twin_pairs(fixture("k33")) == (TwinPair(0, 1), TwinPair(3, 4))
    assert disjoint_twin_pairs(Graph.cycle(6)) is None


def test_three_connected_wheel_free_graphs_have_two_twin_pairs():
    graphs = [g for g in three_connected_corpus() if classify(g).almost_wheel_free]
    assert graphs
    for g in graphs:
        p, q = disjoint_twin_pairs(g)
        assert not {p.u, p.v} & {q.u, q.v}


def test_reduction_examples():
    assert reduction_step(Graph.cycle(5)) == ReductionOutcome("TwoDeg2", (0, 1))
    assert reduction_step(fixture("k33")).kind == "TwoTwinPairs"
    assert reduction_step(Graph.complete(4)) == ReductionOutcome("NotFound")
    assert not reduction_step(Graph.complete(4)).found
    with pytest.raises(ValueError):
        reduction_step(Graph(1))


def test_reduction_partial_outcomes():
    # the twin pairs left all lie inside {3, 4, 5}, so no two are disjoint
    g = fixture("k33").add_edges([(0, 1)])
    assert reduction_step(g) == ReductionOutcome("Twins", pairs=(TwinPair(3, 4),))
    h = Graph(5, Graph.complete(4).edges() + [(0, 4), (1, 4)])
    assert reduction_step(h) == ReductionOutcome("Deg2", (4,))
    assert reduction_step(Graph.complete(5)).kind == "NotFound"


def test_reduction_trichotomy_on_wheel_free_corpus():
    for g in wheel_free_corpus():
        if g.n < 2:
            continue
        o = reduction_step(g)
        assert o.kind in TRICHOTOMY
        assert verify_outcome(g, o).ok


def test_verify_outcome_rejects():
    g = fixture("k33")
    good = reduction_step(g)
    assert verify_outcome(g, good).ok
    assert "shape" in verify_outcome(g, ReductionOutcome("TwoTwinPairs", pairs=good.pairs[:1])).tags
    assert "twins" in verify_outcome(g, ReductionOutcome("TwoTwinPairs", pairs=(TwinPair(0, 1), TwinPair(0, 2)))).tags
    assert "twins" in verify_outcome(g, ReductionOutcome("Twins", pairs=(TwinPair(0, 3),))).tags
    assert "vertices" in verify_outcome(g, ReductionOutcome("TwoDeg2", (0, 1))).tags
    assert "kind" in verify_outcome(g, ReductionOutcome("Maybe")).tags


def test_outcome_json():
    o = reduction_step(fixture("k33"))
    assert o.to_json() == {"kind": "TwoTwinPairs", "vertices": [], "pairs": [[0, 1], [3, 4]]}


def test_close_to_twin():
    assert all(close_to_twin(fixture("k33"), v) for v in range(6))
    assert not any(close_to_twin(Graph.cycle(5), v) for v in range(5))
    assert not close_to_twin(fixture("star", 3), 0)


def test_almost_wheel_free_3_connected_properties():
    k33_minus_e = to_nx(fixture("k33_minus_e"))
    for g in three_connected_corpus():
        if not classify(g).almost_wheel_free:
            continue
        # triangle-free
        assert not any(g.adj(u) & g.adj(v) for u, v in g.edges())
        # any two vertices with three common neighbours are twins
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if len(g.adj(u) & g.adj(v)) >= 3:
                    assert twin_problems(g, u, v) == []
        # containing K33 minus an edge forces K33 itself
        gm = isomorphism.GraphMatcher(to_nx(g), k33_minus_e)
        if gm.subgraph_is_monomorphic():
            assert nx.is_isomorphic(to_nx(g), to_nx(fixture("k33")))
