import itertools
import math

import networkx as nx
import pytest

from corpus import random_sample, three_connected_corpus, to_nx, wheel_free_corpus
from wheelkit import (
    Graph, StructuralError, classify, essential_edges, extend_2cut_block, extend_3sep, fixture,
    fragments_and_ends, is_minimally_3_connected, kappa, wheel_centers,
)
from wheelkit.connectivity import COMPLETE, Fragment, ends, fragment_problems, minimum_cutsets
from wheelkit.graph import components, is_connected
from wheelkit.oracle import simple_cycles


def iso(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def test_kappa_examples():
    assert kappa(fixture("k4")) == (3, COMPLETE)
    k, cut = kappa(fixture("k33"))
    assert k == 3 and sorted(cut) in ([0, 1, 2], [3, 4, 5])
    assert kappa(fixture("ramsey_r35"))[0] == 4
    assert kappa(Graph(3, [(0, 1)])) == (0, ())
    assert kappa(Graph(1)) == (0, COMPLETE)
    with pytest.raises(ValueError):
        kappa(Graph(0))


def test_kappa_matches_networkx():
    for g in random_sample(300, (2, 11), (0.2, 0.4, 0.6, 0.8), seed=31):
        k, cut = kappa(g)
        assert k == nx.node_connectivity(to_nx(g))
        if cut not in (COMPLETE, ()):
            assert len(cut) == k and len(components(g, cut)) >= 2


def test_minimum_cutsets_of_c5():
    cuts = minimum_cutsets(Graph.cycle(5))
    assert sorted(sorted(c) for c in cuts) == sorted(
        sorted(p) for p in itertools.combinations(range(5), 2) if (p[1] - p[0]) % 5 not in (1, 4))


def test_fragments_of_k23():
    g = fixture("theta", 2, 2, 2)
    frs = fragments_and_ends(g)
    assert {fr.F for fr in frs if fr.is_end} == {frozenset([2]), frozenset([3]), frozenset([4])}
    assert frozenset([2, 3]) in {fr.F for fr in frs}
    for fr in frs:
        assert fragment_problems(g, fr) == []


def test_fragments_of_c5():
    g = Graph.cycle(5)
    frs = fragments_and_ends(g)
    assert {fr.F for fr in ends(g)} == {frozenset([v]) for v in range(5)}
    # a path of two consecutive vertices is cut off by its two outer neighbours
    assert frozenset([0, 1]) in {fr.F for fr in frs}


def test_glued_pair_sides_are_fragments():
    g = fixture("glued_k33_pair")
    frs = {fr.F: fr for fr in fragments_and_ends(g)}
    for side in ({2, 3, 4, 5}, {6, 7, 8, 9}):
        fr = frs[frozenset(side)]
        assert fr.neighborhood == {0, 1} and fr.is_end


def test_fragments_require_connected_non_complete():
    with pytest.raises(StructuralError):
        fragments_and_ends(Graph.complete(4))
    with pytest.raises(StructuralError):
        fragments_and_ends(Graph(4, [(0, 1), (2, 3)]))


def test_two_disjoint_ends_everywhere():
    for g in random_sample(200, (4, 10), (0.3, 0.5), seed=32):
        if not is_connected(g) or g.num_edges == g.n * (g.n - 1) // 2:
            continue
        es = [fr.F for fr in ends(g)]
        assert any(not a & b for a, b in itertools.combinations(es, 2))


def test_fragment_problems_flags_bad_sets():
    g = Graph.cycle(5)
    assert fragment_problems(g, Fragment(frozenset(), frozenset(), frozenset()))
    assert fragment_problems(g, Fragment(frozenset([0, 1, 2]), frozenset([3, 4]), frozenset()))
    assert fragment_problems(g, Fragment(frozenset([9]), frozenset(), frozenset()))


def test_essential_edges_examples():
    assert len(essential_edges(Graph.complete(4))) == 6
    assert is_minimally_3_connected(Graph.complete(4)).ok
    assert len(essential_edges(fixture("k33"))) == 9
    assert is_minimally_3_connected(fixture("k33")).ok
    k5 = Graph.complete(5)
    assert len(essential_edges(k5)) == 10
    assert "kappa" in is_minimally_3_connected(k5).tags
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert is_minimally_3_connected(prism).ok
    assert "essential" in is_minimally_3_connected(prism.add_edges([(0, 4)])).tags


def test_extend_2cut_block_on_glued_pair():
    g = fixture("glued_k33_pair")
    ext = extend_2cut_block(g, {2, 3, 4, 5})
    assert iso(ext.graph, fixture("k33"))
    assert {ext.origin[ext.roles["a"]], ext.origin[ext.roles["b"]]} == {0, 1}


def test_extend_2cut_block_preconditions():
    g = fixture("theta", 2, 2, 2)
    with pytest.raises(StructuralError):
        extend_2cut_block(g, {2})
    with pytest.raises(StructuralError):
        extend_2cut_block(fixture("k33"), {0, 1})
    with pytest.raises(StructuralError):
        extend_2cut_block(fixture("glued_k33_pair"), {2, 3, 4, 5, 6})


def test_extend_2cut_block_on_wheel_free_corpus():
    seen = 0
    for g in wheel_free_corpus():
        if g.n < 4 or kappa(g)[0] != 2:
            continue
        for fr in ends(g):
            if len(fr.F) < 2:
                continue
            ext = extend_2cut_block(g, fr)
            assert kappa(ext.graph)[0] >= 3
            assert wheel_centers(ext.graph) <= {ext.roles["a"], ext.roles["b"]}
            seen += 1
    assert seen >= 3


def test_extend_3sep_on_k33():
    g = fixture("k33")
    ext = extend_3sep(g, {3})
    assert iso(ext.graph, g)
    assert ext.created == ()
    assert all(ext.roles[x + "'"] == ext.roles[x] for x in "abc")


def test_extend_3sep_primed_copies():
    g = fixture("k33")
    f = {3, 4}
    ext = extend_3sep(g, f)
    h = ext.graph
    assert ext.created == ("a'", "b'", "c'")
    for name in ext.created:
        p = ext.roles[name]
        assert h.degree(p) == 3
        assert h.adj(p) == {ext.roles[name[0]], ext.roles["d"], ext.roles["d'"]}
    assert h.n == len(f) + 3 + 2 + len(ext.created)
    assert ext.origin[h.n - 2:] == (None, None)


def test_extend_3sep_preconditions():
    with pytest.raises(StructuralError):
        extend_3sep(fixture("k33"), {0, 1, 2})
    with pytest.raises(StructuralError):
        extend_3sep(Graph.cycle(5), {0})


def test_extend_3sep_gives_almost_wheel_free_3_connected():
    checked = 0
    for g in three_connected_corpus():
        if kappa(g)[0] != 3 or not classify(g).almost_wheel_free or g.n > 12:
            continue
        for fr in fragments_and_ends(g)[:3]:
            ext = extend_3sep(g, fr)
            assert kappa(ext.graph)[0] == 3
            assert classify(ext.graph).almost_wheel_free
            checked += 1
    assert checked > 0


def test_minimally_3_connected_degree_bounds():
    for g in three_connected_corpus():
        if g.n > 12 or not is_minimally_3_connected(g).ok:
            continue
        deg3 = {v for v in range(g.n) if g.degree(v) == 3}
        assert len(deg3) >= math.ceil((2 * g.n + 2) / 5)
        assert all(set(c) & deg3 for c in simple_cycles(g))


def test_non_essential_edges_join_wheel_centers():
    for g in three_connected_corpus():
        if g.n > 12:
            continue
        w = wheel_centers(g)
        essential = set(essential_edges(g))
        for e in g.edges():
            if e not in essential:
                assert set(e) <= w
