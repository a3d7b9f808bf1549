import pytest

from corpus import labeled, wheel_free_sample
from wheelkit import (
    Coloring, Graph, InvariantViolation, NotWheelFreeError, color3, color4_long, find_long_wheel,
    fixture, verify_coloring, verify_wheel,
)
from wheelkit.coloring import _peel
from wheelkit.oracle import alpha_omega, chromatic_number


def test_c5_uses_three_colors():
    g = Graph.cycle(5)
    c = color3(g)
    assert verify_coloring(g, c).ok
    assert len(set(c.colors)) == 3


def test_k33_uses_at_most_three():
    g = fixture("k33")
    assert verify_coloring(g, color3(g)).ok


def test_r35_is_rejected_with_witness():
    g = fixture("ramsey_r35")
    with pytest.raises(NotWheelFreeError) as info:
        color3(g)
    assert str(info.value) == "not wheel-free"
    assert verify_wheel(g, info.value.witness).ok
    # and no 3-coloring exists at all: 13 vertices, stability number 4
    alpha, _ = alpha_omega(g)
    assert 3 * alpha < g.n
    assert chromatic_number(g) == 4


def test_peel_trace_has_one_step_per_vertex():
    for g in wheel_free_sample(50, seed=3, max_n=40):
        c = color3(g)
        assert len(c.trace) == g.n
        assert c.trace[-1][0] == "base"
        assert all(step[0] in ("deg", "twin") for step in c.trace[:-1])


def test_peel_fails_loudly_without_reduction():
    with pytest.raises(InvariantViolation):
        _peel(Graph.complete(4))


def test_color3_on_wheel_free_sample():
    for g in wheel_free_sample(300, seed=100):
        assert g.n <= 60
        assert verify_coloring(g, color3(g)).ok


def test_color4_examples():
    k4 = Graph.complete(4)
    c = color4_long(k4)
    assert sorted(c.colors) == [0, 1, 2, 3] and verify_coloring(k4, c, 4).ok
    two = Graph(7, k4.edges() + [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
    assert verify_coloring(two, color4_long(two), 4).ok
    k33 = fixture("k33")
    assert verify_coloring(k33, color4_long(k33), 3).ok


def test_color4_rejects_long_wheel():
    with pytest.raises(NotWheelFreeError) as info:
        color4_long(fixture("cube"))
    assert len(info.value.witness.rim) >= 4


def test_color4_on_small_long_wheel_free_graphs():
    count = 0
    for g in labeled(5):
        if find_long_wheel(g) is None:
            assert verify_coloring(g, color4_long(g), 4).ok
            count += 1
    assert count > 0


def test_color4_on_chains_of_k4():
    # K4 blocks strung along cut vertices, plus a triangle hanging off 0
    for m in range(1, 5):
        edges = []
        for i in range(m):
            base = 3 * i
            edges += [(base + a, base + b) for a in range(4) for b in range(a + 1, 4)]
        g = Graph(3 * m + 1, edges)
        g = Graph(g.n + 2, g.edges() + [(0, g.n), (g.n, g.n + 1), (g.n + 1, 0)])
        assert find_long_wheel(g) is None
        assert verify_coloring(g, color4_long(g), 4).ok


def test_verify_coloring_examples():
    g = Graph.cycle(5)
    assert verify_coloring(g, (0, 1, 0, 1, 2)).ok
    bad = verify_coloring(g, (0, 1, 0, 1, 0))
    assert bad.tags == ["proper"] and "(0, 4)" in str(bad.violations[0])
    partial = verify_coloring(g, {0: 0, 1: 1, 2: 0, 3: 1})
    assert partial.tags == ["total"] and "vertex 4" in str(partial.violations[0])
    assert "range" in verify_coloring(g, (0, 1, 0, 1, 3)).tags
    assert verify_coloring(g, (0, 1, 0, 1, 3), max_colors=4).ok
    assert "shape" in verify_coloring(g, (0, 1, 0, 1, 2, 0)).tags
    assert "shape" in verify_coloring(g, 7).tags
    assert "range" in verify_coloring(g, (0, 1, 0, 1, True)).tags


def test_coloring_json_round_trip():
    c = color3(Graph.cycle(5))
    again = Coloring.from_json(c.to_json())
    assert again.colors == c.colors and again.max_colors == 3
