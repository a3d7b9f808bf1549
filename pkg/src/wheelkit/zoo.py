"""Named graphs and seeded generators.

Fixture facts (checked by oracles in the test suite):

- ``k4``: complete on 4 vertices; a wheel (center any vertex).
- ``k33``: parts {0,1,2} / {3,4,5}; wheel-free, 3-connected, six twin pairs.
- ``k33_minus_e``: ``k33`` without the edge 0-3.
- ``cycle n``: C_n on 0..n-1.
- ``theta p q r``: branch vertices 0 and 1 joined by three internally
  disjoint paths with p, q and r edges; ``theta 2 2 2`` is K_{2,3}.
- ``diamond`` / ``kite``: K4 minus the edge 0-1.
- ``cube``: the 3-cube, vertex i adjacent to i ^ 1, i ^ 2, i ^ 4.
- ``petersen``: outer cycle 0..4, spokes i - i+5, inner pentagram.
- ``ramsey_r35``: circulant on Z_13 with connection set {1, 5, 8, 12};
  alpha = 4, omega = 2, chromatic number 4.
- ``glued_k33_pair``: two copies of K_{3,3} sharing one edge 0-1; kappa 2.
- ``complete n``, ``path n``, ``star n``: as named.
"""
import functools
import random

from .graph import Graph

FIXTURES = ("k4", "k33", "k33_minus_e", "cycle", "theta", "diamond", "kite", "cube",
            "petersen", "ramsey_r35", "glued_k33_pair", "complete", "path", "star")
ARITY = {"cycle": 1, "theta": 3, "complete": 1, "path": 1, "star": 1}


def complete_bipartite(a, b):
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def theta(p, q, r):
    arms = (p, q, r)
    if any(not isinstance(x, int) or x < 1 for x in arms):
        raise ValueError("theta arms need at least one edge each")
    if sum(x == 1 for x in arms) > 1:
        raise ValueError("at most one theta arm may be a single edge")
    edges = []
    nxt = 2
    for length in arms:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def circulant(n, jumps):
    return Graph(n, {(min(i, (i + j) % n), max(i, (i + j) % n)) for i in range(n) for j in jumps})


@functools.lru_cache(maxsize=None)
def _ramsey_r35():
    from .oracle import alpha_omega

    g = circulant(13, (1, 5))
    if alpha_omega(g) != (4, 2):
        raise AssertionError("circulant C13(1,5) lost its Ramsey property")
    return g


def _glued_k33_pair():
    # copy one: {0, 2, 3} / {1, 4, 5}; copy two: {0, 6, 7} / {1, 8, 9}
    edges = set()
    for left, right in (((0, 2, 3), (1, 4, 5)), ((0, 6, 7), (1, 8, 9))):
        edges |= {(min(u, v), max(u, v)) for u in left for v in right}
    return Graph(10, edges)


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def fixture(name, *params):
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    want = ARITY.get(name, 0)
    if len(params) != want:
        raise ValueError(f"fixture {name!r} takes {want} parameter(s), got {len(params)}")
    if any(not isinstance(p, int) or p < 0 for p in params):
        raise ValueError("fixture parameters must be non-negative integers")
    if name == "k4":
        return Graph.complete(4)
    if name == "k33":
        return complete_bipartite(3, 3)
    if name == "k33_minus_e":
        return complete_bipartite(3, 3).remove_edge(0, 3)
    if name == "cycle":
        if params[0] < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.cycle(params[0])
    if name == "theta":
        return theta(*params)
    if name in ("diamond", "kite"):
        return Graph.complete(4).remove_edge(0, 1)
    if name == "cube":
        return Graph(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])
    if name == "petersen":
        return _petersen()
    if name == "ramsey_r35":
        return _ramsey_r35()
    if name == "glued_k33_pair":
        return _glued_k33_pair()
    if name == "complete":
        return Graph.complete(params[0])
    if name == "path":
        return Graph.path(params[0])
    return Graph(params[0] + 1, [(0, i) for i in range(1, params[0] + 1)])


def degree_condition_problems(g):
    """Vertices of degree >= 3 with more than two neighbours of degree >= 3."""
    return [v for v in range(g.n)
            if g.degree(v) >= 3 and sum(g.degree(u) >= 3 for u in g.neighbors(v)) > 2]


def make_wheel_free(g, seed):
    """Subdivide edges between high-degree vertices, chosen by a seeded
    RNG, until each vertex of degree >= 3 has at most two neighbours of
    degree >= 3. No vertex can then center a wheel."""
    rng = random.Random(seed)
    n = g.n
    edges = set(g.edges())
    deg = list(g.degrees())
    nbrs = [set(g.neighbors(v)) for v in range(n)]
    while True:
        bad = [v for v in range(n)
               if deg[v] >= 3 and sum(deg[u] >= 3 for u in nbrs[v]) > 2]
        if not bad:
            break
        v = rng.choice(bad)
        u = rng.choice(sorted(w for w in nbrs[v] if deg[w] >= 3))
        edges.discard((min(u, v), max(u, v)))
        edges |= {(u, n), (v, n)}
        nbrs[u].discard(v)
        nbrs[v].discard(u)
        nbrs[u].add(n)
        nbrs[v].add(n)
        nbrs.append({u, v})
        deg.append(2)
        n += 1
    return Graph(n, edges)


def random_graph(n, p, seed):
    """G(n, p), deterministic for a given seed."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_wheel_free(n, p, seed):
    """``make_wheel_free`` applied to ``random_graph(n, p, seed)``."""
    return make_wheel_free(random_graph(n, p, seed), seed)
