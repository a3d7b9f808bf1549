"""Brute-force ground truth for small graphs.

Everything here is deliberately naive: exhaustive cycle enumeration,
exhaustive (center, cycle) wheel search, backtracking colorings and
cliques, and an exhaustive K_{3,3}-subdivision search. Each oracle
refuses graphs beyond its budget instead of running indefinitely.
"""
import itertools
import time
from dataclasses import dataclass

from .errors import BudgetExceeded
from .wheels import WheelWitness


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_cycles: int = 5_000_000
    time_cap: float = 120.0


CYCLE_BUDGET = OracleBudget(12)
COLOR_BUDGET = OracleBudget(16)
K33_BUDGET = OracleBudget(13)


class _Clock:
    def __init__(self, budget):
        self.budget = budget
        self.start = time.monotonic()
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.budget.max_cycles:
            raise BudgetExceeded(f"more than {self.budget.max_cycles} search steps")
        if self.steps % 4096 == 0 and time.monotonic() - self.start > self.budget.time_cap:
            raise BudgetExceeded(f"time cap of {self.budget.time_cap}s exceeded")


def _check_size(g, budget):
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds oracle budget of {budget.max_vertices} vertices")


def simple_cycles(g, budget=CYCLE_BUDGET):
    """Yield every simple cycle once: rooted at its smallest vertex and
    oriented so the second vertex is smaller than the last."""
    _check_size(g, budget)
    clock = _Clock(budget)
    for root in range(g.n):
        path = [root]
        on_path = {root}
        stack = [iter(g.neighbors(root))]
        while stack:
            for w in stack[-1]:
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    clock.tick()
                    yield tuple(path)
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    stack.append(iter(g.neighbors(w)))
                    break
            else:
                stack.pop()
                on_path.discard(path.pop())


def brute_cycle_through(g, x, y, z, budget=CYCLE_BUDGET):
    """Some cycle containing ``x, y, z`` or ``None`` (exhaustive DFS)."""
    _check_size(g, budget)
    g.check_vertex(x, y, z)
    need = {x, y, z}
    clock = _Clock(budget)
    path = [x]
    on_path = {x}
    stack = [iter(g.neighbors(x))]
    while stack:
        for w in stack[-1]:
            if w == x:
                if len(path) >= 3 and need <= on_path:
                    return tuple(path)
            elif w not in on_path:
                clock.tick()
                path.append(w)
                on_path.add(w)
                stack.append(iter(g.neighbors(w)))
                break
        else:
            stack.pop()
            on_path.discard(path.pop())
    return None


def _cycle_with_spokes(g, center, k, min_rim, clock):
    nbrs = set(g.neighbors(center))
    for root in sorted(nbrs):
        # roots are the smallest spoke on the cycle
        banned = {center} | {u for u in nbrs if u < root}
        path = [root]
        on_path = {root}
        hits = 1
        stack = [iter(g.neighbors(root))]
        while stack:
            for w in stack[-1]:
                if w == root:
                    if len(path) >= max(3, min_rim) and hits >= k:
                        return tuple(path)
                elif w not in on_path and w not in banned:
                    clock.tick()
                    path.append(w)
                    on_path.add(w)
                    hits += w in nbrs
                    stack.append(iter(g.neighbors(w)))
                    break
            else:
                stack.pop()
                v = path.pop()
                on_path.discard(v)
                hits -= v in nbrs
    return None


def brute_hub(g, k=3, min_rim=3, centers=None, budget=CYCLE_BUDGET):
    """Exhaustive search for a cycle plus a vertex with ``k`` neighbours
    on it. ``min_rim=4`` restricts to long wheels."""
    _check_size(g, budget)
    clock = _Clock(budget)
    for v in (range(g.n) if centers is None else centers):
        if g.degree(v) < k:
            continue
        rim = _cycle_with_spokes(g, v, k, min_rim, clock)
        if rim is not None:
            spokes = tuple(sorted(u for u in rim if g.has_edge(u, v)))
            return WheelWitness(v, rim, spokes, k)
    return None


def brute_wheel(g, budget=CYCLE_BUDGET):
    return brute_hub(g, 3, budget=budget)


def brute_long_wheel(g, budget=CYCLE_BUDGET):
    return brute_hub(g, 3, min_rim=4, budget=budget)


def brute_wheel_centers(g, budget=CYCLE_BUDGET):
    return {v for v in range(g.n) if brute_hub(g, 3, centers=[v], budget=budget)}


def _colorable(g, k, order, clock):
    color = [-1] * g.n

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        used = {color[w] for w in g.neighbors(v)}
        # symmetry: a new color index may only be the next unused one
        top = max(color[u] for u in order[:i]) + 1 if i else 0
        for c in range(min(k, top + 1)):
            if c in used:
                continue
            clock.tick()
            color[v] = c
            if place(i + 1):
                return True
        color[v] = -1
        return False

    return color if place(0) else None


def chromatic_number(g, budget=COLOR_BUDGET):
    """Exact chromatic number by backtracking over k = 1, 2, ..."""
    _check_size(g, budget)
    if g.n == 0:
        return 0
    clock = _Clock(budget)
    order = _bfs_order(g)
    for k in range(1, g.n + 1):
        if _colorable(g, k, order, clock) is not None:
            return k
    return g.n


def optimal_coloring(g, budget=COLOR_BUDGET):
    k = chromatic_number(g, budget)
    return _colorable(g, k, _bfs_order(g), _Clock(budget)) if g.n else []


def _bfs_order(g):
    """Vertices by decreasing degree, grown along adjacency so the
    backtracking sees constrained vertices early."""
    order, seen = [], set()
    for start in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda u: (-g.degree(u), u)):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return order


def _max_clique(n, adj, clock):
    best = []

    def expand(clique, cand):
        nonlocal best
        if len(clique) + len(cand) <= len(best):
            return
        if not cand:
            best = list(clique)
            return
        for v in sorted(cand):
            clock.tick()
            expand(clique + [v], cand & adj[v])
            cand = cand - {v}
            if len(clique) + len(cand) <= len(best):
                return

    expand([], set(range(n)))
    return best


def alpha_omega(g, budget=COLOR_BUDGET):
    """(independence number, clique number) by exhaustive search."""
    _check_size(g, budget)
    clock = _Clock(budget)
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    co_adj = [set(range(g.n)) - adj[v] - {v} for v in range(g.n)]
    return len(_max_clique(g.n, co_adj, clock)), len(_max_clique(g.n, adj, clock))


@dataclass(frozen=True)
class K33Subdivision:
    left: tuple
    right: tuple
    paths: tuple


def brute_k33_subdivision(g, budget=K33_BUDGET):
    """Exhaustive search for a subdivision of K_{3,3}.

    Tries every pair of disjoint branch triples and routes the nine
    paths by backtracking over simple paths.
    """
    _check_size(g, budget)
    clock = _Clock(budget)
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    for left in itertools.combinations(big, 3):
        rest = [v for v in big if v not in left and v > left[0]]
        for right in itertools.combinations(rest, 3):
            paths = _route_nine(g, left, right, clock)
            if paths is not None:
                return K33Subdivision(left, right, tuple(paths))
    return None


def _route_nine(g, left, right, clock):
    pairs = [(a, b) for a in left for b in right]
    branch = set(left) | set(right)
    used = set(branch)
    chosen = []

    def simple_paths(a, b):
        path = [a]
        seen = {a}

        def walk(u):
            for w in g.neighbors(u):
                if w == b:
                    yield path + [b]
                elif w not in used and w not in seen:
                    clock.tick()
                    path.append(w)
                    seen.add(w)
                    yield from walk(w)
                    path.pop()
                    seen.discard(w)

        return walk(a)

    def place(i):
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for p in simple_paths(a, b):
            inner = p[1:-1]
            used.update(inner)
            chosen.append(tuple(p))
            if place(i + 1):
                return True
            chosen.pop()
            used.difference_update(inner)
        return False

    return list(chosen) if place(0) else None


def all_labeled_graphs(n):
    """Every labeled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    from .graph import Graph

    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph(n, [e for i, e in enumerate(slots) if mask >> i & 1])
