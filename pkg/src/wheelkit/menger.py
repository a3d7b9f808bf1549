"""Menger-type path systems: disjoint path pairs, fans, the cycle-or-theta
dichotomy and the fan-extension cycle construction.

All searches run a unit-capacity max-flow on the vertex-split digraph
with breadth-first augmentation. Adjacency is scanned in increasing id
order, so every certificate is deterministic.
"""
from collections import deque
from dataclasses import dataclass

from .errors import InvariantViolation, SeparatorExists, StructuralError
from .graph import cycle_from_edges, find_cut_vertex, is_biconnected, path_edges, path_problems, shortest_path

_INF = float("inf")


@dataclass(frozen=True)
class TwoPaths:
    """Vertex-disjoint paths; ``p1`` starts in ``a``, ``p2`` in ``b``."""

    p1: tuple
    p2: tuple


@dataclass(frozen=True)
class SeparatorVertex:
    vertex: int


@dataclass(frozen=True)
class Fan:
    apex: int
    paths: tuple

    @property
    def ends(self):
        return tuple(p[-1] for p in self.paths)


@dataclass(frozen=True)
class SmallSeparator:
    vertices: tuple


@dataclass(frozen=True)
class Theta:
    """Two branch vertices joined to each of x, y, z by six internally
    vertex-disjoint paths. Every path is listed starting at its branch
    vertex: ``p_a = t_a..x``, ``q_b = t_b..y``, ``r_a = t_a..z`` and so on.
    """

    t_a: int
    t_b: int
    p_a: tuple
    p_b: tuple
    q_a: tuple
    q_b: tuple
    r_a: tuple
    r_b: tuple

    def paths(self):
        return {"PA": self.p_a, "PB": self.p_b, "QA": self.q_a,
                "QB": self.q_b, "RA": self.r_a, "RB": self.r_b}


class _SplitFlow:
    """Unit vertex-capacity flow network. Vertex ``v`` becomes the arc
    ``2v -> 2v+1``; node ``2n`` is the super source, ``2n+1`` the sink."""

    def __init__(self, g, sources, sinks, *, apex=None, blocked=(), stop_at=(), unit_edge=None):
        n = g.n
        self.n = n
        self.src = 2 * n
        self.snk = 2 * n + 1
        cap = [dict() for _ in range(2 * n + 2)]
        blocked = set(blocked)
        stop_at = set(stop_at)
        for v in range(n):
            if v in blocked or v == apex:
                continue
            cap[2 * v][2 * v + 1] = 1
            cap[2 * v + 1].setdefault(2 * v, 0)
        for u in range(n):
            if u in blocked or u in stop_at:
                continue
            out = cap[2 * u + 1]
            for w in g.neighbors(u):
                if w in blocked or w == apex:
                    continue
                out[2 * w] = 1 if unit_edge is not None and {u, w} == unit_edge else _INF
                cap[2 * w].setdefault(2 * u + 1, 0)
        self.cap = cap
        if apex is not None:
            self._arc(self.src, 2 * apex + 1, _INF)
        for s in sorted(sources):
            self._arc(self.src, 2 * s, _INF)
        for t in sorted(sinks):
            self._arc(2 * t + 1, self.snk, _INF)
        self.flow = [dict() for _ in range(2 * n + 2)]

    def _arc(self, u, v, c):
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def run(self, limit):
        cap, flow, src, snk = self.cap, self.flow, self.src, self.snk
        value = 0
        while value < limit:
            parent = [-1] * len(cap)
            parent[src] = src
            queue = [src]
            i = 0
            while i < len(queue) and parent[snk] < 0:
                u = queue[i]
                i += 1
                for w, c in cap[u].items():
                    if c > 0 and parent[w] < 0:
                        parent[w] = u
                        if w == snk:
                            break
                        queue.append(w)
            if parent[snk] < 0:
                break
            w = snk
            while w != src:
                u = parent[w]
                cap[u][w] -= 1
                cap[w][u] += 1
                back = flow[w].get(u, 0)
                if back:
                    flow[w][u] = back - 1
                else:
                    flow[u][w] = flow[u].get(w, 0) + 1
                w = u
            value += 1
        return value

    def paths(self):
        out = []
        copies = {}

        def left(u):
            if u not in copies:
                copies[u] = dict(self.flow[u])
            return copies[u]

        while True:
            start = left(self.src)
            nxt = min((w for w, f in start.items() if f > 0), default=None)
            if nxt is None:
                return out
            start[nxt] -= 1
            nodes = [nxt]
            u = nxt
            while u != self.snk:
                here = left(u)
                w = min(w for w, f in here.items() if f > 0)
                here[w] -= 1
                nodes.append(w)
                u = w
            verts = []
            for node in nodes[:-1]:
                v = node // 2
                if not verts or verts[-1] != v:
                    verts.append(v)
            out.append(verts)

    def cut(self):
        seen = {self.src}
        queue = deque([self.src])
        while queue:
            u = queue.popleft()
            for w, c in self.cap[u].items():
                if c > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return sorted(v for v in range(self.n) if 2 * v in seen and 2 * v + 1 not in seen)


def two_disjoint_paths(g, pair1, pair2, avoid=()):
    """Two vertex-disjoint paths from ``pair1`` to ``pair2``, or a single
    vertex separating them.

    The pairs may intersect or coincide; shared vertices become paths of
    length 0. ``avoid`` restricts the search to ``g - avoid``. Returns
    :class:`TwoPaths` (``p1`` starting at ``pair1[0]``) or
    :class:`SeparatorVertex`.
    """
    a, b = pair1
    c, d = pair2
    g.check_vertex(a, b, c, d)
    if a == b or c == d:
        raise ValueError("each pair must contain two distinct vertices")
    avoid = set(avoid)
    if avoid & {a, b, c, d}:
        raise ValueError("terminals may not be avoided")
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return TwoPaths((a,), (b,))
    if len(shared) == 1:
        (s,) = shared
        start = b if s == a else a
        end = d if s == c else c
        path = shortest_path(g, [start], [end], avoid | {s})
        if path is None:
            return SeparatorVertex(s)
        return TwoPaths((s,), tuple(path)) if s == a else TwoPaths(tuple(path), (s,))
    net = _SplitFlow(g, [a, b], [c, d], blocked=avoid, stop_at=[c, d])
    value = net.run(2)
    if value < 2:
        cut = net.cut()
        return SeparatorVertex(cut[0] if cut else min(a, b))
    p, q = (_trim(p, {a, b}, {c, d}) for p in net.paths())
    if p[0] != a:
        p, q = q, p
    return TwoPaths(tuple(p), tuple(q))


def _trim(path, starts, ends):
    i = max(k for k, v in enumerate(path) if v in starts)
    j = min(k for k, v in enumerate(path) if v in ends and k >= i)
    return path[i:j + 1]


def k_fan(g, x, targets, k, avoid=()):
    """A ``k``-fan from ``x`` to ``targets`` or a separator of fewer than
    ``k`` vertices (never containing ``x``) cutting ``x`` off from every
    target outside it."""
    g.check_vertex(x, *targets)
    targets = set(targets)
    if x in targets:
        raise ValueError("apex may not be a target")
    if k < 1 or len(targets) < k:
        raise ValueError("need 1 <= k <= |targets|")
    net = _SplitFlow(g, [], targets, apex=x, blocked=avoid, stop_at=targets)
    value = net.run(k)
    if value < k:
        return SmallSeparator(tuple(net.cut()))
    paths = sorted(tuple(p) for p in net.paths())
    return Fan(x, tuple(paths))


def internally_disjoint_paths(g, u, v, k=2, avoid=()):
    """``k`` internally disjoint ``u``-``v`` paths, or ``None``."""
    g.check_vertex(u, v)
    if u == v:
        raise ValueError("endpoints must differ")
    net = _SplitFlow(g, [], [v], apex=u, blocked=avoid, stop_at=[v],
                     unit_edge={u, v})
    # the sink vertex carries every path
    net.cap[2 * v][2 * v + 1] = _INF
    if net.run(k) < k:
        return None
    return sorted((tuple(p) for p in net.paths()), key=lambda p: (len(p), p))


def cycle_through_two(g, u, v):
    """Cycle through ``u`` and ``v`` as two internally disjoint ``u``-``v``
    paths, or ``None`` if none exists."""
    key = ("cycle2", u, v)
    if key not in g._memo:
        g._memo[key] = internally_disjoint_paths(g, u, v, 2)
    found = g._memo[key]
    return None if found is None else list(found)


def cycle_from_pieces(pieces):
    """Assemble the cycle formed by the union of the given paths."""
    edges = set()
    for p in pieces:
        edges |= path_edges(p)
    return cycle_from_edges(edges)


def _require_biconnected(g):
    if not is_biconnected(g):
        cut = find_cut_vertex(g)
        raise StructuralError("graph is not 2-connected", witness=cut)


def _degenerate_cycle(g, terminals):
    distinct = sorted(set(terminals))
    if len(distinct) == 1:
        distinct.append(g.neighbors(distinct[0])[0])
    pair = cycle_through_two(g, distinct[0], distinct[1])
    return tuple(cycle_from_pieces(pair))


def cycle_or_theta(g, x, y, z):
    """Either a cycle through ``x, y, z`` (a vertex tuple) or a
    :class:`Theta` whose branch vertices avoid ``{x, y, z}``.

    ``g`` must be 2-connected.
    """
    g.check_vertex(x, y, z)
    _require_biconnected(g)
    if len({x, y, z}) < 3:
        return _degenerate_cycle(g, [x, y, z])
    s_a, s_b = cycle_through_two(g, x, z)
    on_cycle = set(s_a) | set(s_b)
    if y in on_cycle:
        return tuple(cycle_from_pieces([s_a, s_b]))
    fan = k_fan(g, y, on_cycle, 2)
    if not isinstance(fan, Fan):
        raise InvariantViolation("2-connected graph without a 2-fan")
    q1, q2 = fan.paths
    for side, other in ((s_a, s_b), (s_b, s_a)):
        pos = {v: i for i, v in enumerate(side)}
        if q1[-1] in pos and q2[-1] in pos:
            i, j = sorted((pos[q1[-1]], pos[q2[-1]]))
            return tuple(cycle_from_pieces([side[:i + 1], q1, q2, side[j:], other]))
    if q1[-1] not in s_a:
        q1, q2 = q2, q1
    i = s_a.index(q1[-1])
    j = s_b.index(q2[-1])
    return Theta(
        t_a=s_a[i], t_b=s_b[j],
        p_a=tuple(s_a[i::-1]), p_b=tuple(s_b[j::-1]),
        q_a=tuple(reversed(q1)), q_b=tuple(reversed(q2)),
        r_a=tuple(s_a[i:]), r_b=tuple(s_b[j:]),
    )


def theta_problems(g, theta, x, y, z):
    """Reasons ``theta`` is not a valid theta for ``x, y, z`` in ``g``."""
    problems = []
    ends = {"PA": (theta.t_a, x), "PB": (theta.t_b, x), "QA": (theta.t_a, y),
            "QB": (theta.t_b, y), "RA": (theta.t_a, z), "RB": (theta.t_b, z)}
    paths = theta.paths()
    for name, p in paths.items():
        problems += [f"{name}: {msg}" for msg in path_problems(g, list(p))]
        if p and (p[0], p[-1]) != ends[name]:
            problems.append(f"{name}: wrong endpoints {p[0]}..{p[-1]}")
    if theta.t_a == theta.t_b or {theta.t_a, theta.t_b} & {x, y, z}:
        problems.append("branch vertices must be distinct and avoid x, y, z")
    names = list(paths)
    for i, m in enumerate(names):
        for o in names[i + 1:]:
            common = set(paths[m]) & set(paths[o])
            allowed = {paths[m][0], paths[m][-1]} & {paths[o][0], paths[o][-1]}
            if common - allowed:
                problems.append(f"{m} and {o} share {sorted(common - allowed)}")
    return problems


def _split_cycle(c, y, z):
    """Edge-partition cycle ``c`` into two ``y``-``z`` paths."""
    c = list(c)
    i = c.index(y)
    rot = c[i:] + c[:i]
    j = rot.index(z)
    return rot[:j + 1], [y] + rot[j:][::-1]


def cycle_through_fan(g, c, x, y, z):
    """Cycle through ``x`` (off ``c``) and ``y, z`` (on ``c``).

    Requires that no set of at most two vertices separates ``x`` from
    ``c``; otherwise :class:`SeparatorExists` carries such a set.
    """
    g.check_vertex(x, y, z)
    c = list(c)
    if x in c or y not in c or z not in c or y == z:
        raise ValueError("need x off the cycle and distinct y, z on it")
    fan = k_fan(g, x, set(c), 3)
    if isinstance(fan, SmallSeparator):
        raise SeparatorExists("an (x, C)-separator exists", witness=fan.vertices)
    q, r = _split_cycle(c, y, z)
    for side, other in ((q, r), (r, q)):
        pos = {v: i for i, v in enumerate(side)}
        hits = sorted((pos[p[-1]], p) for p in fan.paths if p[-1] in pos)
        if len(hits) >= 2:
            (i, p1), (j, p2) = hits[0], hits[1]
            cyc = cycle_from_pieces([side[:i + 1], p1, p2, side[j:], other])
            if cyc is None:
                raise InvariantViolation("fan rerouting did not close a cycle")
            return tuple(cyc)
    raise InvariantViolation("pigeon-hole failed on a 3-fan")


def vertex_separation(g, u, v, limit=None):
    """Maximum number of internally disjoint ``u``-``v`` paths between
    non-adjacent ``u`` and ``v``, with a minimum separating vertex set.

    With ``limit`` the flow stops early; the returned cut is then only
    meaningful when the value is below the limit.
    """
    g.check_vertex(u, v)
    if u == v or g.has_edge(u, v):
        raise ValueError("need two distinct non-adjacent vertices")
    net = _SplitFlow(g, [], [v], apex=u, stop_at=[v])
    net.cap[2 * v][2 * v + 1] = _INF
    value = net.run(g.n if limit is None else limit)
    return value, net.cut()
