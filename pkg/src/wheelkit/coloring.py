"""Constructive colorings.

``color3`` 3-colors a wheel-free graph by peeling: delete a vertex of
degree at most 2, or else one vertex of a twin pair, until one vertex is
left; then color in reverse, giving a low-degree vertex the smallest
free color and a twin the color of its partner.

``color4_long`` 4-colors a graph with no long wheel. Each block is
either K4 or wheel-free; blocks are colored separately and glued at cut
vertices by permuting colors.
"""
from collections import defaultdict, deque
from dataclasses import dataclass

from .errors import InvariantViolation, NotWheelFreeError
from .graph import blocks
from .verdict import Verdict, Violation
from .wheels import find_long_wheel, find_wheel


@dataclass(frozen=True)
class Coloring:
    colors: tuple
    max_colors: int = 3
    trace: tuple = ()

    def to_json(self):
        return {"colors": list(self.colors), "max": self.max_colors}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["colors"]), data.get("max", 3))


def _peel(g):
    """Reduction order: ``("deg", w)``, ``("twin", u, v)`` steps, then
    ``("base", r)``."""
    nb = [set(g.adj(v)) for v in range(g.n)]
    alive = set(range(g.n))
    trace = []
    while len(alive) > 1:
        w = next((v for v in sorted(alive) if len(nb[v]) <= 2), None)
        if w is not None:
            step = ("deg", w)
        else:
            seen = {}
            step = None
            for v in sorted(alive):
                if len(nb[v]) != 3:
                    continue
                key = frozenset(nb[v])
                if key in seen:
                    step = ("twin", v, seen[key])
                    break
                seen[key] = v
            if step is None:
                raise InvariantViolation(
                    f"no vertex of degree <= 2 and no twins among {len(alive)} remaining vertices")
            w = step[1]
        trace.append(step)
        alive.discard(w)
        for u in nb[w]:
            nb[u].discard(w)
    if alive:
        trace.append(("base", alive.pop()))
    return trace


def color3(g, check=True):
    """A proper coloring with colors {0, 1, 2} of a wheel-free graph.

    Raises :class:`NotWheelFreeError` (carrying the witness) when a
    wheel is present.
    """
    if check:
        w = find_wheel(g)
        if w is not None:
            raise NotWheelFreeError("not wheel-free", w)
    trace = _peel(g)
    color = [None] * g.n
    for step in reversed(trace):
        if step[0] == "twin":
            color[step[1]] = color[step[2]]
            continue
        v = step[1]
        used = {color[u] for u in g.neighbors(v)}
        color[v] = min(c for c in range(3) if c not in used)
    return Coloring(tuple(color), 3, tuple(trace))


def _is_k4(b):
    return len(b.vertices) == 4 and len(b.edges) == 6


def color4_long(g, check=True):
    """A proper coloring with at most four colors of a graph without a
    long wheel."""
    if check:
        w = find_long_wheel(g)
        if w is not None:
            raise NotWheelFreeError("contains a long wheel", w)
    dec = blocks(g)
    local = []
    for b in dec.blocks:
        if _is_k4(b):
            local.append(dict(zip(sorted(b.vertices), range(4))))
            continue
        h, old_to_new = g.induced(b.vertices)
        c = color3(h, check=False).colors
        local.append({v: c[i] for v, i in old_to_new.items()})
    member = defaultdict(list)
    for i, b in enumerate(dec.blocks):
        for v in b.vertices:
            member[v].append(i)
    color = [None] * g.n
    done = [False] * len(dec.blocks)
    for root in range(len(dec.blocks)):
        if done[root]:
            continue
        done[root] = True
        queue = deque([root])
        while queue:
            i = queue.popleft()
            lc = local[i]
            # reached through at most one already colored cut vertex
            fixed = [v for v in lc if color[v] is not None]
            perm = {c: c for c in range(4)}
            if fixed:
                a, t = lc[fixed[0]], color[fixed[0]]
                perm[a], perm[t] = t, a
            for v, c in lc.items():
                color[v] = perm[c]
            for v in sorted(lc):
                for j in member[v]:
                    if not done[j]:
                        done[j] = True
                        queue.append(j)
    for v in range(g.n):
        if color[v] is None:
            color[v] = 0
    return Coloring(tuple(color), 4)


def verify_coloring(g, c, max_colors=3):
    """Accept iff ``c`` colors every vertex, properly, with colors in
    ``range(max_colors)``."""
    colors = c.colors if isinstance(c, Coloring) else c
    out = []
    try:
        if isinstance(colors, dict):
            stray = sorted(set(colors) - set(range(g.n)), key=repr)
            if stray:
                out.append(Violation("shape", f"colors given for non-vertices {stray}"))
            colors = [colors.get(v) for v in range(g.n)]
        colors = list(colors)
    except TypeError as exc:
        return Verdict.of([Violation("shape", f"not a color sequence: {exc}")])
    if len(colors) > g.n:
        out.append(Violation("shape", f"{len(colors)} colors for {g.n} vertices"))
    for v in range(g.n):
        x = colors[v] if v < len(colors) else None
        if x is None:
            out.append(Violation("total", f"vertex {v} is uncolored"))
        elif not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < max_colors:
            out.append(Violation("range", f"vertex {v} has color {x!r} outside 0..{max_colors - 1}"))
    for u, v in g.edges():
        if u < len(colors) and v < len(colors) and colors[u] is not None and colors[u] == colors[v]:
            out.append(Violation("proper", f"edge ({u}, {v}) has both ends colored {colors[u]!r}"))
    return Verdict.of(out)
