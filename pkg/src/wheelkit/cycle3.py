"""Cycles through three prescribed vertices of a 2-connected graph.

:func:`cycle_or_splitter` returns either such a cycle or a *splitter*:
two cutsets ``A`` and ``B`` that put ``x``, ``y`` and ``z`` in separate
components attached in the rigid pattern checked by
:func:`verify_splitter`. When the candidate built from the maximal
separators fails a condition, the failing condition itself pins down the
cycle, which is then assembled explicitly.
"""
from collections import deque
from dataclasses import dataclass, field

from .errors import InvariantViolation
from .graph import (
    Graph, blocks, components, cycle_problems, is_biconnected, neighborhood,
    path_edges, reachable, shortest_path,
)
from .menger import SeparatorVertex, Theta, cycle_from_pieces, cycle_or_theta, cycle_through_fan, two_disjoint_paths
from .verdict import Verdict, Violation

ROLES = ("x", "y", "z")


@dataclass(frozen=True)
class Splitter:
    A: tuple
    B: tuple
    anchors: dict = field(hash=False)
    X: tuple
    Y: tuple
    Z: tuple

    def swapped(self):
        """The same splitter with the roles of ``A`` and ``B`` exchanged."""
        anchors = {f"{r}A": self.anchors[f"{r}B"] for r in ROLES}
        anchors.update({f"{r}B": self.anchors[f"{r}A"] for r in ROLES})
        return Splitter(self.B, self.A, anchors, self.X, self.Y, self.Z)

    def to_json(self):
        return {
            "A": list(self.A), "B": list(self.B),
            "anchors": {k: self.anchors[k] for k in ("xA", "yA", "zA", "xB", "yB", "zB")},
            "X": list(self.X), "Y": list(self.Y), "Z": list(self.Z),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            tuple(data["A"]), tuple(data["B"]), dict(data["anchors"]),
            tuple(data["X"]), tuple(data["Y"]), tuple(data["Z"]),
        )


def verify_cycle_through(g, cycle, required):
    """Accept iff ``cycle`` is a cycle of ``g`` through all of ``required``."""
    try:
        cycle = list(cycle)
        problems = cycle_problems(g, cycle)
    except TypeError:
        return Verdict.of([Violation("cycle", "certificate is not a vertex sequence")])
    out = [Violation("cycle", p) for p in problems]
    missing = sorted(set(required) - set(cycle))
    if missing:
        out.append(Violation("required", f"vertices {missing} not on the cycle"))
    return Verdict.of(out)


def verify_splitter(g, x, y, z, s):
    """Check all seven splitter conditions; never raises on bad input."""
    try:
        return Verdict.of(_splitter_violations(g, x, y, z, s))
    except (TypeError, KeyError, AttributeError, ValueError) as exc:
        return Verdict.of([Violation("(iv)", f"malformed certificate: {exc!r}")])


def _as_vertex_set(g, values, name):
    vs = set(values)
    bad = [v for v in vs if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise ValueError(f"{name} holds non-vertices {bad}")
    return vs


def _splitter_violations(g, x, y, z, s):
    out = []
    terms = {"x": x, "y": y, "z": z}
    if len(set(terms.values())) < 3:
        return [Violation("(i)", "x, y, z are not distinct")]
    a = _as_vertex_set(g, s.A, "A")
    b = _as_vertex_set(g, s.B, "B")
    anchors = {k: s.anchors[k] for k in ("xA", "yA", "zA", "xB", "yB", "zB")}
    _as_vertex_set(g, anchors.values(), "anchors")
    claimed = {"x": _as_vertex_set(g, s.X, "X"), "y": _as_vertex_set(g, s.Y, "Y"),
               "z": _as_vertex_set(g, s.Z, "Z")}
    if not a or not b or a & b:
        out.append(Violation("(iv)", "A and B must be disjoint and non-empty"))
    cut = a | b
    comp_of = {}
    for comp in components(g, cut):
        for v in comp:
            comp_of[v] = frozenset(comp)
    actual = {}
    for r, t in terms.items():
        if t in cut:
            out.append(Violation("(i)", f"{r}={t} lies in A or B"))
            continue
        actual[r] = comp_of[t]
        if claimed[r] != actual[r]:
            out.append(Violation("(i)", f"{r.upper()} is not the component of {r} in G-(A u B)"))
    if len(set(actual.values())) < len(actual):
        out.append(Violation("(i)", "x, y, z are not in three distinct components"))
    for side, tag, members in (("A", "(ii)", a), ("B", "(iii)", b)):
        for r, comp in actual.items():
            anchor = anchors[f"{r}{side}"]
            if anchor not in members:
                out.append(Violation(tag, f"{r}{side}={anchor} is not in {side}"))
            for u in sorted(comp):
                for w in g.neighbors(u):
                    if w in members and w != anchor:
                        out.append(Violation(tag, f"edge ({u}, {w}) from {r.upper()} avoids {r}{side}"))
    if a != {anchors["xA"], anchors["yA"], anchors["zA"]}:
        out.append(Violation("(iv)", "A != {xA, yA, zA}"))
    if b != {anchors["xB"], anchors["yB"], anchors["zB"]}:
        out.append(Violation("(iv)", "B != {xB, yB, zB}"))
    for name, members in (("A", a), ("B", b)):
        if len(members) not in (1, 3):
            out.append(Violation("(v)", f"|{name}| = {len(members)}"))
    for r, comp in actual.items():
        rest, _ = g.remove_vertices(comp)
        if not is_biconnected(rest):
            out.append(Violation("(vi)", f"G - {r.upper()} is not 2-connected"))
    if len(a) == 3 and len(b) == 3:
        allowed = {frozenset((anchors[f"{r}A"], anchors[f"{r}B"])) for r in ROLES}
        for u in sorted(a):
            for w in g.neighbors(u):
                if w in b and frozenset((u, w)) not in allowed:
                    out.append(Violation("(vii)", f"edge ({u}, {w}) joins A and B across roles"))
        boxes = [a, b] + [set(p) for p in allowed]
        for comp in components(g, cut):
            nd = neighborhood(g, comp)
            if not any(nd <= box for box in boxes):
                out.append(Violation("(vii)", f"component {comp} attaches to {sorted(nd)}"))
    return out


# ---------------------------------------------------------------------------
# construction


def cycle_or_splitter(g, x, y, z):
    """Cycle through ``x, y, z`` (a vertex tuple) or a :class:`Splitter`.

    ``g`` must be 2-connected. Coinciding terminals are allowed and always
    yield a cycle.
    """
    first = cycle_or_theta(g, x, y, z)
    if not isinstance(first, Theta):
        return first
    return _Construction(g, (x, y, z), first).run()


class _Side:
    """A connected subgraph (vertex set + edge set) with one anchor per role."""

    def __init__(self, verts, edges, anchor):
        self.verts = set(verts)
        self.edges = set(edges)
        self.anchor = anchor

    def graph(self):
        order = sorted(self.verts)
        loc = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(loc[u], loc[v]) for u, v in self.edges]), loc, order

    def cut_vertices(self):
        h, _, order = self.graph()
        return sorted(order[i] for i in blocks(h).cut_vertices)

    def pieces_without(self, v):
        h, loc, order = self.graph()
        return [{order[i] for i in comp} for comp in components(h, [loc[v]])]

    def restrict(self, keep):
        self.verts = set(keep)
        self.edges = {e for e in self.edges if e[0] in keep and e[1] in keep}

    def path(self, start, end, within):
        h, loc, order = self.graph()
        blocked = [loc[v] for v in self.verts - set(within)]
        p = shortest_path(h, [loc[start]], [loc[end]], blocked)
        if p is None:
            raise InvariantViolation("side subgraph lost connectivity")
        return [order[i] for i in p]

    def disjoint_paths(self, pair1, pair2):
        h, loc, order = self.graph()
        res = two_disjoint_paths(h, tuple(loc[v] for v in pair1), tuple(loc[v] for v in pair2))
        if isinstance(res, SeparatorVertex):
            raise InvariantViolation("unexpected separator inside a side subgraph")
        return [order[i] for i in res.p1], [order[i] for i in res.p2]


class _Construction:
    def __init__(self, g, terms, theta):
        self.g = g
        self.terms = dict(zip(ROLES, terms))
        self.theta = theta
        th = theta
        self.arms = {"x": (th.p_a, th.p_b), "y": (th.q_a, th.q_b), "z": (th.r_a, th.r_b)}

    def run(self):
        seps = {}
        for r in ROLES:
            found = self._max_separator(r)
            if not isinstance(found, dict):
                return found
            seps[r] = found
        self.anchor_a = {r: seps[r]["a"] for r in ROLES}
        self.anchor_b = {r: seps[r]["b"] for r in ROLES}
        self.home = {r: seps[r]["comp"] for r in ROLES}
        self.role_path = {}
        for r in ROLES:
            arm_a, arm_b = self.arms[r]
            seg_a = list(arm_a[arm_a.index(self.anchor_a[r]):])
            seg_b = list(arm_b[arm_b.index(self.anchor_b[r]):])
            self.role_path[r] = seg_a + seg_b[::-1][1:]

        for mine, other in ((self.anchor_a, self.anchor_b), (self.anchor_b, self.anchor_a)):
            if len(set(mine.values())) == 2:
                return self._fix_pair(mine, other)

        if len(set(self.anchor_a.values())) == 3 and len(set(self.anchor_b.values())) == 3:
            sides, cyc = self._two_connected_sides()
            if cyc is None:
                cyc = self._component_condition(*sides)
            if cyc is not None:
                return cyc

        splitter = Splitter(
            A=tuple(sorted(set(self.anchor_a.values()))),
            B=tuple(sorted(set(self.anchor_b.values()))),
            anchors={**{f"{r}A": self.anchor_a[r] for r in ROLES},
                     **{f"{r}B": self.anchor_b[r] for r in ROLES}},
            X=tuple(sorted(self.home["x"])), Y=tuple(sorted(self.home["y"])),
            Z=tuple(sorted(self.home["z"])),
        )
        verdict = verify_splitter(self.g, *(self.terms[r] for r in ROLES), splitter)
        if not verdict:
            raise InvariantViolation(f"constructed splitter is invalid: {list(map(str, verdict.violations))}")
        return splitter

    def _cycle(self, pieces):
        cyc = cycle_from_pieces(pieces)
        if cyc is None or not verify_cycle_through(self.g, cyc, self.terms.values()):
            raise InvariantViolation("assembled pieces do not form a cycle through x, y, z")
        return tuple(cyc)

    def _max_separator(self, r):
        """Pair on the two arms of ``r`` cutting its terminal off the cycle
        through the other two terminals, maximizing the terminal's side.
        Returns a dict, or the cycle when no such pair exists."""
        g = self.g
        term = self.terms[r]
        arm_a, arm_b = self.arms[r]
        others = [q for q in ROLES if q != r]
        rest = []
        for q in others:
            rest.extend(self.arms[q])
        ring = set().union(*map(set, rest))
        best = None
        for u in sorted(arm_a[:-1]):
            for v in sorted(arm_b[:-1]):
                comp = reachable(g, [term], (u, v))
                if comp & (ring - {u, v}):
                    continue
                if best is None or len(comp) > len(best["comp"]):
                    best = {"a": u, "b": v, "comp": frozenset(comp)}
        if best is not None:
            return best
        q1, q2 = others
        a1, b1 = self.arms[q1]
        a2, b2 = self.arms[q2]
        ring_cycle = cycle_from_pieces([a1, a2, b2, b1])
        return cycle_through_fan(g, ring_cycle, term, self.terms[q1], self.terms[q2])

    def _fix_pair(self, mine, other):
        """|A| = 2: two roles share their anchor (the branch vertex). Link the
        third role's anchors to the other side's two anchors."""
        shared = next(r for r in ROLES if sum(mine[q] == mine[r] for q in ROLES) == 2)
        r1, r2 = (q for q in ROLES if mine[q] == mine[shared])
        (r3,) = (q for q in ROLES if q not in (r1, r2))
        if other[r1] == other[r2]:
            raise InvariantViolation("maximal separators share both anchors")
        avoid = set(self.home[r3]) | {mine[r1]}
        res = two_disjoint_paths(self.g, (mine[r3], other[r3]), (other[r1], other[r2]), avoid=avoid)
        if isinstance(res, SeparatorVertex):
            raise InvariantViolation("separator contradicts maximality of a home component")
        return self._cycle([*self.role_path.values(), res.p1, res.p2])

    def _initial_side(self, anchor, arm_index):
        verts, edges = set(), set()
        for r in ROLES:
            arm = self.arms[r][arm_index]
            seg = arm[:arm.index(anchor[r]) + 1]
            verts |= set(seg)
            edges |= path_edges(seg)
        return _Side(verts, edges, dict(anchor))

    def _two_connected_sides(self):
        side_a = self._initial_side(self.anchor_a, 0)
        side_b = self._initial_side(self.anchor_b, 1)
        homes = set().union(*self.home.values())
        budget = 4 * self.g.n * self.g.n + 16
        for _ in range(budget):
            progressed = False
            for mine, other in ((side_a, side_b), (side_b, side_a)):
                cuts = mine.cut_vertices()
                if not cuts:
                    continue
                cyc = self._repair(mine, other, cuts, homes)
                if cyc is not None:
                    return None, cyc
                progressed = True
                break
            if not progressed:
                return (side_a, side_b), None
        raise InvariantViolation("side repair did not terminate")

    @staticmethod
    def _isolating_cut(side, r, cuts):
        own = side.anchor[r]
        rest = {side.anchor[q] for q in ROLES if q != r}
        best = None
        for v in cuts:
            for piece in side.pieces_without(v):
                if own in piece and not piece & rest:
                    if best is None or len(piece) > len(best[1]):
                        best = (v, piece)
        return best

    def _repair(self, mine, other, cuts, homes):
        anchors = set(mine.anchor.values())
        for v in cuts:
            for piece in mine.pieces_without(v):
                if anchors <= piece | {v}:
                    mine.restrict(piece | {v})
                    return None
        for r in ROLES:
            found = self._isolating_cut(mine, r, cuts)
            if found is not None:
                break
        else:
            raise InvariantViolation("cut vertex isolates no anchor")
        v_m, c_m = found
        found_o = self._isolating_cut(other, r, other.cut_vertices())
        v_o, c_o = found_o if found_o is not None else (other.anchor[r], set())
        path = self._bridge(mine, other, c_m | c_o, {v_m, v_o} | c_m | c_o, homes)
        if path is None:
            raise InvariantViolation("no bridge leaves the isolated piece")
        s, s_end = path[0], path[-1]
        if s in c_m:
            near, far, c_near, c_far, v_far = mine, other, c_m, c_o, v_o
        else:
            near, far, c_near, c_far, v_far = other, mine, c_o, c_m, v_m
        if s_end in near.verts:
            near.verts |= set(path)
            near.edges |= path_edges(path)
            return None
        r2, r3 = (q for q in ROLES if q != r)
        t_far, t_far2 = far.disjoint_paths((far.anchor[r], s_end), (far.anchor[r2], far.anchor[r3]))
        t_near = near.path(s, near.anchor[r], c_near)
        t_near2 = near.path(near.anchor[r2], near.anchor[r3], near.verts - c_near)
        return self._cycle([*self.role_path.values(), path, t_near, t_near2, t_far, t_far2])

    def _bridge(self, side1, side2, sources, exclude, homes):
        """Path from ``sources`` to the rest of the two sides whose interior
        avoids both sides and the home components and which uses no side
        edge."""
        g = self.g
        in_sides = side1.verts | side2.verts
        targets = in_sides - exclude
        side_edges = side1.edges | side2.edges
        parent = {}
        queue = deque()
        for s in sorted(sources):
            parent[s] = None
            queue.append(s)
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if parent.get(u) is None and u in sources and (min(u, w), max(u, w)) in side_edges:
                    continue
                if w in targets:
                    path = [w, u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                if w in parent or w in in_sides or w in homes:
                    continue
                parent[w] = u
                queue.append(w)
        return None

    def _component_condition(self, side_a, side_b):
        """Cross-role connection between A and B gives a cycle; else None."""
        g = self.g
        cut = set(self.anchor_a.values()) | set(self.anchor_b.values())
        for r1 in ROLES:
            for r2 in ROLES:
                if r1 == r2:
                    continue
                start, end = self.anchor_a[r1], self.anchor_b[r2]
                path = shortest_path(g, [start], [end], cut - {start, end})
                if path is not None:
                    return self._cross_cycle(side_a, side_b, r1, r2, path)
        return None

    def _cross_cycle(self, side_a, side_b, r1, r2, path):
        (r3,) = (q for q in ROLES if q not in (r1, r2))
        j = next(k for k, v in enumerate(path) if v in side_b.verts)
        i = max(k for k in range(j) if path[k] in side_a.verts)
        bridge = path[i:j + 1]
        s_a, s_b = bridge[0], bridge[-1]
        an_a, an_b = side_a.anchor, side_b.anchor
        ma = side_a.disjoint_paths((an_a[r1], an_a[r2]), (s_a, an_a[r3]))
        mb = side_b.disjoint_paths((an_b[r1], an_b[r2]), (s_b, an_b[r3]))
        if ma[0][-1] == s_a:
            tb = side_b.disjoint_paths((an_b[r1], s_b), (an_b[r2], an_b[r3]))
            pieces = [*ma, *tb]
        elif mb[1][-1] == s_b:
            ta = side_a.disjoint_paths((an_a[r2], s_a), (an_a[r1], an_a[r3]))
            pieces = [*mb, *ta]
        else:
            pieces = [*ma, *mb]
        return self._cycle([*self.role_path.values(), bridge, *pieces])
