"""Twins and the degree-2 / twin reduction outcomes.

Two vertices are twins when they are non-adjacent, both of degree 3,
and have the same neighbourhood. A wheel-free graph on at least two
vertices always has two vertices of degree at most 2, or one such vertex
and a twin pair, or two disjoint twin pairs; ``reduction_step`` finds
which.
"""
import itertools
from collections import defaultdict
from dataclasses import dataclass

from .verdict import Verdict, Violation


@dataclass(frozen=True, order=True)
class TwinPair:
    u: int
    v: int

    def to_json(self):
        return [self.u, self.v]


def twin_problems(g, u, v):
    if not all(isinstance(t, int) and 0 <= t < g.n for t in (u, v)):
        return [f"({u!r}, {v!r}) not vertices of the graph"]
    out = []
    if u == v:
        out.append(f"{u} paired with itself")
    if g.has_edge(u, v):
        out.append(f"{u} and {v} are adjacent")
    for t in (u, v):
        if g.degree(t) != 3:
            out.append(f"vertex {t} has degree {g.degree(t)}, not 3")
    if g.adj(u) != g.adj(v):
        out.append(f"N({u}) != N({v})")
    return out


def twin_pairs(g):
    """All twin pairs, sorted lexicographically."""
    groups = defaultdict(list)
    for v in range(g.n):
        if g.degree(v) == 3:
            groups[g.adj(v)].append(v)
    pairs = []
    for members in groups.values():
        # equal neighbourhoods already rule out adjacency
        pairs += [TwinPair(u, v) for u, v in itertools.combinations(members, 2)]
    return sorted(pairs)


def disjoint_twin_pairs(g):
    """The lexicographically first two vertex-disjoint twin pairs, or None."""
    pairs = twin_pairs(g)
    for p, q in itertools.combinations(pairs, 2):
        if not {p.u, p.v} & {q.u, q.v}:
            return p, q
    return None


def close_to_twin(g, v):
    g.check_vertex(v)
    members = {t for p in twin_pairs(g) for t in (p.u, p.v)}
    return v in members or bool(g.adj(v) & members)


# strongest first; the last three are partial findings on graphs that
# are not wheel-free
KINDS = ("TwoTwinPairs", "Deg2PlusTwins", "TwoDeg2", "Twins", "Deg2", "NotFound")
TRICHOTOMY = frozenset(KINDS[:3])


@dataclass(frozen=True)
class ReductionOutcome:
    kind: str
    vertices: tuple = ()
    pairs: tuple = ()

    @property
    def found(self):
        return self.kind != "NotFound"

    def to_json(self):
        return {"kind": self.kind, "vertices": list(self.vertices),
                "pairs": [p.to_json() for p in self.pairs]}


def reduction_step(g):
    if g.n < 2:
        raise ValueError("reduction_step needs at least two vertices")
    low = [v for v in range(g.n) if g.degree(v) <= 2]
    pairs = twin_pairs(g)
    two = disjoint_twin_pairs(g)
    if two:
        return ReductionOutcome("TwoTwinPairs", pairs=two)
    if low and pairs:
        return ReductionOutcome("Deg2PlusTwins", (low[0],), (pairs[0],))
    if len(low) >= 2:
        return ReductionOutcome("TwoDeg2", tuple(low[:2]))
    if pairs:
        return ReductionOutcome("Twins", pairs=(pairs[0],))
    if low:
        return ReductionOutcome("Deg2", (low[0],))
    return ReductionOutcome("NotFound")


def verify_outcome(g, o):
    """Re-check every witness carried by a reduction outcome."""
    out = []
    need = {"TwoTwinPairs": (0, 2), "Deg2PlusTwins": (1, 1), "TwoDeg2": (2, 0),
            "Twins": (0, 1), "Deg2": (1, 0), "NotFound": (0, 0)}
    if o.kind not in need:
        return Verdict.of([Violation("kind", f"unknown outcome {o.kind!r}")])
    nv, np_ = need[o.kind]
    if len(o.vertices) != nv or len(o.pairs) != np_:
        return Verdict.of([Violation("shape", f"{o.kind} carries {len(o.vertices)} vertices and {len(o.pairs)} pairs")])
    if len(set(o.vertices)) != nv:
        out.append(Violation("vertices", "repeated vertex"))
    for v in o.vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            out.append(Violation("vertices", f"{v!r} not a vertex"))
        elif g.degree(v) > 2:
            out.append(Violation("vertices", f"vertex {v} has degree {g.degree(v)}"))
    for p in o.pairs:
        out += [Violation("twins", msg) for msg in twin_problems(g, p.u, p.v)]
    if np_ == 2 and {o.pairs[0].u, o.pairs[0].v} & {o.pairs[1].u, o.pairs[1].v}:
        out.append(Violation("twins", "twin pairs share a vertex"))
    return Verdict.of(out)
