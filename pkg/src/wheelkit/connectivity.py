"""Vertex connectivity, fragments and ends, essential edges, and the two
local extensions G_F used when cutting a graph along a small separator.

A *fragment* is a vertex set F with |N(F)| = kappa(G) and a nonempty
complement V - (F | N(F)). An *end* is a fragment containing no other
fragment.
"""
import itertools
from dataclasses import dataclass, field

from .errors import StructuralError
from .graph import Graph, components, is_connected, neighborhood
from .menger import vertex_separation
from .verdict import Verdict, Violation

COMPLETE = "complete"

# exhaustive cutset enumeration backs up the flow-derived cuts up to here
ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class Fragment:
    F: frozenset
    neighborhood: frozenset
    complement: frozenset
    is_end: bool = field(default=False, compare=False)


def kappa(g):
    """``(k, witness)``: the vertex connectivity and a minimum cutset.

    Complete graphs follow the convention kappa(K_n) = n - 1 with
    witness ``"complete"``. A disconnected graph has witness ``()``.
    """
    if g.n < 1:
        raise ValueError("kappa needs at least one vertex")
    if g.num_edges == g.n * (g.n - 1) // 2:
        return g.n - 1, COMPLETE
    if not is_connected(g):
        return 0, ()
    best, cut = g.n - 1, None
    # a minimum cut misses one of the first best+1 vertices, so pairs
    # anchored there suffice
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            value, sep = vertex_separation(g, i, j, limit=best)
            if value < best:
                best, cut = value, tuple(sep)
        i += 1
    return best, cut


def _is_cutset(g, s):
    return len(components(g, s)) >= 2


def minimum_cutsets(g, k=None):
    """Every vertex cutset of size ``kappa(g)``, as sorted tuples."""
    if k is None:
        k, _ = kappa(g)
    found = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            value, sep = vertex_separation(g, u, v, limit=k + 1)
            if value == k:
                found.add(tuple(sep))
    if g.n <= ENUMERATION_LIMIT:
        for s in itertools.combinations(range(g.n), k):
            if s not in found and _is_cutset(g, s):
                found.add(s)
    return sorted(found)


def fragments_and_ends(g):
    """All fragments of a connected non-complete graph, ends flagged."""
    if g.n == 0 or not is_connected(g):
        raise StructuralError("fragments are undefined for disconnected graphs")
    k, witness = kappa(g)
    if witness == COMPLETE:
        raise StructuralError("fragments are undefined for complete graphs")
    everything = frozenset(range(g.n))
    sets = {}
    for s in minimum_cutsets(g, k):
        sep = frozenset(s)
        comps = components(g, s)
        for r in range(1, len(comps)):
            for chosen in itertools.combinations(comps, r):
                f = frozenset(itertools.chain.from_iterable(chosen))
                sets[f] = sep
    out = []
    for f, sep in sets.items():
        end = not any(other < f for other in sets)
        out.append(Fragment(f, sep, everything - f - sep, end))
    out.sort(key=lambda fr: (len(fr.F), sorted(fr.F)))
    return out


def ends(g):
    return [fr for fr in fragments_and_ends(g) if fr.is_end]


def fragment_problems(g, fr, k=None):
    """Reasons ``fr`` is not a fragment of ``g`` (empty when it is)."""
    if k is None:
        k, _ = kappa(g)
    out = []
    f = set(fr.F)
    if not f:
        return ["F is empty"]
    if any(not (isinstance(v, int) and 0 <= v < g.n) for v in f):
        return ["F has vertices outside the graph"]
    nb = neighborhood(g, f)
    if nb != set(fr.neighborhood):
        out.append(f"N(F) is {sorted(nb)}, not {sorted(fr.neighborhood)}")
    if len(nb) != k:
        out.append(f"|N(F)| = {len(nb)} but kappa = {k}")
    if not set(range(g.n)) - f - nb:
        out.append("complement of F is empty")
    return out


def essential_edges(g):
    """Edges whose deletion lowers the connectivity."""
    k, _ = kappa(g)
    return [e for e in g.edges() if kappa(g.remove_edge(*e))[0] < k]


def is_minimally_3_connected(g):
    if g.n < 2:
        return Verdict.of([Violation("kappa", f"graph on {g.n} vertex has kappa 0")])
    k, _ = kappa(g)
    if k != 3:
        return Verdict.of([Violation("kappa", f"kappa = {k}, not 3")])
    out = []
    for u, v in g.edges():
        if kappa(g.remove_edge(u, v))[0] == 3:
            out.append(Violation("essential", f"edge ({u}, {v}) is not essential"))
    return Verdict.of(out)


@dataclass(frozen=True)
class Extension:
    """A graph built around a fragment. ``origin[i]`` is the original id
    of new vertex ``i`` (``None`` for added vertices); ``roles`` names
    the attachment vertices and any added ones."""

    graph: Graph
    origin: tuple
    roles: dict
    created: tuple = ()


def _as_set(F):
    return frozenset(F.F if isinstance(F, Fragment) else F)


def extend_2cut_block(g, F):
    """G_F: the graph induced on an end ``F`` and its 2-separator {a, b},
    with the edge ab added when missing."""
    f = _as_set(F)
    k, _ = kappa(g)
    if k != 2:
        raise StructuralError(f"extend_2cut_block needs kappa = 2, got {k}")
    if len(f) < 2:
        raise StructuralError("the end must have at least two vertices")
    if f not in {fr.F for fr in ends(g)}:
        raise StructuralError(f"{sorted(f)} is not an end")
    a, b = sorted(neighborhood(g, f))
    h, old_to_new = g.induced(f | {a, b})
    if not h.has_edge(old_to_new[a], old_to_new[b]):
        h = h.add_edges([(old_to_new[a], old_to_new[b])])
    origin = tuple(sorted(old_to_new, key=old_to_new.get))
    return Extension(h, origin, {"a": old_to_new[a], "b": old_to_new[b]})


def extend_3sep(g, F):
    """G_F for a fragment ``F`` with N(F) = {a, b, c}.

    Take G[F + {a,b,c}] without the edges among a, b, c. Each of a, b, c
    with two or more neighbours in F gets a pendant copy (a', b', c');
    the others act as their own copy. Finally d and d' are joined to
    a', b', c'.
    """
    f = _as_set(F)
    nb = sorted(neighborhood(g, f))
    if len(nb) != 3:
        raise StructuralError(f"N(F) has {len(nb)} vertices, need 3")
    k, _ = kappa(g)
    if k != 3:
        raise StructuralError(f"extend_3sep needs kappa = 3, got {k}")
    probs = fragment_problems(g, Fragment(f, frozenset(nb), frozenset()), k)
    if probs:
        raise StructuralError("not a fragment: " + "; ".join(probs))
    h, old_to_new = g.induced(f | set(nb))
    inner = {(old_to_new[u], old_to_new[v]) for u, v in itertools.combinations(nb, 2)}
    edges = [e for e in h.edges() if e not in inner]
    origin = list(sorted(old_to_new, key=old_to_new.get))
    roles = {}
    created = []
    nxt = h.n
    for name, t in zip("abc", nb):
        roles[name] = old_to_new[t]
        if len(g.adj(t) & f) >= 2:
            edges.append((old_to_new[t], nxt))
            roles[name + "'"] = nxt
            origin.append(None)
            created.append(name + "'")
            nxt += 1
        else:
            roles[name + "'"] = old_to_new[t]
    roles["d"], roles["d'"] = nxt, nxt + 1
    origin += [None, None]
    for name in "abc":
        edges += [(roles[name + "'"], nxt), (roles[name + "'"], nxt + 1)]
    return Extension(Graph(nxt + 2, edges), tuple(origin), roles, tuple(created))
