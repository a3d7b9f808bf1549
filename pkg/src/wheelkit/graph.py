"""Immutable simple undirected graphs and the structural primitives
(components, reachability, blocks) used throughout wheelkit.

Vertices are the dense ids ``0..n-1``. Every "mutation" returns a new
graph; deletions also return the old->new id map so that certificates
computed on the smaller graph can be lifted back to the caller's ids.
"""
from collections import deque
from dataclasses import dataclass

from .errors import ParseError


class Graph:
    """Simple undirected graph on the vertex set ``range(n)``."""

    __slots__ = ("n", "_adj", "_nbrs", "_m", "_memo")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(s) for s in adj) // 2
        # derived facts of this immutable graph, filled on demand
        self._memo = {}

    @classmethod
    def complete(cls, n):
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertices(self):
        return range(self.n)

    @property
    def num_edges(self):
        return self._m

    def neighbors(self, v):
        """Sorted tuple of the neighbours of ``v``."""
        return self._nbrs[v]

    def adj(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._nbrs[v])

    def degrees(self):
        return [len(nb) for nb in self._nbrs]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def check_vertex(self, *vs):
        for v in vs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise ValueError(f"vertex {v!r} out of range for n={self.n}")

    def remove_vertices(self, vs):
        """Delete ``vs``; return ``(graph, old_to_new)`` with dense ids."""
        gone = set(vs)
        keep = [v for v in range(self.n) if v not in gone]
        return self.induced(keep)

    def induced(self, vs):
        """Subgraph induced on ``vs``; returns ``(graph, old_to_new)``.

        New ids follow the increasing order of the old ids.
        """
        keep = sorted(set(vs))
        old_to_new = {v: i for i, v in enumerate(keep)}
        edges = [
            (old_to_new[u], old_to_new[w])
            for u in keep
            for w in self._nbrs[u]
            if u < w and w in old_to_new
        ]
        return Graph(len(keep), edges), old_to_new

    def remove_edge(self, u, v):
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        return Graph(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])

    def add_edges(self, edges):
        return Graph(self.n, self.edges() + list(edges))

    def _key(self):
        return (self.n, self._nbrs)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def reachable(g, sources, blocked=()):
    """Set of vertices reachable from ``sources`` avoiding ``blocked``."""
    blocked = set(blocked)
    seen = {s for s in sources if s not in blocked}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def shortest_path(g, sources, targets, blocked=()):
    """BFS path from some source to some target avoiding ``blocked``.

    Neighbours are scanned in increasing id order so the result is
    deterministic. Returns ``None`` when no path exists.
    """
    blocked = set(blocked)
    targets = set(targets)
    parent = {}
    queue = deque()
    for s in sorted(set(sources)):
        if s in blocked or s in parent:
            continue
        if s in targets:
            return [s]
        parent[s] = None
        queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in parent or w in blocked:
                continue
            parent[w] = u
            if w in targets:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def components(g, removed=()):
    """Connected components of ``g - removed`` as sorted vertex lists."""
    removed = set(removed)
    seen = set(removed)
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = reachable(g, [v], removed)
        seen |= comp
        out.append(sorted(comp))
    return out


def is_connected(g):
    return g.n == 0 or len(reachable(g, [0])) == g.n


def neighborhood(g, vs):
    """N(vs): vertices outside ``vs`` adjacent to some vertex of ``vs``."""
    vs = set(vs)
    return {w for v in vs for w in g.neighbors(v) if w not in vs}


@dataclass(frozen=True)
class Block:
    vertices: frozenset
    edges: tuple

    @property
    def is_bridge(self):
        return len(self.vertices) == 2

    @property
    def is_biconnected(self):
        """True for blocks on at least three vertices (2-connected)."""
        return len(self.vertices) >= 3


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    cut_vertices: frozenset


def blocks(g):
    """Biconnected decomposition (Hopcroft-Tarjan, iterative).

    Isolated vertices form edgeless singleton blocks. Blocks are listed
    in order of their smallest vertex, ties by edge list.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.neighbors(root):
            disc[root] = timer
            timer += 1
            found.append(Block(frozenset([root]), ()))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack = []
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                comp_edges = []
                while True:
                    e = edge_stack.pop()
                    comp_edges.append((min(e), max(e)))
                    if e == (parent, u):
                        break
                verts = frozenset(x for e in comp_edges for x in e)
                found.append(Block(verts, tuple(sorted(comp_edges))))
        if root_children >= 2:
            cuts.add(root)
    found.sort(key=lambda b: (min(b.vertices), b.edges))
    return BlockDecomposition(tuple(found), frozenset(cuts))


def cut_vertices(g):
    return blocks(g).cut_vertices


def find_cut_vertex(g):
    """Smallest cut vertex of ``g`` or ``None``."""
    cuts = cut_vertices(g)
    return min(cuts) if cuts else None


def is_biconnected(g):
    """2-connected: at least three vertices, connected, no cut vertex."""
    if "biconnected" not in g._memo:
        g._memo["biconnected"] = g.n >= 3 and is_connected(g) and not cut_vertices(g)
    return g._memo["biconnected"]


def path_problems(g, path):
    """Return a list of reasons ``path`` is not a path of ``g``."""
    problems = []
    if not path:
        return ["empty path"]
    for v in path:
        if not (isinstance(v, int) and 0 <= v < g.n):
            return [f"vertex {v!r} not in graph"]
    if len(set(path)) != len(path):
        problems.append("repeated vertex")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            problems.append(f"missing edge ({u}, {v})")
    return problems


def cycle_problems(g, cycle):
    """Return a list of reasons ``cycle`` is not a cycle of ``g``."""
    if len(cycle) < 3:
        return ["cycle needs at least 3 vertices"]
    problems = path_problems(g, list(cycle))
    if problems and problems[0].startswith("vertex"):
        return problems
    if not g.has_edge(cycle[-1], cycle[0]):
        problems.append(f"missing edge ({cycle[-1]}, {cycle[0]})")
    return problems


def cycle_from_edges(edges):
    """Vertex sequence of the cycle formed by ``edges``, else ``None``.

    Succeeds only if the edges form exactly one cycle (every vertex has
    degree two and the edge set is connected).
    """
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) < 3 or any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(adj)
    cyc = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cyc) != len(adj):
        return None
    return cyc


def path_edges(path):
    return {(min(u, v), max(u, v)) for u, v in zip(path, path[1:])}


def normalize_cycle(cycle):
    """Rotate to start at the smallest id and orient toward the smaller
    of its two neighbours."""
    i = cycle.index(min(cycle))
    c = list(cycle[i:]) + list(cycle[:i])
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return c


# ---------------------------------------------------------------------------
# text formats


def _detect_graph6(text):
    stripped = text.lstrip()
    if stripped.startswith(">>graph6<<"):
        return True
    return bool(stripped) and not (stripped[0].isdigit() or stripped[0] == "#")


def parse_labeled(text, fmt=None):
    """Parse an edge list or graph6 string.

    Returns ``(graph, labels)`` where ``labels[i]`` is the caller's name
    for vertex ``i``. Integer edge lists keep their ids; edge lists using
    non-integer names are compacted in order of first appearance. The
    format is detected from the first byte unless ``fmt`` is ``"el"`` or
    ``"g6"``.
    """
    if fmt not in (None, "el", "g6"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "g6" or (fmt is None and _detect_graph6(text)):
        g = _parse_graph6(text)
        return g, [str(i) for i in range(g.n)]
    return _parse_edge_list(text)


def parse_graph(text, fmt=None):
    return parse_labeled(text, fmt)[0]


def _parse_edge_list(text):
    lines = [(i + 1, raw.strip()) for i, raw in enumerate(text.splitlines())]
    lines = [(no, s) for no, s in lines if s and not s.startswith("#")]
    if not lines:
        raise ParseError("missing vertex count line", 1)
    head_no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected vertex count, got {head!r}", head_no) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", head_no)
    pairs = []
    for no, s in lines[1:]:
        tokens = s.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {s!r}", no)
        pairs.append((no, tokens))

    def is_int(tok):
        return tok.lstrip("-").isdigit()

    named = any(not is_int(t) for _, toks in pairs for t in toks)
    if named:
        labels = []
        index = {}
        for _, toks in pairs:
            for t in toks:
                if t not in index:
                    index[t] = len(labels)
                    labels.append(t)
        if len(labels) > n:
            raise ParseError(f"{len(labels)} distinct names but n={n}", head_no)
        labels += [str(i) for i in range(len(labels), n)]
        lookup = index.__getitem__
    else:
        labels = [str(i) for i in range(n)]

        def lookup(tok):
            return int(tok)

    seen = set()
    edges = []
    for no, (a, b) in pairs:
        u, v = lookup(a), lookup(b)
        for tok, x in ((a, u), (b, v)):
            if not 0 <= x < n:
                raise ParseError(f"vertex {tok!r} out of range 0..{n - 1}", no)
        if u == v:
            raise ParseError(f"self-loop at {a!r}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b}", no)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges), labels


def _parse_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if "\n" in s:
        raise ParseError("graph6 input must hold exactly one graph")
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise ParseError(f"invalid graph6 byte in {s!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n, body = (data[1] << 12) | (data[2] << 6) | data[3], data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for d in body:
        bits.extend((d >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def write_graph(g, fmt="el", labels=None):
    """Serialize ``g`` as an edge list (``"el"``) or graph6 (``"g6"``)."""
    if fmt == "g6":
        return _write_graph6(g) + "\n"
    if fmt != "el":
        raise ValueError(f"unknown format {fmt!r}")
    name = (lambda v: labels[v]) if labels else str
    lines = [str(g.n)] + [f"{name(u)} {name(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _write_graph6(g):
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(d + 63) for d in head + body)
