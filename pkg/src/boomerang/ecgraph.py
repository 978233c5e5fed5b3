"""Edge-colored graphs and the rainbow boomerang property.

A properly edge-colored connected graph is *rainbow boomerang* (RB) when a walk
is shortest exactly when its colors are pairwise distinct.  The fast decision
procedure here labels every vertex by a subset of colors (a hypercube
embedding) and compares graph distance with Hamming distance; ``rb_oracle``
checks the definition directly by enumeration and is used to cross-check it.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import (
    Disconnected,
    NotProperlyColored,
    NotRainbowBoomerang,
    PreconditionViolated,
    SizeLimitExceeded,
)

Vertex = Hashable
Color = Hashable

ORACLE_MAX_COLORS = 12
SUBCUBE_MAX_DIM = 5
SEARCH_MAX_EDGES = 12


class ColoredGraph:
    """Finite undirected edge-colored graph with ordered vertex and color sets.

    Edges are triples ``(u, v, c)``; ``(u, v, c)`` and ``(v, u, c)`` are the
    same edge and duplicates are dropped.  Every listed color must occur on
    some edge.
    """

    __slots__ = ("vertices", "colors", "edges", "_adj", "_index", "proper")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Sequence],
                 colors: Iterable[Color] | None = None, allow_loops: bool = True):
        self.vertices = tuple(dict.fromkeys(vertices))
        self._index = {v: k for k, v in enumerate(self.vertices)}
        seen = set()
        kept = []
        for u, v, c in edges:
            if u not in self._index or v not in self._index:
                raise ValueError(f"edge {(u, v, c)!r} has an endpoint outside the vertex set")
            if u == v and not allow_loops:
                raise ValueError(f"loop {(u, v, c)!r} not allowed")
            key = (frozenset((u, v)), c)
            if key in seen:
                continue
            seen.add(key)
            kept.append((u, v, c))
        self.edges = tuple(kept)
        used = tuple(dict.fromkeys(c for _, _, c in self.edges))
        if colors is None:
            self.colors = used
        else:
            self.colors = tuple(dict.fromkeys(colors))
            missing = set(used) - set(self.colors)
            if missing:
                raise ValueError(f"edge colors {sorted(map(repr, missing))} not in the color set")
            unused = set(self.colors) - set(used)
            if unused:
                raise ValueError(f"colors {sorted(map(repr, unused))} appear on no edge")
        self._adj = {v: [] for v in self.vertices}
        for u, v, c in self.edges:
            self._adj[u].append((v, c))
            if u != v:
                self._adj[v].append((u, c))
        self.proper = False

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices)
                and set(self.colors) == set(other.colors)
                and self.edge_set() == other.edge_set())

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.edge_set())))

    def __repr__(self):
        return (f"ColoredGraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, "
                f"|C|={len(self.colors)})")

    def index(self, v):
        return self._index[v]

    def edge_set(self):
        return {(frozenset((u, v)), c) for u, v, c in self.edges}

    def incident(self, v):
        """List of ``(neighbor, color)`` pairs at ``v``."""
        return self._adj[v]

    def neighbor(self, v, c):
        """The vertex reached from ``v`` along color ``c`` (proper graphs only)."""
        hits = [w for w, d in self._adj[v] if d == c]
        if len(hits) != 1:
            raise PreconditionViolated(f"vertex {v!r} has {len(hits)} edges of color {c!r}")
        return hits[0]

    def has_edge(self, u, v, c=None):
        return any(w == v and (c is None or d == c) for w, d in self._adj[u])

    def has_loops(self):
        return any(u == v for u, v, _ in self.edges)

    def components(self):
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w, _ in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp, key=self._index.__getitem__))
        return comps

    def is_connected(self):
        return len(self.vertices) > 0 and len(self.components()) == 1

    def subgraph(self, vertices, drop_colors=()):
        """Induced subgraph on ``vertices`` without the colors in ``drop_colors``."""
        keep = set(vertices)
        drop = set(drop_colors)
        return ColoredGraph(
            [v for v in self.vertices if v in keep],
            [(u, v, c) for u, v, c in self.edges if u in keep and v in keep and c not in drop],
        )

    def relabel(self, vertex_map=None, color_map=None):
        vm = vertex_map or {}
        cm = color_map or {}
        return ColoredGraph(
            [vm.get(v, v) for v in self.vertices],
            [(vm.get(u, u), vm.get(v, v), cm.get(c, c)) for u, v, c in self.edges],
        )

    def walk(self, start, colors):
        """Follow ``colors`` from ``start`` in a properly colored graph."""
        vs = [start]
        for c in colors:
            vs.append(self.neighbor(vs[-1], c))
        return Walk(tuple(vs), tuple(colors))


@dataclass(frozen=True)
class Walk:
    vertices: tuple
    colors: tuple = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.colors) + 1:
            raise ValueError("a walk has exactly one more vertex than colors")

    def __len__(self):
        return len(self.colors)

    @property
    def origin(self):
        return self.vertices[0]

    @property
    def terminus(self):
        return self.vertices[-1]

    def reverse(self):
        return Walk(self.vertices[::-1], self.colors[::-1])

    def __add__(self, other: "Walk"):
        if self.terminus != other.origin:
            raise ValueError("walks do not meet")
        return Walk(self.vertices + other.vertices[1:], self.colors + other.colors)

    def is_valid_in(self, g: ColoredGraph):
        return all(
            v in g and g.has_edge(u, v, c)
            for u, c, v in zip(self.vertices, self.colors, self.vertices[1:])
        ) and self.origin in g

    def odd_colors(self):
        """Colors occurring an odd number of times along the walk."""
        odd = set()
        for c in self.colors:
            odd ^= {c}
        return frozenset(odd)


@dataclass(frozen=True)
class HypercubeLabeling:
    base: Vertex
    label: dict = field(hash=False)

    def bits(self, colors):
        """Labels as integers, bit ``k`` standing for ``colors[k]``."""
        pos = {c: k for k, c in enumerate(colors)}
        return {v: sum(1 << pos[c] for c in s) for v, s in self.label.items()}


@dataclass
class RBResult:
    """Verdict of :func:`is_rainbow_boomerang`; truthy iff the graph is RB."""
    verdict: bool
    reason: str = ""
    witness: object = None
    labeling: HypercubeLabeling | None = None

    def __bool__(self):
        return self.verdict


# ----------------------------------------------------------------------
def validate_proper(g: ColoredGraph) -> ColoredGraph:
    """Return ``g`` marked as properly colored, or raise with every violation."""
    bad = []
    for v in g.vertices:
        counts = {}
        for w, c in g.incident(v):
            counts[c] = counts.get(c, 0) + 1
        bad.extend((v, c) for c, k in counts.items() if k > 1)
    if bad:
        raise NotProperlyColored(f"{len(bad)} (vertex, color) pairs repeat a color", bad)
    g.proper = True
    return g


def _require_rb_preconditions(g):
    if not g.proper:
        validate_proper(g)
    if not g.is_connected():
        raise Disconnected("graph is not connected", g.components())


def bfs_distances(g: ColoredGraph, source) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w, _ in g.incident(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distances(g: ColoredGraph) -> dict:
    """All-pairs distance table; unreachable pairs get ``math.inf``."""
    table = {}
    for s in g.vertices:
        d = bfs_distances(g, s)
        table[s] = {t: d.get(t, math.inf) for t in g.vertices}
    return table


def is_rainbow(w: Walk) -> bool:
    return len(set(w.colors)) == len(w.colors)


def is_shortest(g: ColoredGraph, w: Walk) -> bool:
    return bfs_distances(g, w.origin).get(w.terminus, math.inf) == len(w)


def _tree_path(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def is_rainbow_boomerang(g: ColoredGraph) -> RBResult:
    """Decide the RB property via bipartiteness, hypercube labeling and distances."""
    _require_rb_preconditions(g)
    for u, v, c in g.edges:
        if u == v:
            return RBResult(False, "loop", Walk((u, u), (c,)))

    base = g.vertices[0]
    side = {base: 0}
    parent = {base: None}
    label = {base: frozenset()}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for w, c in g.incident(u):
            if w not in side:
                side[w] = 1 - side[u]
                parent[w] = u
                label[w] = label[u] ^ {c}
                queue.append(w)
    for u, v, c in g.edges:
        if side[u] == side[v]:
            pu, pv = _tree_path(parent, u), _tree_path(parent, v)
            common = set(pu) & set(pv)
            cycle = [x for x in pu if x not in common] + [next(x for x in pu if x in common)]
            cycle += [x for x in reversed(pv) if x not in common]
            return RBResult(False, "odd cycle", cycle)
    for u, v, c in g.edges:
        if label[u] ^ label[v] != {c}:
            return RBResult(False, "labeling violated", (u, v, c))

    labeling = HypercubeLabeling(base, label)
    bits = labeling.bits(g.colors)
    for s in g.vertices:
        d = bfs_distances(g, s)
        for t in g.vertices:
            ham = (bits[s] ^ bits[t]).bit_count()
            if d[t] != ham:
                return RBResult(False, "distance differs from Hamming distance",
                                {"pair": (s, t), "distance": d[t], "hamming": ham})
    return RBResult(True, "rainbow boomerang", None, labeling)


def rb_oracle(g: ColoredGraph) -> bool:
    """Check the RB definition by enumerating shortest paths and rainbow walks."""
    _require_rb_preconditions(g)
    if len(g.colors) > ORACLE_MAX_COLORS:
        raise SizeLimitExceeded(f"oracle limited to {ORACLE_MAX_COLORS} colors")
    dist = distances(g)

    # every shortest path is rainbow: DFS over the layered shortest-path DAG
    for s in g.vertices:
        ds = dist[s]
        stack = [(s, frozenset())]
        while stack:
            u, used = stack.pop()
            for w, c in g.incident(u):
                if ds[w] != ds[u] + 1:
                    continue
                if c in used:
                    return False
                stack.append((w, used | {c}))

    # every rainbow walk is shortest
    for s in g.vertices:
        ds = dist[s]
        stack = [(s, frozenset(), 0)]
        while stack:
            u, used, length = stack.pop()
            for w, c in g.incident(u):
                if c in used:
                    continue
                if ds[w] != length + 1:
                    return False
                stack.append((w, used | {c}, length + 1))
    return True


def embed_hypercube(g: ColoredGraph) -> HypercubeLabeling:
    res = is_rainbow_boomerang(g)
    if not res:
        raise NotRainbowBoomerang(res.reason, res.witness)
    return res.labeling


def color_set(g: ColoredGraph, x, y) -> frozenset:
    """Colors of any rainbow shortest path from ``x`` to ``y``."""
    lab = embed_hypercube(g).label
    return lab[x] ^ lab[y]


def quotient(g: ColoredGraph, D) -> tuple[ColoredGraph, dict]:
    """Contract every edge with color in ``D``.

    Classes are named by their first member in vertex order.  Loops are
    dropped, parallel same-colored edges merged and unused colors removed.
    Returns ``(graph, projection)``.
    """
    D = set(D)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v, c in g.edges:
        if c in D:
            ru, rv = find(u), find(v)
            if ru != rv:
                if g.index(ru) < g.index(rv):
                    parent[rv] = ru
                else:
                    parent[ru] = rv
    proj = {v: find(v) for v in g.vertices}
    verts = [v for v in g.vertices if proj[v] == v]
    edges = [(proj[u], proj[v], c) for u, v, c in g.edges
             if c not in D and proj[u] != proj[v]]
    q = ColoredGraph(verts, edges, [c for c in g.colors if any(c == e[2] for e in edges)])
    return q, proj


def split_by_color(g: ColoredGraph, c) -> tuple[ColoredGraph, ColoredGraph]:
    res = is_rainbow_boomerang(g)
    if not res:
        raise NotRainbowBoomerang(res.reason, res.witness)
    comps = g.subgraph(g.vertices, drop_colors=[c]).components()
    if len(comps) != 2:
        raise NotRainbowBoomerang(f"removing color {c!r} left {len(comps)} components", comps)
    return tuple(g.subgraph(comp, drop_colors=[c]) for comp in comps)


def shortest_path(g: ColoredGraph, s, t) -> Walk:
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w, c in g.incident(u):
            if w not in parent:
                parent[w] = (u, c)
                queue.append(w)
    if t not in parent:
        raise Disconnected(f"no path from {s!r} to {t!r}")
    vs, cs = [t], []
    while parent[vs[-1]] is not None:
        u, c = parent[vs[-1]]
        vs.append(u)
        cs.append(c)
    return Walk(tuple(reversed(vs)), tuple(reversed(cs)))


def exchange_walk(g: ColoredGraph, w: Walk) -> Walk:
    """Given a rainbow walk ``v0 c0 v1 ... ck v_{k+1}``, close it with the
    ``c0``-edge at ``v_{k+1}`` and return a rainbow walk from the far end of
    that edge back to ``v0`` using exactly the colors ``c1 .. ck``."""
    if not w.is_valid_in(g):
        raise PreconditionViolated("walk is not valid in the graph")
    if len(w) == 0 or not is_rainbow(w):
        raise PreconditionViolated("need a nonempty rainbow walk")
    if not is_rainbow_boomerang(g):
        raise PreconditionViolated("graph is not rainbow boomerang")
    end = g.neighbor(w.terminus, w.colors[0])
    back = shortest_path(g, end, w.origin)
    k = len(w) - 1
    if len(back) != k or not is_rainbow(back) or set(back.colors) != set(w.colors[1:]):
        raise PreconditionViolated("exchange failed; graph not RB?", back)
    return back


def check_subcube_connectivity(sub: ColoredGraph, n: int) -> bool:
    """Connectivity of ``sub`` inside every subcube of ``Q_n``.

    Vertices of ``sub`` are 0/1 tuples of length ``n`` and an edge of color
    ``k`` joins tuples differing only in coordinate ``k``.
    """
    if n > SUBCUBE_MAX_DIM:
        raise SizeLimitExceeded(f"subcube enumeration limited to n <= {SUBCUBE_MAX_DIM}")
    for u, v, c in sub.edges:
        diff = [k for k in range(n) if u[k] != v[k]]
        if diff != [c]:
            raise PreconditionViolated(f"edge {(u, v, c)!r} is not a hypercube edge of color {c}")
    for pattern in itertools.product((0, 1, None), repeat=n):
        inside = [v for v in sub.vertices
                  if all(p is None or v[k] == p for k, p in enumerate(pattern))]
        if len(inside) > 1 and not sub.subgraph(inside).is_connected():
            return False
    return True


def hypercube(n: int) -> ColoredGraph:
    """``Q_n`` with its natural coloring; vertices are 0/1 tuples, colors ``0..n-1``."""
    verts = list(itertools.product((0, 1), repeat=n))
    edges = []
    for v in verts:
        for k in range(n):
            if v[k] == 0:
                w = v[:k] + (1,) + v[k + 1:]
                edges.append((v, w, k))
    return ColoredGraph(verts, edges)


def cycle(colors: Sequence) -> ColoredGraph:
    """Cycle ``C_n`` on vertices ``0..n-1`` with edge ``i -- i+1`` colored ``colors[i]``."""
    n = len(colors)
    return ColoredGraph(range(n), [(i, (i + 1) % n, c) for i, c in enumerate(colors)])


def _set_partitions_into_matchings(edges, max_blocks):
    """Restricted-growth assignment of edges to color blocks, each block a matching."""
    n = len(edges)
    assign = [0] * n
    block_vertices = []

    def rec(k):
        if k == n:
            yield tuple(assign)
            return
        u, v = edges[k]
        for b in range(len(block_vertices)):
            if u not in block_vertices[b] and v not in block_vertices[b]:
                assign[k] = b
                block_vertices[b] |= {u, v}
                if _squares_ok(k):
                    yield from rec(k + 1)
                block_vertices[b] -= {u, v}
        if len(block_vertices) < max_blocks:
            assign[k] = len(block_vertices)
            block_vertices.append({u, v})
            if _squares_ok(k):
                yield from rec(k + 1)
            block_vertices.pop()

    # every closed walk of an RB graph uses each color an even number of times,
    # so a colored 4-cycle must read a b a b
    squares_at = {k: [] for k in range(n)}
    eidx = {frozenset(e): k for k, e in enumerate(edges)}
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    for a, b in itertools.combinations(adj, 2):
        for c, d in itertools.combinations(sorted(adj[a] & adj[b], key=repr), 2):
            sq = [eidx[frozenset((a, c))], eidx[frozenset((c, b))],
                  eidx[frozenset((b, d))], eidx[frozenset((d, a))]]
            squares_at[max(sq)].append(sq)

    def _squares_ok(k):
        for e1, e2, e3, e4 in squares_at[k]:
            if assign[e1] != assign[e3] or assign[e2] != assign[e4]:
                return False
        return True

    yield from rec(0)


def search_rb_coloring(vertices, edges, max_colors: int | None = None):
    """Find an edge coloring making the (uncolored) graph RB, or ``None``.

    Colorings are enumerated as set partitions of the edge set into matchings,
    so color renamings are never revisited.  Returns a ``ColoredGraph`` with
    integer colors.
    """
    edges = [tuple(e) for e in edges]
    if len(edges) > SEARCH_MAX_EDGES:
        raise SizeLimitExceeded(f"search limited to {SEARCH_MAX_EDGES} edges")
    if max_colors is None:
        max_colors = len(edges)
    probe = ColoredGraph(vertices, [(u, v, k) for k, (u, v) in enumerate(edges)])
    if not probe.is_connected():
        raise Disconnected("graph is not connected")
    for assign in _set_partitions_into_matchings(edges, max_colors):
        g = ColoredGraph(vertices, [(u, v, b) for (u, v), b in zip(edges, assign)])
        if is_rainbow_boomerang(g):
            return g
    return None


def complete_bipartite(m: int, n: int):
    verts = [("a", i) for i in range(m)] + [("b", j) for j in range(n)]
    return verts, [(("a", i), ("b", j)) for i in range(m) for j in range(n)]
