"""Odd-reflection graphs of gl(m|n) and D(2,1;alpha) and their comparison with RB(G).

Weights of h* are integer vectors in a fixed basis (``eps_1..eps_m, delta_1..delta_n``
for gl(m|n); ``delta, eps_1, eps_2`` for D(2,1;alpha)).  Root names are
string metadata only.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb

from .cartan import SemiCartanGraph, build_rb, coordinates
from .ecgraph import ColoredGraph
from .errors import IsomorphismFailed, SizeLimitExceeded

GL_MAX = 8


# ----------------------------------------------------------------------------
# gl(m|n): Young diagrams in an m x n box
# ----------------------------------------------------------------------------

def young_diagrams(m: int, n: int):
    """Partitions with at most ``m`` parts, each at most ``n``, ordered by size then reverse-lex."""
    out = []

    def rec(prefix, cap):
        out.append(tuple(prefix))
        if len(prefix) == m:
            return
        for part in range(1, cap + 1):
            rec(prefix + [part], part)

    rec([], n)
    return sorted(out, key=lambda p: (sum(p), tuple(-x for x in p)))


def diagram_name(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _added_box(small, big):
    """Box ``(x, y)`` (column, row; French notation, 1-based) with ``big = small + box``."""
    if sum(big) != sum(small) + 1 or len(big) - len(small) not in (0, 1):
        return None
    s = list(small) + [0] * (len(big) - len(small))
    diff = [b - a for a, b in zip(s, big)]
    if sorted(diff) != [0] * (len(diff) - 1) + [1]:
        return None
    y = diff.index(1) + 1
    return big[y - 1], y


def _gl_edges(m, n):
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m + n > GL_MAX:
        raise SizeLimitExceeded(f"m + n must be at most {GL_MAX}", (m, n))
    diagrams = young_diagrams(m, n)
    index = {p: k for k, p in enumerate(diagrams)}
    edges = []
    for p in diagrams:
        rows = list(p)
        for y in range(1, len(rows) + 2):
            if y > m:
                break
            cur = rows[y - 1] if y <= len(rows) else 0
            above_ok = y == 1 or rows[y - 2] > cur
            if cur < n and above_ok:
                q = rows[:y - 1] + [cur + 1] + rows[y:]
                q = tuple(q)
                edges.append((p, q, (cur + 1, y)))
    edges.sort(key=lambda e: (index[e[0]], index[e[1]]))
    return diagrams, edges


def gl_box_color(m, box) -> int:
    """1-based color ``x - y + m`` of the box ``(x, y)``."""
    x, y = box
    return x - y + m


def exchange_graph_gl(m: int, n: int) -> SemiCartanGraph:
    """G(gl(m|n)): every vertex labeled by the Cartan matrix of type A_{m+n-1}."""
    diagrams, edges = _gl_edges(m, n)
    theta = m + n - 1
    A = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(theta)] for i in range(theta)]
    names = [diagram_name(p) for p in diagrams]
    gcm = {v: A for v in names}
    cedges = [(diagram_name(p), diagram_name(q), gl_box_color(m, box) - 1) for p, q, box in edges]
    return SemiCartanGraph.from_edges(theta, gcm, cedges, names)


def or_graph_gl(m: int, n: int) -> ColoredGraph:
    """OR(gl(m|n)): the same graph with each edge colored by the box ``"(x,y)"`` it adds."""
    diagrams, edges = _gl_edges(m, n)
    colored = [(diagram_name(p), diagram_name(q), f"({b[0]},{b[1]})") for p, q, b in edges]
    colors = sorted({c for _, _, c in colored}, key=lambda s: tuple(map(int, s[1:-1].split(","))))
    return ColoredGraph([diagram_name(p) for p in diagrams], colored, colors)


def gl_root_data(m: int, n: int):
    """Roots of gl(m|n) in the basis ``eps_1..eps_m, delta_1..delta_n`` plus the distinguished simple roots."""
    d = m + n

    def e(k):
        return tuple(int(j == k) for j in range(d))

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    basis = [e(k) for k in range(d)]
    roots, odd = [], []
    for a in range(d):
        for b in range(d):
            if a != b:
                r = sub(basis[a], basis[b])
                roots.append(r)
                if (a < m) != (b < m):
                    odd.append(r)
    simple = [sub(basis[k], basis[k + 1]) for k in range(d - 1)]
    names = [f"eps{k + 1}" for k in range(m)] + [f"delta{k + 1}" for k in range(n)]
    return simple, roots, odd, names


def gl_box_root(m: int, box):
    """Odd root ``eps_{m+1-y} - delta_x`` attached to the box ``(x, y)``."""
    x, y = box
    return f"eps{m + 1 - y}-delta{x}"


# ----------------------------------------------------------------------------
# Generic odd-reflection graphs from explicit root data
# ----------------------------------------------------------------------------

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def format_weight(v, names) -> str:
    parts = []
    for c, name in zip(v, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else (s or "0")


@dataclass
class OddReflectionGraph:
    """Borels reachable by odd reflections, keyed by their ordered simple roots."""
    borels: list          # list of simple-root tuples
    edges: list           # (k, l, color index i, odd root normalized positive at the base)
    positive: list        # positive system of each Borel (frozenset of weights)

    def colored_graph(self, vertex_names, weight_names) -> ColoredGraph:
        colored = [(vertex_names[a], vertex_names[b], format_weight(r, weight_names))
                   for a, b, _, r in self.edges]
        return ColoredGraph(vertex_names, colored)


def odd_reflection_graph(simple, roots, odd_isotropic, max_vertices=10_000) -> OddReflectionGraph:
    """Close the base Borel under odd reflections at isotropic simple roots.

    At an isotropic odd simple root ``a_i`` the new simple roots are ``-a_i``
    and ``a_j + a_i`` (when that is a root) or ``a_j``; the positive system
    changes by ``(D+ \\ {a_i}) u {-a_i}``.
    """
    simple = tuple(tuple(s) for s in simple)
    roots = {tuple(r) for r in roots}
    iso = {tuple(r) for r in odd_isotropic}
    base_pos = set()
    for r in roots:
        c = coordinates(r, simple)
        if c is None:
            raise ValueError(f"root {r} is outside the span of the simple roots")
        if all(x >= 0 for x in c):
            base_pos.add(r)
    index = {simple: 0}
    borels, positive, edges = [simple], [frozenset(base_pos)], []
    queue = deque([simple])
    seen_edges = set()
    while queue:
        b = queue.popleft()
        k = index[b]
        for i, a in enumerate(b):
            if a not in iso:
                continue
            new = tuple(_neg(a) if j == i else (_add(s, a) if _add(s, a) in roots else s)
                        for j, s in enumerate(b))
            if new not in index:
                if len(index) >= max_vertices:
                    raise SizeLimitExceeded("too many Borels", len(index))
                index[new] = len(borels)
                borels.append(new)
                positive.append((positive[k] - {a}) | {_neg(a)})
                queue.append(new)
            l = index[new]
            key = frozenset((k, l))
            if key not in seen_edges:
                seen_edges.add(key)
                colour = a if a in base_pos else _neg(a)
                edges.append((k, l, i, colour))
    return OddReflectionGraph(borels, edges, positive)


# ----------------------------------------------------------------------------
# D(2,1; alpha)
# ----------------------------------------------------------------------------

D21_BASIS = ("delta", "eps1", "eps2")

D21_GCM = {
    "b1": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "b2": [[2, -1, -1], [-1, 2, 0], [-1, 0, 2]],
    "b3": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "b4": [[2, 0, -1], [0, 2, -1], [-1, -1, 2]],
}
D21_EDGES = [("b1", "b3", 1), ("b2", "b3", 0), ("b3", "b4", 2)]

D21_POSITIVE = {
    "b1": [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 2, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
    "b2": [(0, 1, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1), (1, 0, 0), (1, 0, 1), (0, 0, 1)],
    "b3": [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
    "b4": [(1, 0, 0), (1, 0, 1), (1, 1, 1), (1, 1, 2), (0, 0, 1), (0, 1, 1), (0, 1, 0)],
}

# simple roots of b1 in the basis (delta, eps1, eps2)
D21_SIMPLE_B1 = [(0, 2, 0), (1, -1, -1), (0, 0, 2)]


def d21_roots():
    even = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    odd = [(1, s1, s2) for s1 in (-1, 1) for s2 in (-1, 1)]
    roots = even + odd
    roots = roots + [_neg(r) for r in roots]
    iso = odd + [_neg(r) for r in odd]
    return roots, iso


def d21alpha():
    """The four-vertex rank-3 Cartan graph of D(2,1;alpha) with its expected data."""
    G = SemiCartanGraph.from_edges(3, D21_GCM, D21_EDGES, ["b1", "b2", "b3", "b4"])
    expected = {
        "positive_roots": {k: frozenset(v) for k, v in D21_POSITIVE.items()},
        "delta_size": 14,
        "pure_positive_size": 4,
        "pure_positive_odd_size": 1,
        "or_colors": {("b1", "b3"): "delta-eps1-eps2",
                      ("b2", "b3"): "delta+eps1-eps2",
                      ("b3", "b4"): "delta-eps1+eps2"},
    }
    return G, expected


def d21_or_graph(G: SemiCartanGraph | None = None):
    """OR(D(2,1;alpha)) computed by odd reflections from the Borel ``b1``.

    Borels are matched to vertices of ``G`` by following the same colors, and
    each Borel's positive system (in simple-root coordinates) is returned so
    it can be compared with ``R^{b+}``.
    """
    if G is None:
        G, _ = d21alpha()
    roots, iso = d21_roots()
    org = odd_reflection_graph(D21_SIMPLE_B1, roots, iso)
    names = {0: "b1"}
    for k, l, i, _ in sorted(org.edges):
        if k in names and l not in names:
            names[l] = G.r(names[k], i)
        elif l in names and k not in names:
            names[k] = G.r(names[l], i)
    vnames = [names[k] for k in range(len(org.borels))]
    graph = org.colored_graph(vnames, D21_BASIS)
    pos = {}
    for k, b in enumerate(org.borels):
        pos[vnames[k]] = frozenset(tuple(int(c) for c in coordinates(r, b)) for r in org.positive[k])
    return graph, pos


# ----------------------------------------------------------------------------
# OR(g) versus RB(G(g))
# ----------------------------------------------------------------------------

def match_colorings(A: ColoredGraph, B: ColoredGraph) -> dict:
    """Color bijection making the identity on vertex names an isomorphism ``A -> B``."""
    if set(A.vertices) != set(B.vertices):
        raise IsomorphismFailed("vertex sets differ", set(A.vertices) ^ set(B.vertices))
    ea = {frozenset((u, v)): c for u, v, c in A.edges}
    eb = {frozenset((u, v)): c for u, v, c in B.edges}
    if set(ea) != set(eb):
        raise IsomorphismFailed("underlying graphs differ", set(ea) ^ set(eb))
    fwd, back = {}, {}
    for e in sorted(ea, key=lambda s: sorted(map(str, s))):
        a, b = ea[e], eb[e]
        if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
            raise IsomorphismFailed(f"color {a!r} cannot be matched consistently", (tuple(e), a, b))
    return fwd


def verify_or_equals_rb(family: str, *args) -> dict:
    """Check ``OR(g) ~ RB(G(g))`` for ``("gl", m, n)`` or ``("d21a",)``; return the color bijection."""
    if family == "gl":
        m, n = args
        G = exchange_graph_gl(m, n)
        OR = or_graph_gl(m, n)
    elif family in ("d21a", "d21alpha"):
        G, _ = d21alpha()
        OR, _ = d21_or_graph(G)
    else:
        raise ValueError(f"unknown family {family!r}")
    RB = build_rb(G)
    return match_colorings(OR, RB)


def gl_vertex_count(m, n):
    return comb(m + n, m)
