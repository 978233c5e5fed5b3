"""Semi Cartan graphs, their Weyl groupoids, real roots and RB(G).

Colors are 0-based indices ``0 .. theta-1`` throughout the Python API; the
JSON/CLI layer shifts them to the 1-based labels used in the literature.

Matrices are tuples of integer rows acting on coefficient column vectors.  A
morphism with word ``(i1, ..., it)`` starting at ``x`` is the product
``s_it ... s_i1`` and maps coordinates in the basis at ``x`` to coordinates
in the basis at ``r_it ... r_i1 x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable

from .ecgraph import ColoredGraph
from .errors import BudgetExceeded, InvalidCartanGraph, NotPathSimplyConnected

MAX_WORD_LENGTH = 64
MAX_MORPHISMS = 10 ** 6


def check_gcm(A) -> None:
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise InvalidCartanGraph("matrix is not square", A)
        if A[i][i] != 2:
            raise InvalidCartanGraph(f"diagonal entry ({i},{i}) is not 2", A)
        for j in range(n):
            if i != j:
                if A[i][j] > 0:
                    raise InvalidCartanGraph(f"entry ({i},{j}) is positive", A)
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise InvalidCartanGraph(f"zero pattern not symmetric at ({i},{j})", A)


def _freeze(M):
    return tuple(tuple(int(x) for x in row) for row in M)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A))
    )


def mat_vec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def _reflect_rows(M, a_row, i):
    """``S_i @ M`` where ``S_i`` is the simple reflection with Cartan row ``a_row``."""
    new_row = tuple(
        M[i][c] - sum(a_row[k] * M[k][c] for k in range(len(M)))
        for c in range(len(M[0]))
    )
    return M[:i] + (new_row,) + M[i + 1:]


def reflect_vector(a_row, i, v):
    v = tuple(v)
    return v[:i] + (v[i] - sum(a * x for a, x in zip(a_row, v)),) + v[i + 1:]


def is_positive(v):
    return all(x >= 0 for x in v)


def is_negative(v):
    return all(x <= 0 for x in v)


def neg(v):
    return tuple(-x for x in v)


class SemiCartanGraph:
    """Vertices with GCM labels and color involutions ``r_i`` (fixed points are loops).

    Checks (CG1) (each ``r_i`` an involution, which makes the graph properly
    colored and regular) and (CG2) (row ``i`` agrees across an ``i``-edge).
    """

    def __init__(self, theta: int, vertices, gcm: dict, reflections: dict, validate=True):
        self.theta = theta
        self.vertices = tuple(vertices)
        self.gcm = {x: _freeze(gcm[x]) for x in self.vertices}
        self._r = {}
        for x in self.vertices:
            for i in range(theta):
                self._r[x, i] = reflections.get((x, i), x)
        if validate:
            self.validate()

    @classmethod
    def from_edges(cls, theta, gcm: dict, edges, vertices=None):
        """Build from non-loop edges ``(x, y, i)``; colors absent at a vertex are loops."""
        verts = list(vertices) if vertices is not None else list(gcm)
        refl = {}
        for x, y, i in edges:
            for a, b in ((x, y), (y, x)):
                if refl.get((a, i), b) != b:
                    raise InvalidCartanGraph(f"vertex {a!r} has two edges of color {i}", (a, i))
                refl[a, i] = b
        return cls(theta, verts, gcm, refl)

    def validate(self):
        for x in self.vertices:
            A = self.gcm[x]
            if len(A) != self.theta:
                raise InvalidCartanGraph(f"label of {x!r} has wrong size", x)
            check_gcm(A)
        for x in self.vertices:
            for i in range(self.theta):
                y = self.r(x, i)
                if y not in self.gcm:
                    raise InvalidCartanGraph(f"r_{i}({x!r}) = {y!r} is not a vertex", (x, i))
                if self.r(y, i) != x:
                    raise InvalidCartanGraph(f"r_{i} is not an involution at {x!r}", (x, i))
                if self.gcm[x][i] != self.gcm[y][i]:
                    raise InvalidCartanGraph(f"(CG2) fails on edge {x!r} -{i}- {y!r}", (x, y, i))

    def r(self, x, i):
        return self._r[x, i]

    def cartan_row(self, x, i):
        return self.gcm[x][i]

    def edges(self):
        """Non-loop edges ``(x, y, i)``, each listed once."""
        out = []
        for x in self.vertices:
            for i in range(self.theta):
                y = self.r(x, i)
                if y != x and (y, x, i) not in out:
                    out.append((x, y, i))
        return out

    def is_loopless(self):
        return all(self.r(x, i) != x for x in self.vertices for i in range(self.theta))

    def is_connected(self):
        return len(self.exchange_graph().components()) == 1

    def exchange_graph(self) -> ColoredGraph:
        """Underlying colored graph with loops omitted; colors are 0-based."""
        return ColoredGraph(self.vertices, self.edges())

    def has_multiedges(self):
        pairs = [frozenset((x, y)) for x, y, _ in self.edges()]
        return len(pairs) != len(set(pairs))

    def __repr__(self):
        return f"SemiCartanGraph(theta={self.theta}, |V|={len(self.vertices)})"


def simple_reflection_matrix(G: SemiCartanGraph, x, i):
    """``s_i^x``: column ``j`` is ``e_j - a_ij e_i``."""
    return _reflect_rows(identity(G.theta), G.cartan_row(x, i), i)


@dataclass(frozen=True)
class GroupoidMorphism:
    source: Hashable
    target: Hashable
    matrix: tuple
    word: tuple = field(default=(), compare=False)

    def apply(self, v):
        return mat_vec(self.matrix, v)

    def then(self, other: "GroupoidMorphism"):
        """``other o self``."""
        if other.source != self.target:
            raise ValueError("morphisms are not composable")
        return GroupoidMorphism(self.source, other.target, mat_mul(other.matrix, self.matrix),
                                self.word + other.word)

    def is_identity(self):
        return self.source == self.target and self.matrix == identity(len(self.matrix))

    def word_name(self):
        if not self.word:
            return "id"
        return "".join(f"s{i + 1}" for i in reversed(self.word))


class WeylGroupoid:
    """All morphisms of ``W(G)`` (or of the path subgroupoid) out of the chosen sources."""

    def __init__(self, graph: SemiCartanGraph, out: dict, path_only=False):
        self.graph = graph
        self.path_only = path_only
        self._out = out  # source -> {(target, matrix): morphism}
        self._roots = None

    def morphisms(self, source=None):
        if source is not None:
            return list(self._out[source].values())
        return [m for s in self._out for m in self._out[s].values()]

    def sources(self):
        return list(self._out)

    def hom(self, x, y):
        return [m for (t, _), m in self._out[x].items() if t == y]

    def lookup(self, source, target, matrix):
        return self._out[source].get((target, matrix))

    def __len__(self):
        return sum(len(d) for d in self._out.values())

    def real_roots(self):
        """``R^x`` for every vertex: columns of all morphisms ending at ``x``."""
        if self._roots is None:
            roots = {x: set() for x in self.graph.vertices}
            for m in self.morphisms():
                for j in range(self.graph.theta):
                    roots[m.target].add(tuple(row[j] for row in m.matrix))
            self._roots = {x: frozenset(r) for x, r in roots.items()}
        return self._roots

    def positive_roots(self, x=None):
        R = self.real_roots()
        if x is not None:
            return frozenset(a for a in R[x] if is_positive(a))
        return {y: frozenset(a for a in R[y] if is_positive(a)) for y in R}


def _bfs_morphisms(G, x, max_len, max_morphisms, path_only):
    theta = G.theta
    start = GroupoidMorphism(x, x, identity(theta), ())
    found = {(x, start.matrix): start}
    layer = [start]
    length = 0
    while layer:
        if length > max_len:
            raise BudgetExceeded(f"words longer than {max_len} still produce new morphisms",
                                 layer[0].word)
        nxt = []
        for m in layer:
            y = m.target
            for i in range(theta):
                z = G.r(y, i)
                if path_only and z == y:
                    continue
                M = _reflect_rows(m.matrix, G.cartan_row(y, i), i)
                key = (z, M)
                if key not in found:
                    w = GroupoidMorphism(x, z, M, m.word + (i,))
                    found[key] = w
                    nxt.append(w)
                    if len(found) > max_morphisms:
                        raise BudgetExceeded(f"more than {max_morphisms} morphisms", len(found))
        layer = nxt
        length += 1
    return found


def generate_groupoid(G: SemiCartanGraph, max_len=MAX_WORD_LENGTH, max_morphisms=MAX_MORPHISMS,
                      sources=None) -> WeylGroupoid:
    """Breadth-first closure of words; stored words are shortest representatives."""
    srcs = G.vertices if sources is None else sources
    out = {x: _bfs_morphisms(G, x, max_len, max_morphisms, False) for x in srcs}
    return WeylGroupoid(G, out)


def path_subgroupoid(G: SemiCartanGraph, max_len=MAX_WORD_LENGTH, max_morphisms=MAX_MORPHISMS,
                     sources=None) -> WeylGroupoid:
    """Morphisms given by words that never step along a loop.

    Such words are closed under concatenation and reversal, so they already
    form the generated subgroupoid.
    """
    srcs = G.vertices if sources is None else sources
    out = {x: _bfs_morphisms(G, x, max_len, max_morphisms, True) for x in srcs}
    return WeylGroupoid(G, out, path_only=True)


def real_roots(G_or_W, **kw):
    W = G_or_W if isinstance(G_or_W, WeylGroupoid) else generate_groupoid(G_or_W, **kw)
    return W.real_roots(), W.positive_roots()


def check_axioms(G: SemiCartanGraph, W: WeylGroupoid | None = None) -> dict:
    """Report ``{name: (passed, witness)}`` for (CG1)-(CG4)."""
    report = {}
    try:
        G.validate()
        report["CG1"] = (True, None)
        report["CG2"] = (True, None)
    except InvalidCartanGraph as exc:
        name = "CG2" if "CG2" in str(exc) else "CG1"
        report[name] = (False, exc.witness)
        report.setdefault("CG1", (True, None))
        report.setdefault("CG2", (True, None))
    if W is None:
        W = generate_groupoid(G)
    R = W.real_roots()
    bad = [(x, a) for x in R for a in sorted(R[x]) if not (is_positive(a) or is_negative(a))]
    report["CG3"] = (not bad, bad[0] if bad else None)
    bad4 = None
    for m in W.morphisms():
        if all(is_positive(row) for row in zip(*m.matrix)) and not m.is_identity():
            bad4 = m
            break
    report["CG4"] = (bad4 is None, bad4)
    return report


def root_bijection_check(W: WeylGroupoid, x, i) -> bool:
    """``s_i^x`` maps ``R^x_+`` minus ``alpha_i`` bijectively onto ``R^y_+`` minus ``alpha_i``, y = r_i(x)."""
    G = W.graph
    y = G.r(x, i)
    simple = tuple(int(k == i) for k in range(G.theta))
    src = W.positive_roots(x) - {simple}
    dst = W.positive_roots(y) - {simple}
    image = {reflect_vector(G.cartan_row(x, i), i, a) for a in src}
    return len(image) == len(src) and image == dst


def length_and_N(W: WeylGroupoid, w: GroupoidMorphism) -> tuple[int, int]:
    """Word length and the number of positive roots at the source sent to negative roots.

    ``w`` maps the basis at ``w.source`` to the basis at ``w.target``;
    ``N(w) = #{a in R^{source+} : w a in -R^{target+}}``.
    """
    pos_src = W.positive_roots(w.source)
    neg_tgt = {neg(a) for a in W.positive_roots(w.target)}
    N = sum(1 for a in pos_src if w.apply(a) in neg_tgt)
    return len(w.word), N


def is_simply_connected(W: WeylGroupoid) -> bool:
    G = W.graph
    return all(len(W.hom(x, y)) <= 1 for x in W.sources() for y in G.vertices)


def covering(G: SemiCartanGraph, base=None, subgroup=(), W: WeylGroupoid | None = None):
    """Covering of ``G`` attached to a subgroup ``U`` of ``Aut(base)``.

    Vertices are cosets ``w U`` of morphisms out of ``base``; ``r_i`` acts by
    composing with ``s_i`` on the left.  ``subgroup`` lists automorphisms of
    ``base`` (matrices or morphisms); its closure is taken.  Returns
    ``(cover, projection)`` with ``projection`` mapping cover vertices to
    vertices of ``G``.
    """
    if base is None:
        base = G.vertices[0]
    if W is None or base not in W.sources():
        W = generate_groupoid(G, sources=[base])
    ident = identity(G.theta)
    U = {ident}
    gens = [g.matrix if isinstance(g, GroupoidMorphism) else _freeze(g) for g in subgroup]
    frontier = list(U)
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = mat_mul(u, g)
                if v not in U:
                    U.add(v)
                    nxt.append(v)
        frontier = nxt

    def shortlex(m):
        return (len(m.word), m.word)

    out = sorted(W.morphisms(base), key=shortlex)
    coset_of = {}
    cosets = []
    for m in out:
        if (m.target, m.matrix) in coset_of:
            continue
        members = frozenset(mat_mul(m.matrix, u) for u in U)
        cosets.append((m, members))
        for M in members:
            coset_of[m.target, M] = len(cosets) - 1
    names = [rep.word_name() for rep, _ in cosets]
    gcm = {names[k]: G.gcm[rep.target] for k, (rep, _) in enumerate(cosets)}
    refl = {}
    for k, (rep, _) in enumerate(cosets):
        y = rep.target
        for i in range(G.theta):
            M = _reflect_rows(rep.matrix, G.cartan_row(y, i), i)
            refl[names[k], i] = names[coset_of[G.r(y, i), M]]
    cover = SemiCartanGraph(G.theta, names, gcm, refl)
    proj = {names[k]: rep.target for k, (rep, _) in enumerate(cosets)}
    return cover, proj


def simply_connected_cover(G: SemiCartanGraph, base=None, W: WeylGroupoid | None = None):
    """``SC(G)``: vertices are the morphisms out of ``base``, named by shortest words."""
    return covering(G, base, (), W)


@dataclass
class RootOrbits:
    """Orbits of real roots under the path subgroupoid of a path simply connected graph.

    An orbit is identified by its representative at ``base``; ``transport[y]``
    is the unique path-subgroupoid morphism ``base -> y``.
    """
    graph: SemiCartanGraph
    base: Hashable
    transport: dict
    ids: tuple

    def at(self, orbit, y):
        return mat_vec(self.transport[y], orbit)

    def positive_at(self, x):
        return frozenset(o for o in self.ids if is_positive(self.at(o, x)))

    def pure_positive(self):
        out = set(self.ids)
        for x in self.graph.vertices:
            out &= self.positive_at(x)
        return frozenset(out)

    def __len__(self):
        return len(self.ids)


def orbits_delta(G: SemiCartanGraph, base=None, W: WeylGroupoid | None = None) -> RootOrbits:
    if base is None:
        base = G.vertices[0]
    if not G.is_connected():
        raise InvalidCartanGraph("semi Cartan graph is not connected")
    P = path_subgroupoid(G, sources=[base])
    transport = {}
    for m in P.morphisms(base):
        if m.target in transport:
            first = P.lookup(base, m.target, transport[m.target])
            raise NotPathSimplyConnected(
                f"two path morphisms {base!r} -> {m.target!r}", (first, m))
        transport[m.target] = m.matrix
    if W is None:
        W = generate_groupoid(G)
    R = W.real_roots()
    ids = tuple(sorted(R[base], key=lambda a: (not is_positive(a), a)))
    orbits = RootOrbits(G, base, transport, ids)
    for y in G.vertices:
        if {orbits.at(o, y) for o in ids} != set(R[y]):
            raise NotPathSimplyConnected(f"orbits do not meet R^{y!r} exactly once", y)
    return orbits


def build_rb(G: SemiCartanGraph, base=None, W: WeylGroupoid | None = None) -> ColoredGraph:
    """RB(G): loops removed, each ``i``-edge at ``z`` recolored by the orbit through ``+-alpha_i^z``.

    Colors are orbit representatives at ``base`` (root tuples).
    """
    orbits = orbits_delta(G, base, W)
    C = orbits.positive_at(orbits.base) - orbits.pure_positive()
    edges = []
    for z, y, i in G.edges():
        simple = tuple(int(k == i) for k in range(G.theta))
        hits = [o for o in C if orbits.at(o, z) in (simple, neg(simple))]
        if len(hits) != 1:
            raise NotPathSimplyConnected(f"edge {(z, y, i)!r} has {len(hits)} candidate colors", hits)
        edges.append((z, y, hits[0]))
    colors = sorted({c for _, _, c in edges}, key=lambda a: (sum(a), tuple(-x for x in a)))
    return ColoredGraph(G.vertices, edges, colors)


def coordinates(v, basis):
    """Exact coordinates of ``v`` in the span of ``basis`` (None if outside)."""
    rows = [list(map(Fraction, col)) for col in zip(*basis)]
    n = len(basis)
    aug = [r + [Fraction(x)] for r, x in zip(rows, v)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(aug)) if aug[k][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in aug[r:]):
        return None
    sol = [Fraction(0)] * n
    for k, c in enumerate(piv_cols):
        sol[c] = aug[k][-1]
    return tuple(sol)
