import json
from collections import deque
from importlib import resources
from math import comb

import pytest

from boomerang import cartan as C
from boomerang import ecgraph as E
from boomerang import fixtures as F
from boomerang import superalg as S
from boomerang.errors import IsomorphismFailed, SizeLimitExceeded

REFERENCE = json.loads(resources.files("boomerang.data").joinpath("gl32_reference.json").read_text())
SMALL_GL = [(m, n) for m in range(1, 5) for n in range(1, 5) if m + n <= 6]


def edge_set(edges):
    return {(frozenset((u, v)), c) for u, v, c in edges}


def bfs_map(A, a0, B, b0):
    """Vertex map A -> B sending a0 to b0 and preserving edge colors, or None."""
    phi = {a0: b0}
    queue = deque([a0])
    while queue:
        u = queue.popleft()
        for v, c in A.incident(u):
            w = B.neighbor(phi[u], c)
            if w is None:
                return None
            if v in phi:
                if phi[v] != w:
                    return None
                continue
            phi[v] = w
            queue.append(v)
    return phi if len(set(phi.values())) == len(phi) else None


# --- Young diagrams ------------------------------------------------------------

@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 8) for n in range(1, 8) if m + n <= 8])
def test_diagram_count_is_binomial(m, n):
    ds = S.young_diagrams(m, n)
    assert len(ds) == comb(m + n, m) == S.gl_vertex_count(m, n)
    assert ds[0] == () and ds[-1] == (n,) * m


def test_diagram_names():
    assert [S.diagram_name(p) for p in S.young_diagrams(2, 1)] == ["()", "(1)", "(1,1)"]


def test_gl_size_limit():
    with pytest.raises(SizeLimitExceeded):
        S.exchange_graph_gl(5, 4)
    with pytest.raises(ValueError):
        S.or_graph_gl(0, 3)


# --- gl(m|n) graphs -------------------------------------------------------------

def test_gl11_is_a_single_edge():
    OR = S.or_graph_gl(1, 1)
    assert OR.vertices == ("()", "(1)") and OR.edges == (("()", "(1)", "(1,1)"),)


def test_gl21_matches_fixture():
    G = S.exchange_graph_gl(2, 1)
    H = F.load_cartan("gl21")
    assert G.gcm == H.gcm and sorted(G.edges()) == sorted(H.edges())


def test_gl32_exchange_graph_matches_reference():
    G = S.exchange_graph_gl(3, 2)
    ours = edge_set((u, v, i + 1) for u, v, i in G.edges())
    assert ours == edge_set(REFERENCE["exchange"])


def test_gl32_or_graph_matches_reference():
    assert edge_set(S.or_graph_gl(3, 2).edges) == edge_set(REFERENCE["or"])


def test_box_colors_and_roots():
    assert S.gl_box_color(3, (1, 1)) == 3
    assert S.gl_box_color(3, (2, 3)) == 2
    assert S.gl_box_root(2, (1, 1)) == "eps2-delta1"


@pytest.mark.parametrize("m, n", SMALL_GL)
def test_gl_exchange_graph_is_a_finite_cartan_graph(m, n):
    G = S.exchange_graph_gl(m, n)
    W = C.generate_groupoid(G)
    assert all(ok for ok, _ in C.check_axioms(G, W).values())
    assert all(len(R) == comb(m + n, 2) for R in W.positive_roots().values())


@pytest.mark.parametrize("m, n", SMALL_GL)
def test_young_rule_agrees_with_generic_odd_reflections(m, n):
    simple, roots, odd, names = S.gl_root_data(m, n)
    org = S.odd_reflection_graph(simple, roots, odd)
    generic = org.colored_graph([str(k) for k in range(len(org.borels))], names)
    young = S.or_graph_gl(m, n)
    relabeled = E.ColoredGraph(young.vertices,
                               [(u, v, S.gl_box_root(m, tuple(map(int, c[1:-1].split(",")))))
                                for u, v, c in young.edges])
    phi = bfs_map(relabeled, "()", generic, "0")
    assert phi is not None and len(phi) == len(generic.vertices)
    assert edge_set((phi[u], phi[v], c) for u, v, c in relabeled.edges) == edge_set(generic.edges)


@pytest.mark.parametrize("m, n", SMALL_GL)
def test_or_equals_rb_for_gl(m, n):
    bij = S.verify_or_equals_rb("gl", m, n)
    assert len(bij) == m * n
    assert E.is_rainbow_boomerang(S.or_graph_gl(m, n))


# --- D(2,1;alpha) ---------------------------------------------------------------

def test_d21_positive_roots_match_groupoid():
    G, expected = S.d21alpha()
    W = C.generate_groupoid(G)
    assert W.positive_roots() == expected["positive_roots"]
    orbits = C.orbits_delta(G, "b1", W)
    assert len(orbits) == expected["delta_size"]
    assert len(orbits.pure_positive()) == expected["pure_positive_size"]


def test_d21_odd_reflections_reproduce_positive_systems():
    G, expected = S.d21alpha()
    graph, pos = S.d21_or_graph(G)
    assert pos == expected["positive_roots"]
    got = {frozenset((u, v)): c for u, v, c in graph.edges}
    assert got == {frozenset(k): c for k, c in expected["or_colors"].items()}


def test_d21_or_equals_rb():
    bij = S.verify_or_equals_rb("d21a")
    assert bij == {"delta-eps1-eps2": (0, 1, 0),
                   "delta+eps1-eps2": (1, 1, 0),
                   "delta-eps1+eps2": (0, 1, 1)}


def test_d21_fixture_matches_builtin():
    G, _ = S.d21alpha()
    H = F.load_cartan("d21a")
    assert G.gcm == H.gcm and sorted(G.edges()) == sorted(H.edges())


def test_format_weight():
    assert S.format_weight((1, -1, 1), S.D21_BASIS) == "delta-eps1+eps2"


# --- color matching -------------------------------------------------------------

def test_match_colorings_failures():
    a = E.ColoredGraph("xyz", [("x", "y", 1), ("y", "z", 2)])
    c = E.ColoredGraph("xyw", [("x", "y", 1), ("y", "w", 2)])
    with pytest.raises(IsomorphismFailed):
        S.match_colorings(a, c)
    d = E.ColoredGraph("xyz", [("x", "y", 1), ("x", "z", 2)])
    with pytest.raises(IsomorphismFailed):
        S.match_colorings(a, d)
    sq1 = E.cycle("abab")
    sq2 = E.ColoredGraph(range(4), [(0, 1, "p"), (1, 2, "q"), (2, 3, "r"), (3, 0, "q")])
    with pytest.raises(IsomorphismFailed):
        S.match_colorings(sq1, sq2)
