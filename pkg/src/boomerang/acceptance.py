"""The acceptance suite: thirteen end-to-end checks, each with a runtime bound.

Every check returns a :class:`CriterionResult`.  ``run_suite`` drives them all
and is what ``boomerang suite`` and ``tests/test_acceptance.py`` call.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import cartan as K
from . import ecgraph as E
from . import fixtures
from .cyclo import RootOfUnity, order_of, quantum_number, embed
from .frieze import cartan_graph_from_quiddity, frieze_from_cartan_graph, verify_conway_coxeter
from .nichols import (build_G, cartan_a2, character_uqminus, dichotomy_holds, enumerate_walks,
                      highest_weight, in_d_lambda_fast, in_d_lambda_oracle, lambda_box,
                      positive_roots_with_orders, rank_one, rb_lambda, rb_qbar, super_type,
                      verma_character, verma_walk_verdict)
from .superalg import (d21_or_graph, d21alpha, exchange_graph_gl, gl_vertex_count, or_graph_gl,
                       verify_or_equals_rb)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    bound: float
    seconds: float = 0.0
    details: list = field(default_factory=list)

    @property
    def ok(self):
        return self.passed and self.seconds < self.bound

    def line(self, timing=True):
        status = "PASS" if self.ok else "FAIL"
        t = f" [{self.seconds:.2f}s < {self.bound:g}s]" if timing else ""
        extra = "" if self.passed else f" :: {self.details[0]}" if self.details else ""
        if self.passed and self.seconds >= self.bound:
            extra = " :: runtime bound exceeded"
        return f"{status} criterion {self.number:2d}: {self.title}{t}{extra}"

    def to_json(self, timing=False):
        out = {"criterion": self.number, "title": self.title, "passed": self.ok,
               "details": [str(d) for d in self.details[:5]]}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


class _Check:
    """Collects failures; a criterion passes when none are recorded."""

    def __init__(self):
        self.failures = []

    def __call__(self, cond, what):
        if not cond:
            self.failures.append(what)
        return cond


def _proper_cycle_colorings(n, alphabet):
    for cols in itertools.product(range(alphabet), repeat=n):
        if all(cols[i] != cols[(i + 1) % n] for i in range(n)):
            yield cols


def _restricted_growth(n):
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))
    yield from rec([0], 0)


def _cycle_law(cols):
    """Even cycle of length 2m: pairwise distinct first half, repeated antipodally (m >= 2)."""
    n = len(cols)
    if n % 2 or n < 4:
        return False
    m = n // 2
    return len(set(cols[:m])) == m and all(cols[i] == cols[i + m] for i in range(m))


# ----------------------------------------------------------------------------

def criterion_1(**_):
    chk = _Check()
    for cols in _proper_cycle_colorings(4, 4):
        g = E.cycle(cols)
        law = cols[0] == cols[2] and cols[1] == cols[3] and cols[0] != cols[1]
        chk(bool(E.is_rainbow_boomerang(g)) == law, ("C4", cols))
    for name, expect in (("square_rb", True), ("square_distinct", False)):
        chk(bool(E.is_rainbow_boomerang(fixtures.load_graph(name))) == expect, name)
    return chk


def criterion_2(fast=False, **_):
    chk = _Check()
    for n in (4, 6, 8):
        for cols in _restricted_growth(n):
            if any(cols[i] == cols[(i + 1) % n] for i in range(n)):
                continue
            g = E.cycle(cols)
            verdict = bool(E.is_rainbow_boomerang(g))
            chk(verdict == _cycle_law(cols), ("law", cols))
            if not fast:
                chk(E.rb_oracle(g) == verdict, ("oracle", cols))
    return chk


def random_q4_subgraphs(count, seed):
    rng = random.Random(seed)
    Q = E.hypercube(4)
    out = []
    while len(out) < count:
        keep = [e for e in Q.edges if rng.random() < rng.choice((0.35, 0.55, 0.75, 0.9))]
        if not keep:
            continue
        start = keep[0][0]
        g = E.ColoredGraph(Q.vertices, keep)
        comp = next(c for c in g.components() if start in c)
        sub = g.subgraph(comp)
        if len(sub.edges):
            out.append(sub)
    return out


def criterion_3(seed=0, fast=False, **_):
    chk = _Check()
    for n in range(1, 5):
        Q = E.hypercube(n)
        chk(bool(E.is_rainbow_boomerang(Q)), ("Q", n))
        if not fast:
            chk(E.rb_oracle(Q), ("oracle Q", n))
    for k, sub in enumerate(random_q4_subgraphs(200, seed)):
        fastv = bool(E.is_rainbow_boomerang(sub))
        chk(E.check_subcube_connectivity(sub, 4) == fastv, ("subcube", k))
        if not fast:
            chk(E.rb_oracle(sub) == fastv, ("oracle", k))
    return chk


def rb_fixtures():
    """Named RB graphs used for the quotient-closure sweep."""
    out = {f"Q{n}": E.hypercube(n) for n in (1, 2, 3, 4)}
    out["C4"] = E.cycle("abab")
    out["C6"] = E.cycle("abcabc")
    out["C8"] = E.cycle("abcdabcd")
    out["tree"] = E.ColoredGraph(range(5), [(0, 1, "a"), (1, 2, "b"), (1, 3, "c"), (3, 4, "d")])
    for m, n in ((2, 1), (2, 2), (3, 2), (3, 3)):
        out[f"OR_gl({m}|{n})"] = or_graph_gl(m, n)
    out["RB_cycle10"] = K.build_rb(fixtures.load_cartan("cycle10"))
    out["RB_d21a"] = K.build_rb(fixtures.load_cartan("d21a"))
    return out


def criterion_4(**_):
    chk = _Check()
    fx = rb_fixtures()
    chk(len(fx) >= 10, "fewer than 10 fixtures")
    for name, g in fx.items():
        chk(bool(E.is_rainbow_boomerang(g)), (name, "input"))
        for r in range(len(g.colors) + 1):
            for D in itertools.combinations(g.colors, r):
                q, _ = E.quotient(g, D)
                chk(bool(E.is_rainbow_boomerang(q)), (name, D))
    return chk


def criterion_5(**_):
    chk = _Check()
    for m in range(1, 4):
        for n in range(m, 5):
            if m * n > E.SEARCH_MAX_EDGES:
                continue
            verts, edges = E.complete_bipartite(m, n)
            found = E.search_rb_coloring(verts, edges)
            expect = m == 1 or (m, n) == (2, 2)
            chk((found is not None) == expect, ("K", m, n))
            if found is not None:
                chk(bool(E.is_rainbow_boomerang(found)), ("witness", m, n))
    return chk


def criterion_6(**_):
    chk = _Check()
    data = fixtures.load("cycle10_frieze")
    G = cartan_graph_from_quiddity(data["quiddity"])
    reference = fixtures.load_cartan("cycle10")
    chk(all(G.gcm[x] == reference.gcm[x] for x in reference.vertices), "matrices differ from reference")
    chk(sorted(G.edges()) == sorted(reference.edges()), "edges differ from reference")
    W = K.generate_groupoid(G)
    chk(all(ok for ok, _ in K.check_axioms(G, W).values()), "axioms")
    chk(W.positive_roots("1") == {tuple(r) for r in data["base_positive_roots"]}, "R^{x+}")
    p = frieze_from_cartan_graph(G, W=W)
    chk([list(r) for r in p.rows] == data["rows"], "frieze rows")
    chk(verify_conway_coxeter(p), "diamond rule")
    chk(len(W) == 100, ("morphisms", len(W)))
    chk(all(a == b for a, b in (K.length_and_N(W, m) for m in W.morphisms())), "l = N")
    return chk


def _edge_key(u, v, c):
    return (frozenset((u, v)), c)


def criterion_7(**_):
    chk = _Check()
    ref = fixtures.load("gl32_reference")
    G = exchange_graph_gl(3, 2)
    chk(len(G.vertices) == 10, "vertex count")
    got = {_edge_key(x, y, i + 1) for x, y, i in G.edges()}
    chk(got == {_edge_key(*e) for e in ref["exchange"]}, "exchange graph reference")
    OR = or_graph_gl(3, 2)
    chk({_edge_key(*e) for e in OR.edges} == {_edge_key(*e) for e in ref["or"]}, "OR graph reference")
    chk(bool(E.is_rainbow_boomerang(OR)), "OR(gl(3|2)) RB")
    chk(len(verify_or_equals_rb("gl", 3, 2)) == 6, "OR = RB")
    for m in range(1, 6):
        for n in range(1, 7 - m):
            G = exchange_graph_gl(m, n)
            chk(len(G.vertices) == gl_vertex_count(m, n), ("count", m, n))
            chk(bool(E.is_rainbow_boomerang(or_graph_gl(m, n))), ("RB", m, n))
            verify_or_equals_rb("gl", m, n)
            W = K.generate_groupoid(G)
            chk(all(a == b for a, b in (K.length_and_N(W, w) for w in W.morphisms())), ("l=N", m, n))
    return chk


def criterion_8(**_):
    chk = _Check()
    G = fixtures.load_cartan("d21a")
    G2, expected = d21alpha()
    chk(all(G.gcm[x] == G2.gcm[x] for x in G.vertices) and sorted(G.edges()) == sorted(G2.edges()),
        "fixture vs constructor")
    data = fixtures.load("d21a_roots")
    W = K.generate_groupoid(G)
    for x, roots in data["positive_roots"].items():
        chk(W.positive_roots(x) == {tuple(r) for r in roots}, ("roots", x))
    chk(all(ok for ok, _ in K.check_axioms(G, W).values()), "axioms")
    orb = K.orbits_delta(G, W=W)
    chk(len(orb) == data["delta_size"], ("|Delta|", len(orb)))
    chk(len(orb.pure_positive()) == data["pure_positive_size"], "|Delta pure+|")
    rb = K.build_rb(G, W=W)
    chk(len(rb.edges) == 3 and len(rb.colors) == 3 and len(rb.vertices) == 4
        and E.is_rainbow_boomerang(rb), "RB tree")
    _, pos = d21_or_graph(G)
    chk(all(pos[x] == expected["positive_roots"][x] for x in pos), "odd reflections")
    return chk


def criterion_9(**_):
    chk = _Check()
    G = fixtures.load_cartan("a2_single")
    W = K.generate_groupoid(G)
    chk(len(W.hom("x", "x")) == 6, "6 automorphisms")
    sc, proj = K.simply_connected_cover(G, "x", W)
    ex = sc.exchange_graph()
    chk(len(sc.vertices) == 6 and len(ex.edges) == 6 and sc.is_loopless()
        and all(len(ex.incident(v)) == 2 for v in ex.vertices) and ex.is_connected(), "hexagon")
    s1 = next(m for m in W.morphisms("x") if m.word == (0,))
    cov, _ = K.covering(G, "x", [s1], W)
    ref = fixtures.load_cartan("gl21")
    # the cover's vertices are cosets; match them to the reference path by walking colors from the base
    walk = [cov.vertices[0]]
    for i in (1, 0):
        walk.append(cov.r(walk[-1], i))
    chk(len(cov.vertices) == 3 and len(set(walk)) == 3, "3 vertices")
    rwalk = ["()"]
    for i in (1, 0):
        rwalk.append(ref.r(rwalk[-1], i))
    chk(len(set(rwalk)) == 3, "reference path")
    mapping = dict(zip(walk, rwalk))
    chk(all(mapping[cov.r(v, i)] == ref.r(mapping[v], i) for v in cov.vertices for i in range(2)),
        "cover differs from gl(2|1) graph")
    chk(all(cov.gcm[v] == ref.gcm[mapping[v]] for v in cov.vertices), "labels")
    gl21 = exchange_graph_gl(2, 1)
    chk(all(gl21.r(v, i) == ref.r(v, i) for v in ref.vertices for i in range(2)), "gl(2|1) rule")
    return chk


def criterion_10(**_):
    chk = _Check()
    for N in range(1, 25):
        for k in range(N):
            q = RootOfUnity(N, k)
            o = order_of(q)
            for n in range(0, 13):
                lhs = quantum_number(n, q)
                rhs = embed(q ** (n - 1)) * quantum_number(n, q.inverse()) if n else lhs
                chk(lhs == rhs, ("identity", N, k, n))
                if 1 <= n < o:
                    chk(not lhs.is_zero(), ("nonzero", N, k, n))
    return chk


def dlambda_fixtures():
    out = [rank_one(m) for m in range(2, 13)]
    out += [cartan_a2(N) for N in range(2, 13)]
    out += [super_type(N) for N in (2, 4, 6, 8, 10, 12)]
    return out


def criterion_11(fast=False, **_):
    chk = _Check()
    for q in dlambda_fixtures():
        if fast and q.N > 6:
            continue
        G = build_G(q)
        roots = positive_roots_with_orders(G)
        for lam in lambda_box(q.theta):
            for beta, _ in roots:
                f = in_d_lambda_fast(q, beta, lam)
                chk(f == in_d_lambda_oracle(q, beta, lam), ("fast/oracle", q, beta, lam))
                chk(dichotomy_holds(q, beta, lam), ("dichotomy", q, beta, lam))
    return chk


def verma_fixtures():
    out = {f"rank1_m{m}": rank_one(m) for m in range(2, 7)}
    out["a2_zeta3"] = cartan_a2(3)
    out["super_N2"] = super_type(2)
    out["super_N4"] = super_type(4)
    return out


def criterion_12(**_):
    chk = _Check()
    for name, q in verma_fixtures().items():
        G = build_G(q)
        rb = rb_qbar(G)
        for lam in lambda_box(q.theta):
            g, _, _ = rb_lambda(G, lam, rb)
            chk(bool(E.is_rainbow_boomerang(g)), (name, lam, "quotient RB"))
            dist = E.distances(g)
            for w in enumerate_walks(g, 6):
                v = verma_walk_verdict(G, lam, w, g, dist)
                chk(v.consistent, (name, lam, w))
    return chk


def criterion_13(**_):
    chk = _Check()
    for name, q in verma_fixtures().items():
        G = build_G(q)
        roots = positive_roots_with_orders(G)
        total = 1
        for _, o in roots:
            total *= o
        chk(character_uqminus(roots, q.theta).total() == total, (name, "term count"))
        for lam in lambda_box(q.theta):
            chars = {v: verma_character(G, v, lam) for v in G.graph.vertices}
            ref = chars[G.base]
            chk(all(c == ref for c in chars.values()), (name, lam, "invariance"))
            chk(all(ref.coefficient(highest_weight(G, v, lam)) == 1 for v in G.graph.vertices),
                (name, lam, "highest weight"))
    return chk


CRITERIA = [
    (1, "square characterization", criterion_1, 1.0),
    (2, "cycle law on C4, C6, C8", criterion_2, 10.0),
    (3, "hypercubes and random Q4 subgraphs", criterion_3, 60.0),
    (4, "quotient closure", criterion_4, 30.0),
    (5, "complete bipartite colorings", criterion_5, 60.0),
    (6, "rank-two frieze of a ten-cycle", criterion_6, 5.0),
    (7, "gl(m|n) exchange and odd reflection graphs", criterion_7, 60.0),
    (8, "D(2,1;alpha)", criterion_8, 5.0),
    (9, "A2 groupoid, hexagon cover and 3-vertex cover", criterion_9, 5.0),
    (10, "cyclotomic identities", criterion_10, 10.0),
    (11, "D_lambda fast path versus oracle", criterion_11, 60.0),
    (12, "odd Verma verdicts", criterion_12, 120.0),
    (13, "character invariance", criterion_13, 30.0),
]


def run_criterion(number, seed=0, fast=False) -> CriterionResult:
    _, title, fn, bound = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        chk = fn(seed=seed, fast=fast)
        failures = chk.failures
    except Exception as exc:  # a crash is a failed criterion, reported with its message
        failures = [f"{type(exc).__name__}: {exc}"]
    seconds = time.perf_counter() - t0
    return CriterionResult(number, title, not failures, bound, seconds, failures)


def run_suite(seed=0, fast=False, only=None):
    return [run_criterion(n, seed, fast) for n, *_ in CRITERIA if only is None or n in only]
