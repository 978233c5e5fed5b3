import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from boomerang import cartan as C
from boomerang import ecgraph as E
from boomerang import nichols as Nc
from boomerang.errors import NotArithmetic, OrderOne

FIXTURES = Nc.standard_fixtures()
GRAPHS = {name: Nc.build_G(q) for name, q in FIXTURES.items()}


# --- bicharacters and Cartan entries ---------------------------------------------

def test_bicharacter_evaluation():
    q = Nc.cartan_a2(3)
    assert q.exponent((1, 0), (0, 1)) == 2
    assert q((1, 1), (1, 1)).k == (1 + 2 + 0 + 1) % 3
    assert q.q(0, 1).k == 2


def test_bicharacter_json_round_trip():
    q = Nc.super_type(4)
    assert Nc.Bicharacter.from_json(q.to_json()) == q
    with pytest.raises(ValueError):
        Nc.Bicharacter.from_json({"theta": 2, "N": 3, "E": [[1, 0]]})


def test_cartan_matrices_of_fixtures():
    assert Nc.cartan_matrix_of(Nc.cartan_a2(3)) == ((2, -1), (-1, 2))
    assert Nc.cartan_matrix_of(Nc.super_type(4)) == ((2, -1), (-1, 2))
    assert Nc.cartan_matrix_of(Nc.Bicharacter(5, ((1, 0), (0, 1)))) == ((2, 0), (0, 2))


def test_cartan_entry_uses_order_of_q_ii():
    # q_11 = zeta_4: a_12 = 0 when q_12 q_21 = 1, and -3 when q_12 q_21 = zeta_4
    assert Nc.cartan_entry(Nc.Bicharacter(4, ((1, 0), (0, 1))), 0, 1) == 0
    assert Nc.cartan_entry(Nc.Bicharacter(4, ((1, 1), (0, 1))), 0, 1) == -3


def test_not_arithmetic():
    with pytest.raises(NotArithmetic):
        Nc.cartan_entry(Nc.Bicharacter(3, ((0, 1), (0, 1))), 0, 1)


def rank_two_bichars():
    @st.composite
    def build(draw):
        N = draw(st.integers(2, 8))
        E = tuple(tuple(draw(st.integers(0, N - 1)) for _ in range(2)) for _ in range(2))
        return Nc.Bicharacter(N, E)
    return build()


@settings(max_examples=150, deadline=None)
@given(rank_two_bichars(), st.integers(0, 1))
def test_reflection_is_an_involution(q, i):
    try:
        p = Nc.reflect_bicharacter(q, i)
        back = Nc.reflect_bicharacter(p, i)
    except NotArithmetic:
        return
    assert Nc.cartan_matrix_of(p)[i] == Nc.cartan_matrix_of(q)[i]
    assert back == q


# --- the Cartan graph G[qbar] --------------------------------------------------------

@pytest.mark.parametrize("name, base_size, cover_size", [
    ("rank1_m3", 1, 2), ("a2_zeta3", 2, 6), ("super_N2", 2, 6), ("super_N4", 6, 6)])
def test_graph_sizes(name, base_size, cover_size):
    G = GRAPHS[name]
    assert len(G.base_graph.vertices) == base_size
    assert len(G.graph.vertices) == cover_size
    assert C.is_simply_connected(G.groupoid)


def test_cover_projects_onto_bicharacters():
    G = GRAPHS["super_N4"]
    assert set(G.bichar.values()) == set(G.base_graph.vertices)
    assert G.bichar[G.base] == FIXTURES["super_N4"]


def test_roots_with_orders():
    assert Nc.positive_roots_with_orders(GRAPHS["super_N4"]) == [((0, 1), 2), ((1, 0), 2), ((1, 1), 4)]
    assert Nc.positive_roots_with_orders(GRAPHS["a2_zeta3"]) == [((0, 1), 3), ((1, 0), 3), ((1, 1), 3)]


def test_order_one_is_rejected():
    with pytest.raises(OrderOne):
        Nc.positive_roots_with_orders(Nc.build_G(Nc.rank_one(1)))


def test_weyl_vectors():
    assert Nc.weyl_vector(GRAPHS["rank1_m3"]) == (-2,)
    assert Nc.weyl_vector(GRAPHS["a2_zeta3"]) == (-4, -4)
    assert Nc.weyl_vector(GRAPHS["super_N2"]) == (-2, -2)


def test_super_type_needs_even_modulus():
    with pytest.raises(ValueError):
        Nc.super_type(3)


# --- D_lambda ------------------------------------------------------------------------

def test_rank_one_d_lambda_at_third_roots():
    q = Nc.rank_one(3)
    assert Nc.d_lambda(q, [(1,)], (1,)) == {(1,)}
    assert Nc.d_lambda(q, [(1,)], (2,)) == frozenset()
    assert Nc.d_lambda(q, [(1,)], (0,)) == frozenset()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fast_path_agrees_with_oracle(name):
    G = GRAPHS[name]
    q = FIXTURES[name]
    roots = [b for b, _ in Nc.positive_roots_with_orders(G)]
    for lam in Nc.lambda_box(q.theta, 3):
        for a in roots:
            assert Nc.in_d_lambda_fast(q, a, lam) == Nc.in_d_lambda_oracle(q, a, lam), (a, lam)
        assert Nc.d_lambda(q, roots, lam, "fast") == Nc.d_lambda(q, roots, lam, "oracle")


@settings(max_examples=200, deadline=None)
@given(rank_two_bichars(), st.tuples(st.integers(0, 3), st.integers(0, 3)),
       st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_fast_path_agrees_with_oracle_on_random_data(q, alpha, lam):
    if alpha == (0, 0) or q(alpha, alpha).order == 1:
        return
    assert Nc.in_d_lambda_fast(q, alpha, lam) == Nc.in_d_lambda_oracle(q, alpha, lam)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_shifted_dichotomy(name):
    q = FIXTURES[name]
    for lam in Nc.lambda_box(q.theta, 3):
        for a, _ in Nc.positive_roots_with_orders(GRAPHS[name]):
            assert Nc.dichotomy_holds(q, a, lam)


@pytest.mark.xfail(strict=True, reason="the two products taken at the same weight disagree once ord >= 3")
def test_unshifted_dichotomy_for_third_roots():
    assert Nc.dichotomy_holds(Nc.rank_one(3), (1,), (1,), shifted=False)


def test_unshifted_dichotomy_holds_for_order_two():
    q = Nc.rank_one(2)
    assert all(Nc.dichotomy_holds(q, (1,), (l,), shifted=False) for l in range(-4, 5))


# --- RB[qbar, lambda] and walks ------------------------------------------------------

def test_rb_of_a2_is_a_hexagon():
    rb = Nc.rb_qbar(GRAPHS["a2_zeta3"])
    assert len(rb.vertices) == 6 and len(rb.colors) == 3
    assert E.is_rainbow_boomerang(rb)


def test_quotient_by_d_lambda():
    G = GRAPHS["a2_zeta3"]
    rb = Nc.rb_qbar(G)
    g, proj, D = Nc.rb_lambda(G, (0, 0), rb)
    assert not D and len(g.vertices) == 6
    for lam in Nc.lambda_box(2, 2):
        g, proj, D = Nc.rb_lambda(G, lam, rb)
        # contracting k of the three colors of a hexagon leaves 6, 4, 2 or 1 vertices
        assert len(g.vertices) == {0: 6, 1: 4, 2: 2, 3: 1}[len(D)]
        assert set(g.colors) == set(rb.colors) - D
        assert E.is_rainbow_boomerang(g)


@pytest.mark.parametrize("name", ["a2_zeta3", "super_N2", "super_N4", "rank1_m4"])
def test_walk_verdicts_agree(name):
    G = GRAPHS[name]
    rb = Nc.rb_qbar(G)
    box = Nc.lambda_box(G.graph.theta, 2)
    for lam in random.Random(7).sample(box, min(6, len(box))):
        g, _, _ = Nc.rb_lambda(G, lam, rb)
        dist = E.distances(g)
        for w in Nc.enumerate_walks(g, 4):
            assert Nc.verma_walk_verdict(G, lam, w, g, dist).consistent


def test_walk_outside_quotient_rejected():
    G = GRAPHS["a2_zeta3"]
    g, _, _ = Nc.rb_lambda(G, (0, 0))
    with pytest.raises(ValueError):
        Nc.verma_walk_verdict(G, (0, 0), E.Walk(("nowhere",)), g)


def test_enumerate_walks_counts():
    g = E.cycle("abab")
    walks = list(Nc.enumerate_walks(g, 2))
    assert len(walks) == 4 * (1 + 2 + 4)


# --- characters ------------------------------------------------------------------------

def test_laurent_arithmetic():
    a = Nc.LaurentPoly({(0,): 1, (-2,): 1})
    b = a * a
    assert b.coefficient((-2,)) == 2 and b.total() == 4 and len(b) == 3
    assert Nc.LaurentPoly({(1,): 0}) == Nc.LaurentPoly()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_character_dimension_is_product_of_orders(name):
    roots = Nc.positive_roots_with_orders(GRAPHS[name])
    ch = Nc.character_uqminus(roots, FIXTURES[name].theta)
    expected = 1
    for _, o in roots:
        expected *= o
    assert ch.total() == expected
    assert ch.coefficient((0,) * FIXTURES[name].theta) == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_verma_characters_agree_across_vertices(name):
    G = GRAPHS[name]
    theta = G.graph.theta
    for lam in [(0,) * theta, (1,) * theta, tuple(range(-1, theta - 1))]:
        chars = {Nc.verma_character(G, v, lam) for v in G.graph.vertices}
        assert len(chars) == 1


def test_highest_weight_at_base():
    G = GRAPHS["rank1_m3"]
    assert Nc.highest_weight(G, G.base, (1,)) == (2 * 1 + 2,)
    top = Nc.verma_character(G, G.base, (0,))
    assert sorted(top.terms) == [(-2,), (0,), (2,)]


def test_lambda_box():
    box = Nc.lambda_box(2, 1)
    assert len(box) == 9 and (0, 0) in box and set(itertools.chain(*box)) == {-1, 0, 1}
