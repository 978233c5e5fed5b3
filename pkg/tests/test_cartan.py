from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from boomerang import cartan as C
from boomerang import ecgraph as E
from boomerang import fixtures as F
from boomerang.errors import BudgetExceeded, InvalidCartanGraph, NotPathSimplyConnected

FINITE = ["a2_single", "four_cycle_b2", "cycle10", "d21a", "gl21"]


def single(gcm):
    return C.SemiCartanGraph(len(gcm), ["x"], {"x": gcm}, {})


# --- construction and validation ---------------------------------------------

@pytest.mark.parametrize("bad", [
    [[2, 1], [-1, 2]],    # positive off-diagonal
    [[2, 0], [-1, 2]],    # zero pattern not symmetric
    [[1, -1], [-1, 2]],   # diagonal not 2
])
def test_check_gcm_rejects(bad):
    with pytest.raises(InvalidCartanGraph):
        C.check_gcm(bad)


def test_row_mismatch_across_edge_rejected():
    gcm = {"x": [[2, -1], [-1, 2]], "y": [[2, -2], [-1, 2]]}
    with pytest.raises(InvalidCartanGraph) as info:
        C.SemiCartanGraph.from_edges(2, gcm, [("x", "y", 0)])
    assert info.value.witness == ("x", "y", 0)


def test_two_edges_of_one_color_rejected():
    gcm = {v: [[2, -1], [-1, 2]] for v in "xyz"}
    with pytest.raises(InvalidCartanGraph):
        C.SemiCartanGraph.from_edges(2, gcm, [("x", "y", 0), ("x", "z", 0)])


def test_axioms_hold_on_fixtures():
    for name in FINITE:
        report = C.check_axioms(F.load_cartan(name))
        assert all(ok for ok, _ in report.values()), (name, report)


def test_axiom_report_for_broken_involution():
    G = C.SemiCartanGraph(2, ["x", "y"], {"x": [[2, -1], [-1, 2]], "y": [[2, -1], [-1, 2]]},
                          {("x", 0): "y"}, validate=False)
    report = C.check_axioms(G)
    assert report["CG1"] == (False, ("x", 0))
    assert report["CG4"][0] is False  # s1 s1 is a nontrivial map x -> y with positive image


# --- groupoid generation -----------------------------------------------------

def test_rank_two_weyl_groups():
    assert len(C.generate_groupoid(single([[2, -1], [-1, 2]]))) == 6
    assert len(C.generate_groupoid(single([[2, -1], [-2, 2]]))) == 8
    assert len(C.generate_groupoid(single([[2, -1], [-3, 2]]))) == 12
    assert len(C.generate_groupoid(single([[2, 0], [0, 2]]))) == 4


def test_affine_type_exhausts_budget():
    with pytest.raises(BudgetExceeded):
        C.generate_groupoid(single([[2, -2], [-2, 2]]), max_len=20)


def test_path_subgroupoid_of_single_vertex_is_trivial():
    P = C.path_subgroupoid(single([[2, -1], [-1, 2]]))
    assert len(P) == 1 and P.morphisms()[0].is_identity()


def test_words_compose_right_to_left():
    G = single([[2, -1], [-1, 2]])
    W = C.generate_groupoid(G)
    s1 = C.simple_reflection_matrix(G, "x", 0)
    s2 = C.simple_reflection_matrix(G, "x", 1)
    m = next(m for m in W.morphisms("x") if m.word == (0, 1))
    assert m.word_name() == "s2s1"
    assert m.matrix == C.mat_mul(s2, s1)


def test_real_roots_of_a2():
    R, Rplus = C.real_roots(single([[2, -1], [-1, 2]]))
    assert Rplus["x"] == {(1, 0), (0, 1), (1, 1)}
    assert len(R["x"]) == 6


@pytest.mark.parametrize("name", FINITE)
def test_roots_are_positive_or_negative_and_symmetric(name):
    W = C.generate_groupoid(F.load_cartan(name))
    for x, R in W.real_roots().items():
        assert all(C.is_positive(a) or C.is_negative(a) for a in R)
        assert {C.neg(a) for a in R} == R


@pytest.mark.parametrize("name", FINITE)
def test_simple_reflections_permute_roots(name):
    G = F.load_cartan(name)
    W = C.generate_groupoid(G)
    for x in G.vertices:
        for i in range(G.theta):
            assert C.root_bijection_check(W, x, i)


@pytest.mark.parametrize("name", FINITE)
def test_length_equals_inversion_count(name):
    G = F.load_cartan(name)
    W = C.generate_groupoid(G)
    for m in W.morphisms():
        length, n_inv = C.length_and_N(W, m)
        assert length == n_inv, m.word_name()


def test_longest_element_of_a2():
    W = C.generate_groupoid(single([[2, -1], [-1, 2]]))
    longest = max(W.morphisms("x"), key=lambda m: len(m.word))
    assert C.length_and_N(W, longest) == (3, 3)


# --- coverings ---------------------------------------------------------------

def test_simply_connected_cover_of_a2():
    G = single([[2, -1], [-1, 2]])
    SC, proj = C.simply_connected_cover(G)
    assert sorted(SC.vertices) == sorted(["id", "s1", "s2", "s2s1", "s1s2", "s1s2s1"])
    assert set(proj.values()) == {"x"}
    assert C.is_simply_connected(C.generate_groupoid(SC))
    rb = C.build_rb(SC)
    assert len(rb.vertices) == 6 and len(rb.colors) == 3
    assert E.is_rainbow_boomerang(rb)


def test_cover_by_full_automorphism_group_is_the_graph():
    G = single([[2, -1], [-1, 2]])
    W = C.generate_groupoid(G)
    cover, _ = C.covering(G, "x", W.hom("x", "x"), W)
    assert len(cover.vertices) == 1


def test_cycle10_is_simply_connected_with_pentagon_roots():
    G = F.load_cartan("cycle10")
    W = C.generate_groupoid(G)
    assert C.is_simply_connected(W)
    assert all(len(R) == 5 for R in W.positive_roots().values())


# --- root orbits and RB(G) ----------------------------------------------------

def test_rb_of_cycle10_is_a_ten_cycle_with_five_colors():
    rb = C.build_rb(F.load_cartan("cycle10"))
    assert len(rb.vertices) == 10 and len(rb.edges) == 10 and len(rb.colors) == 5
    assert E.is_rainbow_boomerang(rb)
    assert rb.colors[0] == (1, 0) and rb.colors[1] == (0, 1)


def test_pure_positive_orbits_are_not_colors():
    orbits = C.orbits_delta(F.load_cartan("d21a"))
    assert len(orbits) == 14
    assert orbits.pure_positive()
    rb = C.build_rb(F.load_cartan("d21a"))
    assert not set(rb.colors) & orbits.pure_positive()


def test_not_path_simply_connected_raises_with_witness():
    with pytest.raises(NotPathSimplyConnected) as info:
        C.build_rb(F.load_cartan("four_cycle_b2"))
    first, second = info.value.witness
    assert first.target == second.target and first.matrix != second.matrix


def test_single_vertex_rb_is_a_point():
    rb = C.build_rb(single([[2, -1], [-1, 2]]))
    assert len(rb.vertices) == 1 and not rb.edges


@pytest.mark.parametrize("name", ["cycle10", "d21a", "gl21"])
def test_rb_graph_is_rainbow_boomerang(name):
    assert E.is_rainbow_boomerang(C.build_rb(F.load_cartan(name)))


# --- linear algebra helpers ---------------------------------------------------

def test_coordinates():
    assert C.coordinates((3, 5), [(1, 0), (1, 1)]) == (Fraction(-2), Fraction(5))
    assert C.coordinates((1, 1, 1), [(1, 0, 0), (0, 1, 0)]) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([[[2, -1], [-1, 2]], [[2, -1], [-2, 2]], [[2, -3], [-1, 2]]]),
       st.integers(0, 1), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_simple_reflection_is_an_involution(gcm, i, v):
    G = single(gcm)
    s = C.simple_reflection_matrix(G, "x", i)
    assert C.mat_vec(C.mat_mul(s, s), v) == v
    assert C.reflect_vector(gcm[i], i, v) == C.mat_vec(s, v)
