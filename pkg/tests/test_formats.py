import json

import pytest

from boomerang import ecgraph as E
from boomerang import fixtures as F
from boomerang import formats as Fm
from boomerang.errors import InvalidCartanGraph, ParseError


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        Fm.load_json_text('{\n  "vertices": [1,\n}')
    assert info.value.line == 3 and info.value.column >= 1


@pytest.mark.parametrize("data", [
    {"edges": []},
    {"vertices": "ab", "edges": []},
    {"vertices": ["a", "b"], "edges": [["a", "b"]]},
    {"vertices": ["a"], "edges": [["a", "z", "1"]]},
])
def test_malformed_graphs(data):
    with pytest.raises(ParseError):
        Fm.graph_from_json(data)


def test_graph_round_trip():
    g = F.load_graph("square_rb")
    again = Fm.graph_from_json(json.loads(Fm.dumps(Fm.graph_to_json(g))))
    assert again.vertices == g.vertices and again.edges == g.edges and again.colors == g.colors


def test_tuple_names_are_flattened():
    assert Fm.name_of((1, (0, 2))) == "(1,(0,2))"
    assert Fm.name_of("x") == "x"


def test_cartan_round_trip_keeps_one_based_colors():
    G = F.load_cartan("cycle10")
    data = Fm.cartan_to_json(G)
    assert {e[2] for e in data["edges"]} == {1, 2}
    H = Fm.cartan_from_json(data)
    assert H.gcm == G.gcm and sorted(H.edges()) == sorted(G.edges())


@pytest.mark.parametrize("edge", [["x", "y", 0], ["x", "y", 3], ["x", "y", "1"]])
def test_cartan_edge_colors_validated(edge):
    data = {"theta": 2, "vertices": [{"name": "x", "gcm": [[2, -1], [-1, 2]]},
                                     {"name": "y", "gcm": [[2, -1], [-1, 2]]}],
            "edges": [edge]}
    with pytest.raises(ParseError):
        Fm.cartan_from_json(data)


def test_cartan_axiom_violation_is_not_a_parse_error():
    data = {"theta": 2, "vertices": [{"name": "x", "gcm": [[2, -1], [-1, 2]]},
                                     {"name": "y", "gcm": [[2, -2], [-1, 2]]}],
            "edges": [["x", "y", 1]]}
    with pytest.raises(InvalidCartanGraph):
        Fm.cartan_from_json(data)


def test_bicharacter_parsing():
    q = Fm.bicharacter_from_json({"theta": 2, "N": 3, "E": [[1, 2], [0, 1]]})
    assert q.E == ((1, 2), (0, 1))
    with pytest.raises(ParseError):
        Fm.bicharacter_from_json({"theta": 2, "E": [[1]]})


def test_dot_output():
    dot = Fm.to_dot(E.ColoredGraph(['a"b', "c"], [('a"b', "c", (1, 0))]), "demo")
    assert dot.startswith('graph "demo" {')
    assert '"a\\"b" -- "c" [label="(1,0)"];' in dot
    assert dot.endswith("}\n")


def test_cartan_dot_uses_one_based_colors():
    dot = Fm.cartan_to_dot(F.load_cartan("gl21"))
    assert 'label="1"' in dot and 'label="0"' not in dot


def test_dumps_is_canonical():
    assert Fm.dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_every_fixture_loads():
    names = F.fixture_names()
    assert "cycle10" in names and "a2_zeta3" in names
    for name in names:
        assert F.load(name)
