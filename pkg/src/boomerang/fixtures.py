"""Bundled reference data (graphs, Cartan graphs, bicharacters) stored as JSON."""
from __future__ import annotations

import json
from importlib import resources


def fixture_names():
    return sorted(p.name[:-5] for p in resources.files("boomerang.data").iterdir()
                  if p.name.endswith(".json"))


def load(name: str):
    path = resources.files("boomerang.data") / f"{name}.json"
    return json.loads(path.read_text())


def load_graph(name: str):
    from .formats import graph_from_json
    return graph_from_json(load(name))


def load_cartan(name: str):
    from .formats import cartan_from_json
    return cartan_from_json(load(name))


def load_bicharacter(name: str):
    from .formats import bicharacter_from_json
    return bicharacter_from_json(load(name))
