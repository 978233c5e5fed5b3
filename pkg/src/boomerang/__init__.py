"""Exact computations with rainbow boomerang graphs, Cartan graphs and their Weyl groupoids."""

__version__ = "0.1.0"
