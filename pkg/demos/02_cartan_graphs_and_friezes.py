"""
Cartan graphs, Weyl groupoids and friezes
=========================================

A rank-two Cartan graph on a ten-cycle, its Weyl groupoid, the RB graph of
its root orbits, and the Conway-Coxeter frieze read off its roots.
"""

from boomerang import cartan as C
from boomerang import ecgraph as E
from boomerang import fixtures
from boomerang.frieze import (cartan_graph_from_quiddity, frieze_from_cartan_graph,
                              verify_conway_coxeter)

# The ten-cycle is bundled as a fixture; it can also be rebuilt from a
# quiddity sequence, one entry per edge.
G = fixtures.load_cartan("cycle10")
H = cartan_graph_from_quiddity([2, 1, 3, 1, 2, 2, 1, 3, 1, 2])
print("quiddity rebuild matches fixture:", G.gcm == H.gcm)

# Generate every morphism of the Weyl groupoid by breadth-first search.
W = C.generate_groupoid(G)
print("morphisms:", len(W))
print("positive roots at vertex 1:", sorted(W.positive_roots("1")))

# The axioms, and the fact that word length equals the number of positive
# roots sent to negative ones.
print({name: ok for name, (ok, _) in C.check_axioms(G, W).items()})
print("l(w) = N(w) everywhere:",
      all(a == b for a, b in (C.length_and_N(W, w) for w in W.morphisms())))

# Root orbits under the path subgroupoid give colors; the result is RB.
rb = C.build_rb(G)
print("RB(G):", len(rb.vertices), "vertices, colors", rb.colors)
print("RB(G) is rainbow boomerang:", bool(E.is_rainbow_boomerang(rb)))

# Reading root coefficients along the cycle produces a frieze pattern.
frieze = frieze_from_cartan_graph(G, W=W)
print(frieze)
print("diamond rule holds:", verify_conway_coxeter(frieze))

# A single vertex of type A2 has a hexagon as simply connected cover.
A2 = C.SemiCartanGraph(2, ["x"], {"x": [[2, -1], [-1, 2]]}, {})
cover, _ = C.simply_connected_cover(A2)
print("cover of A2:", cover.vertices)
