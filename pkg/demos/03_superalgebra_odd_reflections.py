"""
Odd reflections of Lie superalgebras
====================================

Borel subalgebras of gl(m|n) correspond to Young diagrams in an m x n box.
Coloring each odd reflection by the box it adds gives a graph isomorphic to
the RB graph of the Cartan graph.
"""

from boomerang import cartan as C
from boomerang import ecgraph as E
from boomerang import superalg as S

# gl(3|2): ten diagrams, twelve odd reflections.
OR = S.or_graph_gl(3, 2)
print("vertices:", OR.vertices)
print("box colors:", OR.colors)

# The same graph with each edge colored by the simple root it reflects in.
G = S.exchange_graph_gl(3, 2)
print("exchange colors:", sorted({i + 1 for _, _, i in G.edges()}))

# Matching the box coloring against RB(G) yields a bijection of colors.
bijection = S.verify_or_equals_rb("gl", 3, 2)
for box, root in sorted(bijection.items()):
    x, y = map(int, box.strip("()").split(","))
    print(f"  box {box} <-> root orbit {root}  (odd root {S.gl_box_root(3, (x, y))})")

# The box rule agrees with a generic odd-reflection computation from the
# root data alone.
simple, roots, odd, names = S.gl_root_data(3, 2)
generic = S.odd_reflection_graph(simple, roots, odd)
print("generic computation:", len(generic.borels), "Borels,", len(generic.edges), "reflections")

# D(2,1;alpha) has four Borels; positive systems computed by odd reflections
# match the roots of the Cartan graph.
G, expected = S.d21alpha()
graph, positive = S.d21_or_graph(G)
print("D(2,1;alpha) reflections:", graph.edges)
print("positive systems agree:", positive == expected["positive_roots"])
print("OR = RB bijection:", S.verify_or_equals_rb("d21a"))
print("RB(G) is rainbow boomerang:", bool(E.is_rainbow_boomerang(C.build_rb(G))))
