"""
Nichols algebras of diagonal type
=================================

From a bicharacter to its Cartan graph, the set D_lambda of roots where the
Verma module does not link, the quotient RB graph, and the characters of
Verma modules over every Borel.
"""

from boomerang import ecgraph as E
from boomerang import nichols as Nc

# Type A2 at a primitive third root of unity.
q = Nc.cartan_a2(3)
print("Cartan matrix:", Nc.cartan_matrix_of(q))

G = Nc.build_G(q)
print("bicharacters reached by reflections:", len(G.base_graph.vertices))
print("simply connected cover:", G.graph.vertices)
print("positive roots with orders:", Nc.positive_roots_with_orders(G))
print("2 rho:", Nc.weyl_vector(G))

# D_lambda by exponent arithmetic, checked against exact cyclotomic products.
roots = [b for b, _ in Nc.positive_roots_with_orders(G)]
for lam in [(0, 0), (1, 0), (1, 1), (2, 2)]:
    fast = Nc.d_lambda(q, roots, lam, "fast")
    slow = Nc.d_lambda(q, roots, lam, "oracle")
    print(f"lambda={lam}: D={sorted(fast)} (oracle agrees: {fast == slow})")

# Contract the colors in D_lambda; the quotient is again rainbow boomerang.
g, _, D = Nc.rb_lambda(G, (1, 0))
print("RB[q, (1,0)]:", g.vertices, g.edges)
print("rainbow boomerang:", bool(E.is_rainbow_boomerang(g)))

# Compositions of odd Verma maps vanish exactly on walks that repeat a color,
# which are also the walks that are not shortest.
dist = E.distances(g)
walks = list(Nc.enumerate_walks(g, 3))
print("walks checked:", len(walks),
      "all consistent:", all(Nc.verma_walk_verdict(G, (1, 0), w, g, dist).consistent for w in walks))

# The character of a Verma module does not depend on the Borel.
chars = {v: Nc.verma_character(G, v, (0, 0)) for v in G.graph.vertices}
print("distinct characters across Borels:", len(set(chars.values())))
print("dimension of the Nichols algebra:", Nc.character_uqminus(Nc.positive_roots_with_orders(G), 2).total())
