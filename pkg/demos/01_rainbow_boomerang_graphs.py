"""
Rainbow boomerang graphs
========================

Edge-colored graphs in which every shortest walk uses each color at most
once, and every walk that repeats no color is shortest.
"""

from boomerang import ecgraph as E

# A square colored a, b, a, b is the smallest interesting example.
square = E.cycle("abab")
print("abab square:", bool(E.is_rainbow_boomerang(square)))

# Four different colors around the square break the property.  The decision
# procedure returns a witness explaining why.
bad = E.is_rainbow_boomerang(E.cycle("abcd"))
print("abcd square:", bool(bad), "|", bad.reason, bad.witness)

# The brute-force oracle agrees; it enumerates every walk up to the diameter.
print("oracle on abcd:", E.rb_oracle(E.cycle("abcd")))

# Hypercubes are the model case: vertices are 0/1 vectors, colors are
# coordinates, and the colors on any walk between two vertices that occur an
# odd number of times are exactly the coordinates where they differ.
Q3 = E.hypercube(3)
print("Q3:", bool(E.is_rainbow_boomerang(Q3)))
print("colors separating 000 and 101:", sorted(E.color_set(Q3, (0, 0, 0), (1, 0, 1))))

# Contracting a set of colors keeps the property.
face, proj = E.quotient(Q3, [0])
print("Q3 with color 0 contracted:", len(face.vertices), "vertices,", face.colors)

# Deleting one color class splits an RB graph into two RB halves.
halves = E.split_by_color(Q3, 2)
print("halves after removing color 2:", [len(h.vertices) for h in halves])

# Every RB graph embeds into a hypercube; each edge flips exactly one coordinate.
hexagon = E.cycle("abcabc")
labels = E.embed_hypercube(hexagon).label
for v in hexagon.vertices:
    print(f"  hexagon vertex {v} -> {sorted(labels[v])}")

# Which uncolored graphs admit an RB coloring?  K_{2,2} does, K_{2,3} does not.
for m, n in ((2, 2), (2, 3)):
    found = E.search_rb_coloring(*E.complete_bipartite(m, n))
    print(f"K_{{{m},{n}}}:", "colorable" if found else "not colorable")
