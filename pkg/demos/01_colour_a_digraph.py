"""Colour a small planar digraph and check the result."""

from dichroma import Digraph, colour_digirth4, digirth, verify_colouring

# The octahedron: vertex 0 on top, 5 at the bottom, 1..4 around the middle.
# The middle ring is a directed 4-cycle; the top sends arcs down, the bottom receives.
arcs = [(1, 2), (2, 3), (3, 4), (4, 1)]
arcs += [(0, x) for x in (1, 2, 3, 4)]
arcs += [(x, 5) for x in (1, 2, 3, 4)]
d = Digraph.from_arcs(6, arcs)

print("digirth:", digirth(d))  # 4, the ring is the only directed cycle

colouring = colour_digirth4(d)
print("colouring:", colouring)

# each colour class must be acyclic
check = verify_colouring(d, colouring)
print("valid:", bool(check))

# a bad colouring comes back with the offending cycle
bad = {v: 1 for v in d.vertices}
print("all-one witness:", verify_colouring(d, bad).witness)
