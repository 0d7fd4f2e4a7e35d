"""Faces, dual graphs and the two sides of a dual cycle."""

import networkx as nx

from dichroma import Digraph, compute_embedding, cycle_sides, dual, facial_cycle_of_vertex

g = nx.convert_node_labels_to_integers(nx.icosahedral_graph())
d = Digraph.from_arcs(12, [(min(u, v), max(u, v)) for u, v in g.edges])
e = compute_embedding(d)
print(f"n={e.n} m={e.m} f={e.f}  euler: {e.n - e.m + e.f}")

h = dual(e)
degrees = {h.degree(x) for x in h.nodes}
print("dual nodes:", len(h.nodes), "degrees:", degrees)  # the dodecahedron, 3-regular

# the faces around a vertex form a cycle of the dual; cutting it isolates the vertex
ring = facial_cycle_of_vertex(e, h, 0)
print("faces around 0:", ring.nodes)
inside, outside = cycle_sides(e, ring, anchor=11)
print("inside:", sorted(inside), "outside has", len(outside), "vertices")
