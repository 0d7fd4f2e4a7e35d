"""Hand-built instances shared by the test modules."""

import networkx as nx

from dichroma.graph_core import Digraph, PlaneEmbedding, compute_embedding

# octahedron: N = 0, equator a b c d = 1 2 3 4, S = 5
N, A, B, C, D, S = range(6)


def directed_cycle(k):
    return Digraph.from_arcs(k, [(i, (i + 1) % k) for i in range(k)])


def transitive_tournament(k):
    return Digraph.from_arcs(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def octahedron():
    """Equator directed cyclically, N a source, S a sink: digirth 4."""
    arcs = [(A, B), (B, C), (C, D), (D, A)]
    arcs += [(N, x) for x in (A, B, C, D)] + [(x, S) for x in (A, B, C, D)]
    return Digraph.from_arcs(6, arcs)


def octahedron_embedding(outer=(N, A, B)):
    e = compute_embedding(octahedron())
    return e.with_outer_face(e.find_face(outer))


def k4(arcs=None):
    return Digraph.from_arcs(4, arcs or [(i, j) for i in range(4) for j in range(i + 1, 4)])


def acyclic_orientation(g: nx.Graph) -> Digraph:
    nodes = sorted(g.nodes)
    return Digraph.from_arcs(len(nodes), [(min(u, v), max(u, v)) for u, v in g.edges])


def icosahedron():
    return acyclic_orientation(nx.icosahedral_graph())


def cube():
    return Digraph.from_arcs(8, [(min(u, v), max(u, v)) for u, v in nx.convert_node_labels_to_integers(nx.cubical_graph()).edges])


def wheel(rim_cyclic=True, k=5):
    """Hub 0 with a rim 1..k; a cyclic rim is a directed k-cycle."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    if not rim_cyclic:
        rim = [(min(a, b), max(a, b)) for a, b in rim]
    spokes = [(0, i) if i % 2 else (i, 0) for i in range(1, k + 1)]
    return Digraph.from_arcs(k + 1, rim + spokes)


def embedding_from(adjacency, outer=None):
    e = PlaneEmbedding.from_neighbour_lists(adjacency)
    return e if outer is None else e.with_outer_face(e.find_face(outer))
