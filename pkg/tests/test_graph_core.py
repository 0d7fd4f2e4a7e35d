import itertools

import networkx as nx
import pytest
from fixtures import A, B, C, D, N, S, cube, directed_cycle, icosahedron, k4, octahedron, transitive_tournament
from hypothesis import given, settings
from hypothesis import strategies as st

from dichroma.colour import colour_digirth4
from dichroma.errors import DegenerateLink, NotACut, NotPlanar, PartialColouring, PreconditionViolated
from dichroma.graph_core import (
    INFINITE,
    Digraph,
    PlaneEmbedding,
    compute_embedding,
    cycle_sides,
    digirth,
    dual,
    facial_cycle_of_vertex,
    find_directed_cycle,
    is_oriented,
    restrict_colouring,
    verify_colouring,
)
from dichroma.oracle import is_valid_two_colouring


# -- Digraph -----------------------------------------------------------------------


def test_digraph_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 0)])
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 2)])


def test_induced():
    d = octahedron().induced([A, B, C, D])
    assert d.vertices == (A, B, C, D)
    assert set(d.arcs) == {(A, B), (B, C), (C, D), (D, A)}


# -- digirth / is_oriented ----------------------------------------------------------


def test_digirth_examples():
    assert digirth(directed_cycle(3)) == 3
    assert digirth(transitive_tournament(4)) == INFINITE
    assert digirth(octahedron()) == 4


def test_infinite_is_a_sentinel():
    assert digirth(Digraph.from_arcs(3, [])) >= 4
    assert not isinstance(INFINITE, int)


def test_is_oriented_examples():
    assert not is_oriented(Digraph.from_arcs(2, [(0, 1), (1, 0)]))
    assert is_oriented(directed_cycle(3))
    assert is_oriented(Digraph.from_arcs(5, []))


def _random_digraph(draw_bits, n):
    pairs = list(itertools.combinations(range(n), 2))
    arcs = []
    for (u, v), b in zip(pairs, draw_bits):
        if b == 1:
            arcs.append((u, v))
        elif b == 2:
            arcs.append((v, u))
    return Digraph.from_arcs(n, arcs)


digraphs = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.integers(0, 2), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda bits: _random_digraph(bits, n)
    )
)


@settings(max_examples=150, deadline=None)
@given(digraphs)
def test_digirth_matches_cycle_enumeration(d):
    g = nx.DiGraph(list(d.arcs))
    g.add_nodes_from(d.vertices)
    lengths = [len(c) for c in nx.simple_cycles(g)]
    assert digirth(d) == (min(lengths) if lengths else INFINITE)


@settings(max_examples=150, deadline=None)
@given(digraphs)
def test_find_directed_cycle(d):
    cyc = find_directed_cycle(d)
    g = nx.DiGraph(list(d.arcs))
    if cyc is None:
        assert d.m == 0 or nx.is_directed_acyclic_graph(g)
    else:
        assert all(d.has_arc(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        assert len(set(cyc)) == len(cyc) and cyc[0] == min(cyc)


# -- verify_colouring ------------------------------------------------------------------


def test_verify_examples():
    v = verify_colouring(directed_cycle(3), {0: 1, 1: 1, 2: 1})
    assert not v and v.witness == (0, 1, 2)
    assert verify_colouring(directed_cycle(4), {0: 1, 1: 1, 2: 2, 3: 2})
    d = octahedron()
    c = colour_digirth4(d)
    assert verify_colouring(d, c)
    g = nx.DiGraph(list(d.arcs))
    for colour in (1, 2):
        assert nx.is_directed_acyclic_graph(g.subgraph(v for v in d.vertices if c[v] == colour))


def test_verify_partial():
    with pytest.raises(PartialColouring):
        verify_colouring(directed_cycle(3), {0: 1, 1: 2})


@settings(max_examples=150, deadline=None)
@given(digraphs, st.data())
def test_verify_matches_brute_force(d, data):
    c = {v: data.draw(st.sampled_from((1, 2))) for v in d.vertices}
    result = verify_colouring(d, c)
    assert bool(result) == is_valid_two_colouring(d, c)
    if not result:
        w = result.witness
        assert len({c[v] for v in w}) == 1
        assert all(d.has_arc(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))


def test_restrict_colouring():
    c = {0: 1, 1: 2, 2: 1}
    assert restrict_colouring(c, c.keys()) == c
    assert restrict_colouring(c, []) == {}


# -- embeddings -------------------------------------------------------------------------


def test_compute_embedding_examples():
    assert compute_embedding(k4()).f == 4
    assert compute_embedding(octahedron()).f == 8
    with pytest.raises(NotPlanar) as info:
        compute_embedding(Digraph.from_arcs(5, list(itertools.combinations(range(5), 2))))
    assert info.value.witness


def test_compute_embedding_disconnected():
    with pytest.raises(PreconditionViolated):
        compute_embedding(Digraph.from_arcs(4, [(0, 1), (2, 3)]))


def test_faces_partition_darts():
    e = compute_embedding(icosahedron())
    darts = sorted(d for f in e.faces for d in f.darts)
    assert darts == list(range(2 * e.m))
    assert e.n - e.m + e.f == 2 and e.is_triangulation()


def test_bad_rotation_rejected():
    with pytest.raises(ValueError):
        PlaneEmbedding(((0, 1), (1, 2)), {0: (0,), 1: (1,), 2: (3,)})


def test_rotation_canonical_start():
    e = compute_embedding(octahedron())
    for v, ds in e.rotation.items():
        heads = [e.head(x) for x in ds]
        assert heads[0] == min(heads)


# -- duals ------------------------------------------------------------------------------


def test_dual_of_k4_is_k4():
    h = dual(compute_embedding(k4()))
    assert len(h.nodes) == 4 and len(h.edges) == 6
    assert all(h.degree(x) == 3 for x in h.nodes)
    assert nx.is_isomorphic(nx.Graph(h.edges), nx.complete_graph(4))


def test_dual_of_octahedron_is_cube():
    e = compute_embedding(octahedron())
    h = dual(e)
    assert nx.is_isomorphic(nx.Graph(h.edges), nx.cubical_graph())
    assert h.embedding.f == e.n  # dual faces are primal vertices


def test_dual_of_triangle_is_theta():
    h = dual(compute_embedding(directed_cycle(3)))
    assert len(h.nodes) == 2 and len(h.edges) == 3
    assert all(set(x) == {0, 1} for x in h.edges)
    assert all(h.primal_edge(i) == i for i in range(3))


def test_facial_cycles_of_vertices():
    e = compute_embedding(octahedron())
    h = dual(e)
    for v in e.vertices:
        cyc = facial_cycle_of_vertex(e, h, v)
        assert len(cyc) == 4 and cyc.is_simple
        assert all(v in e.faces[f].boundary for f in cyc.nodes)
    e = compute_embedding(k4())
    assert len(facial_cycle_of_vertex(e, dual(e), 0)) == 3
    e = compute_embedding(icosahedron())
    h = dual(e)
    assert nx.is_isomorphic(nx.Graph(h.edges), nx.dodecahedral_graph())
    assert all(len(facial_cycle_of_vertex(e, h, v)) == 5 for v in e.vertices)


def test_degenerate_link():
    e = compute_embedding(Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    with pytest.raises(DegenerateLink):
        facial_cycle_of_vertex(e, dual(e), 0)


# -- cycle_sides ----------------------------------------------------------------------


def test_cycle_sides_examples():
    e = compute_embedding(octahedron())
    h = dual(e)
    assert cycle_sides(e, facial_cycle_of_vertex(e, h, N), anchor=S) == (frozenset({N}), frozenset({S, A, B, C, D}))
    e = compute_embedding(k4())
    assert cycle_sides(e, facial_cycle_of_vertex(e, dual(e), 0), anchor=1) == (frozenset({0}), frozenset({1, 2, 3}))


def _face_flood(e, cut_edges, start):
    """Vertices reachable from ``start`` without crossing a cut edge."""
    cut = set(cut_edges)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for dart in e.rotation[x]:
            if dart >> 1 not in cut and e.head(dart) not in seen:
                seen.add(e.head(dart))
                stack.append(e.head(dart))
    return seen


def test_cycle_sides_petrie_like_cycle_on_icosahedron():
    e = compute_embedding(icosahedron())
    h = dual(e)
    g = nx.Graph()
    for i, (x, y) in enumerate(h.edges):
        g.add_edge(x, y, id=i)
    cycles = [c for c in nx.simple_cycles(g, length_bound=10) if len(c) == 10]
    c = cycles[0]
    edges = [g[c[i]][c[(i + 1) % len(c)]]["id"] for i in range(len(c))]
    anchor = min(e.vertices)
    inside, outside = cycle_sides(e, edges, anchor)
    assert inside | outside == set(e.vertices) and not inside & outside and inside
    assert outside == _face_flood(e, edges, anchor)


def test_cycle_sides_rejects_non_cut():
    e = compute_embedding(octahedron())
    with pytest.raises(NotACut):
        cycle_sides(e, [0], anchor=0)


def test_cube_dual_structure():
    e = compute_embedding(cube())
    h = dual(e)
    assert len(h.nodes) == 6 and all(h.degree(x) == 4 for x in h.nodes)
