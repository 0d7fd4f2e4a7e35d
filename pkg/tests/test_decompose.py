import random

import networkx as nx
import pytest
from fixtures import cube, directed_cycle, octahedron

from dichroma.decompose import (
    blocks,
    find_separating_triangle,
    separating_triangles,
    split_at_triangle,
    stellate,
)
from dichroma.errors import NotTriangulation, NotTwoConnected
from dichroma.graph_core import Digraph, PlaneEmbedding, compute_embedding, digirth
from dichroma.oracle import (
    InstanceSpec,
    brute_force_separating_triangles,
    embedding_rotation,
    random_instance,
    random_triangulation,
)


def stellate_face(d, e, face_vertices):
    """Add one sink inside the given triangular face."""
    s = max(d.vertices) + 1
    rot = embedding_rotation(e)
    f = e.faces[e.find_face(face_vertices)]
    darts = f.darts
    for i, x in enumerate(f.boundary):
        # the face is entered at x by darts[i - 1] and left by darts[i]
        ring = rot[x]
        ring.insert(ring.index(e.head(darts[i])), s)
    rot[s] = list(reversed(f.boundary))
    e2 = PlaneEmbedding.from_neighbour_lists(rot)
    keep = e.faces[e.outer_face].boundary
    if set(keep) != set(face_vertices):
        e2 = e2.with_outer_face(e2.find_face(keep))
    d2 = Digraph(d.vertices + (s,), d.arcs + tuple((x, s) for x in f.boundary))
    return d2, e2


def test_stellate_four_cycle():
    d = directed_cycle(4)
    ds, es, rec = stellate(d, compute_embedding(d))
    assert (ds.n, ds.m) == (6, 12)
    assert es.is_triangulation() and digirth(ds) == 4
    assert rec.original_n == 4 and len(rec.added) == 2


def test_stellate_triangulation_unchanged():
    d = octahedron()
    e = compute_embedding(d)
    ds, es, rec = stellate(d, e)
    assert ds == d and rec.added == {} and es.f == e.f


def test_stellate_cube():
    d = cube()
    ds, es, rec = stellate(d, compute_embedding(d))
    assert ds.n == 14 and es.f == 24 and es.is_triangulation()
    for s, face in rec.added.items():
        assert not ds.successors[s]
        assert set(ds.predecessors[s]) == set(compute_embedding(d).faces[face].boundary)


def test_stellate_needs_two_connected():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2)])
    with pytest.raises(NotTwoConnected):
        stellate(d, compute_embedding(d))


@pytest.mark.parametrize("seed", range(20))
def test_stellation_preserves_directed_cycles(seed):
    d, e = random_instance(InstanceSpec(seed=seed, n=10, digirth_min=3, shape="any_planar"))
    ds, es, rec = stellate(d, e)
    cycles = {tuple(c) for c in nx.simple_cycles(nx.DiGraph(list(d.arcs)))}
    cycles_after = {tuple(c) for c in nx.simple_cycles(nx.DiGraph(list(ds.arcs)))}
    assert {frozenset(c) for c in cycles} == {frozenset(c) for c in cycles_after}
    assert ds.m == 3 * ds.n - 6 and es.is_triangulation()


def test_blocks_examples():
    bowtie = Digraph.from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    parts = blocks(bowtie)
    assert [b.vertices for b, _ in parts] == [(0, 1, 2), (2, 3, 4)]
    assert all(cuts == {2} for _, cuts in parts)
    d = octahedron()
    assert blocks(d) == [(d, frozenset())]
    path = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])
    assert [b.arcs for b, _ in blocks(path)] == [((0, 1),), ((1, 2),), ((2, 3),)]


def test_find_separating_triangle_examples():
    d = octahedron()
    e = compute_embedding(d)
    assert find_separating_triangle(e) is None
    e = e.with_outer_face(e.find_face((3, 4, 5)))
    d2, e2 = stellate_face(d, e, (0, 1, 2))
    t = find_separating_triangle(e2)
    assert t.vertices == (0, 1, 2) and t.inside == {6}


def test_double_stellation_matches_brute_force():
    d = octahedron()
    e = compute_embedding(d)
    e = e.with_outer_face(e.find_face((3, 4, 5)))
    d, e = stellate_face(d, e, (0, 1, 2))
    d, e = stellate_face(d, e, (0, 1, 6))
    found = sorted(t.vertices for t in separating_triangles(e))
    assert found == brute_force_separating_triangles(e) == [(0, 1, 2), (0, 1, 6)]
    assert find_separating_triangle(e).vertices == (0, 1, 6)


def test_not_triangulation():
    d = directed_cycle(4)
    with pytest.raises(NotTriangulation):
        find_separating_triangle(compute_embedding(d))


def test_split_examples():
    d = octahedron()
    e = compute_embedding(d)
    e = e.with_outer_face(e.find_face((3, 4, 5)))
    d2, e2 = stellate_face(d, e, (0, 1, 2))
    (d0, e0), (d1, e1) = split_at_triangle(d2, e2, find_separating_triangle(e2))
    assert d0 == d and d1.n == 4 and e1.is_triangulation() and e0.is_triangulation()
    assert set(e1.faces[e1.outer_face].boundary) == {0, 1, 2}
    d3, e3 = stellate_face(d2, e2, (0, 1, 6))
    outer = next(t for t in separating_triangles(e3) if t.vertices == (0, 1, 2))
    (d0, _), (d1, _) = split_at_triangle(d3, e3, outer)
    assert d0.n < d3.n and d1.n < d3.n


@pytest.mark.parametrize("seed", range(30))
def test_split_reassembles(seed):
    rng = random.Random(seed)
    e = random_triangulation(rng.randint(6, 12), rng)
    d = Digraph.from_arcs(e.n, [(u, v) if rng.random() < 0.5 else (v, u) for u, v in e.edges])
    # the oracle and the fast scan agree on every fixture
    assert sorted(t.vertices for t in separating_triangles(e)) == brute_force_separating_triangles(e)
    t = find_separating_triangle(e)
    if t is None:
        assert nx.node_connectivity(nx.Graph(e.edges)) >= 4
        return
    assert t.inside and t.outside and t.inside | t.outside | set(t.vertices) == set(e.vertices)
    (d0, e0), (d1, e1) = split_at_triangle(d, e, t)
    assert d0.n + d1.n == d.n + 3
    assert set(d0.vertices) & set(d1.vertices) == set(t.vertices)
    shared = {a for a in d.arcs if set(a) <= set(t.vertices)}
    assert set(d0.arcs) | set(d1.arcs) == set(d.arcs)
    assert set(d0.arcs) & set(d1.arcs) == shared and len(shared) == 3
    assert e0.is_triangulation() and e1.is_triangulation()
