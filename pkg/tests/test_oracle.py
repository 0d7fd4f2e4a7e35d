"""Oracle layer: frozen values first, then cross-checks against networkx."""

import itertools
import random

import networkx as nx
import pytest
from fixtures import directed_cycle, octahedron, octahedron_embedding

from dichroma.errors import TooLarge
from dichroma.graph_core import Digraph, PlaneEmbedding, digirth
from dichroma.oracle import (
    ANY_PLANAR,
    TRIANGULATION,
    InstanceSpec,
    all_two_colourings,
    brute_force_separating_triangles,
    brute_force_two_colouring,
    bundled_triangulations,
    count_orientations_by_sampling,
    enumerate_orientations,
    enumerate_triangulations,
    enumerate_tutte_paths,
    is_valid_two_colouring,
    random_four_connected_triangulation,
    random_instance,
)
from dichroma.tutte import TuttePathQuery

# -- frozen values -------------------------------------------------------------


def test_brute_force_directed_triangle():
    assert brute_force_two_colouring(directed_cycle(3)) == {0: 2, 1: 1, 2: 1}


def test_brute_force_single_vertex():
    assert brute_force_two_colouring(Digraph.from_arcs(1, [])) == {0: 1}


def test_colouring_counts():
    assert sum(1 for _ in all_two_colourings(directed_cycle(3))) == 6
    assert sum(1 for _ in all_two_colourings(octahedron())) == 56


def test_orientation_counts():
    tri = [(0, 1), (1, 2), (0, 2)]
    assert sum(1 for _ in enumerate_orientations(tri, 4)) == 6
    assert sum(1 for _ in enumerate_orientations(tri, 3)) == 8
    assert sum(1 for _ in enumerate_orientations([(0, 1)], 4)) == 2
    octa = list(octahedron_embedding().edges)
    assert sum(1 for _ in enumerate_orientations(octa, 4)) == 450
    assert sum(1 for _ in enumerate_orientations(octa, 5)) == 426


def test_triangulation_counts():
    # plane triangulations up to isomorphism: 1 1 2 5 14
    assert [len(enumerate_triangulations(n)) for n in range(4, 9)] == [1, 1, 2, 5, 14]


def test_bundled_corpus():
    corpus = bundled_triangulations()
    assert [e.n for e in corpus] == [4, 5, 6, 6, 7, 7, 7, 7, 7]
    assert all(e.is_triangulation() and e.euler_holds() for e in corpus)
    assert len(bundled_triangulations(6, 6)) == 2


def test_random_instance_frozen():
    d, e = random_instance(InstanceSpec(seed=0, n=4))
    assert d.arcs == ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2))
    assert digirth(d) == float("inf")
    d, e = random_instance(InstanceSpec(seed=7, n=10))
    assert (d.n, d.m, e.f) == (10, 24, 16)
    assert d.arcs[:5] == ((1, 0), (1, 4), (1, 7), (2, 1), (3, 1))


# -- errors and validation -------------------------------------------------------


def test_too_large():
    with pytest.raises(TooLarge):
        brute_force_two_colouring(Digraph.from_arcs(25, []))
    with pytest.raises(TooLarge):
        list(enumerate_orientations(nx.complete_graph(8).edges, 3))


@pytest.mark.parametrize("kwargs", [dict(n=2), dict(n=5, digirth_min=6), dict(n=5, shape="torus")])
def test_instance_spec_validation(kwargs):
    with pytest.raises(ValueError):
        InstanceSpec(seed=0, **kwargs)


# -- cross-checks ------------------------------------------------------------------


def _nx_acyclic_classes(d, c):
    for colour in (1, 2):
        g = nx.DiGraph()
        g.add_nodes_from(v for v in d.vertices if c[v] == colour)
        g.add_edges_from((u, v) for u, v in d.arcs if c[u] == c[v] == colour)
        if not nx.is_directed_acyclic_graph(g):
            return False
    return True


def test_colourings_match_networkx_on_octahedron():
    d = octahedron()
    ours = {tuple(sorted(c.items())) for c in all_two_colourings(d)}
    theirs = set()
    for bits in itertools.product((1, 2), repeat=d.n):
        c = dict(zip(d.vertices, bits))
        if _nx_acyclic_classes(d, c):
            theirs.add(tuple(sorted(c.items())))
    assert ours == theirs


def test_octahedron_orientation_count_independent():
    edges = list(octahedron_embedding().edges)
    count = 0
    for bits in itertools.product((0, 1), repeat=len(edges)):
        g = nx.DiGraph((u, v) if b else (v, u) for (u, v), b in zip(edges, bits))
        if not any(True for _ in nx.simple_cycles(g, length_bound=3)):
            count += 1
    assert count == 450
    estimate = count_orientations_by_sampling(nx.Graph(edges), 4, 4000, seed=1)
    assert abs(estimate - 450) < 60


def test_orientations_exhaustive_without_bound():
    g = nx.cycle_graph(5)
    g.add_edge(0, 2)
    assert sum(1 for _ in enumerate_orientations(g, 3)) == 2 ** g.number_of_edges()


def test_random_instance_deterministic():
    for shape in (TRIANGULATION, ANY_PLANAR):
        spec = InstanceSpec(seed=7, n=10, shape=shape)
        assert random_instance(spec) == random_instance(spec)


@pytest.mark.parametrize("shape", [TRIANGULATION, ANY_PLANAR])
def test_random_instances_meet_spec(shape):
    for seed in range(100):
        spec = InstanceSpec(seed=seed, n=12, digirth_min=4, shape=shape)
        d, e = random_instance(spec)
        assert digirth(d) >= 4
        assert e.euler_holds()
        assert nx.check_planarity(d.underlying_graph())[0]
        if shape == TRIANGULATION:
            assert e.is_triangulation()
        else:
            assert nx.is_biconnected(d.underlying_graph())


def test_digirth_five_instances():
    for seed in range(10):
        d, _ = random_instance(InstanceSpec(seed=seed, n=15, digirth_min=5))
        assert digirth(d) >= 5


def test_four_connected_generator():
    rng = random.Random(3)
    for n in (6, 9, 14, 20):
        e = random_four_connected_triangulation(n, rng)
        assert e.is_triangulation()
        assert nx.node_connectivity(nx.Graph(e.edges)) >= 4
        assert brute_force_separating_triangles(e) == []


def test_separating_triangle_oracle():
    # K4 stellated in one face: the old face becomes separating
    e = PlaneEmbedding.from_neighbour_lists(
        {0: [1, 4, 2, 3], 1: [0, 3, 2, 4], 2: [0, 4, 1, 3], 3: [0, 2, 1], 4: [0, 1, 2]}
    )
    assert e.is_triangulation()
    assert brute_force_separating_triangles(e) == [(0, 1, 2)]


def test_brute_force_validity():
    rng = random.Random(0)
    for _ in range(30):
        n = rng.randint(3, 9)
        arcs = {(u, v) for u, v in itertools.permutations(range(n), 2) if u < v and rng.random() < 0.5}
        d = Digraph.from_arcs(n, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in arcs])
        c = brute_force_two_colouring(d)
        if c is not None:
            assert is_valid_two_colouring(d, c) and _nx_acyclic_classes(d, c)
        else:
            assert not any(True for _ in all_two_colourings(d))


def test_tutte_enumerator_on_k4():
    k4 = PlaneEmbedding.from_neighbour_lists({0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]})
    q = TuttePathQuery(k4, (0, 1, 3), u=2, v=0, e=(1, 3))
    assert sorted(enumerate_tutte_paths(q)) == [(2, 1, 3, 0), (2, 3, 1, 0)]
