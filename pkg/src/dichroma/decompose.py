"""Reductions to the 4-connected triangulation case."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .errors import NotTriangulation, NotTwoConnected
from .graph_core import Digraph, PlaneEmbedding, _component_of


@dataclass(frozen=True)
class StellationRecord:
    original_n: int
    added: dict[int, int] = field(default_factory=dict)  # new vertex -> face id it subdivides


@dataclass(frozen=True)
class SeparatingTriangle:
    vertices: tuple[int, int, int]
    inside: frozenset[int]
    outside: frozenset[int]


def stellate(d: Digraph, e: PlaneEmbedding) -> tuple[Digraph, PlaneEmbedding, StellationRecord]:
    """Put a sink inside every face longer than three.

    New vertices only receive arcs, so no directed cycle is created or destroyed.
    """
    if e.n < 3 or not e.is_connected() or any(len(set(f.boundary)) != len(f) for f in e.faces):
        raise NotTwoConnected("stellation needs a 2-connected plane graph")
    edges = list(e.edges)
    rotation = {v: list(ds) for v, ds in e.rotation.items()}
    arcs = list(d.arcs)
    added = {}
    next_vertex = max(e.vertices) + 1
    for face in e.faces:
        if len(face) == 3:
            continue
        s = next_vertex
        next_vertex += 1
        added[s] = face.id
        new_darts = {}
        for x in face.boundary:
            new_darts[x] = 2 * len(edges)  # x -> s
            edges.append((x, s))
            arcs.append((x, s))
        k = len(face)
        for i, dart in enumerate(face.darts):
            x = face.boundary[i]
            ring = rotation[x]
            # the face sits in the angle just before its own dart leaving x
            ring.insert(ring.index(dart), new_darts[x])
        rotation[s] = [new_darts[face.boundary[i]] ^ 1 for i in range(k - 1, -1, -1)]
    emb = PlaneEmbedding(tuple(edges), rotation, 0)
    # old darts keep their ids; a stellated outer face hands over to one of its triangles
    emb = emb.with_outer_face(emb.face_of[e.faces[e.outer_face].darts[0]])
    return Digraph(tuple(rotation), tuple(arcs)), emb, StellationRecord(e.n, added)


def blocks(d: Digraph) -> list[tuple[Digraph, frozenset[int]]]:
    """Biconnected blocks of the underlying graph with the cut vertices each contains.

    Isolated vertices belong to no block.
    """
    g = d.underlying_graph()
    cuts = set(nx.articulation_points(g))
    out = []
    for comp in nx.biconnected_components(g):
        vs = frozenset(comp)
        out.append((d.induced(vs), frozenset(vs & cuts)))
    out.sort(key=lambda b: b[0].vertices)
    return out


def triangles(e: PlaneEmbedding) -> list[tuple[int, int, int]]:
    """All vertex triples ``x < y < z`` that are pairwise adjacent."""
    adj = e.adjacency
    out = []
    for x in sorted(adj):
        for y in sorted(w for w in adj[x] if w > x):
            for z in sorted(w for w in adj[x] & adj[y] if w > y):
                out.append((x, y, z))
    return out


def separating_triangles(e: PlaneEmbedding) -> list[SeparatingTriangle]:
    """Every separating triangle, with sides relative to the outer face."""
    if e.n < 4 or not e.is_triangulation():
        raise NotTriangulation("expected a plane triangulation on at least 4 vertices")
    facial = {frozenset(f.boundary) for f in e.faces}
    outer_vertices = e.faces[e.outer_face].boundary
    out = []
    for t in triangles(e):
        if frozenset(t) in facial:
            continue
        blocked = frozenset(t)
        anchor = next(v for v in outer_vertices if v not in blocked)
        outside = _component_of(e.adjacency, anchor, blocked)
        inside = frozenset(e.vertices) - outside - blocked
        out.append(SeparatingTriangle(t, inside, frozenset(outside)))
    return out


def find_separating_triangle(e: PlaneEmbedding) -> SeparatingTriangle | None:
    """A separating triangle with inclusion-minimal inside, or None if 4-connected.

    Ties go to the lexicographically smallest triple.
    """
    candidates = separating_triangles(e)
    minimal = [c for c in candidates if not any(o.inside < c.inside for o in candidates)]
    return min(minimal, key=lambda c: c.vertices, default=None)


def split_at_triangle(
    d: Digraph, e: PlaneEmbedding, t: SeparatingTriangle
) -> tuple[tuple[Digraph, PlaneEmbedding], tuple[Digraph, PlaneEmbedding]]:
    """Cut into the exterior part (keeps the outer face) and the interior part.

    The interior part has the separating triangle as its outer face.  Both
    parts keep the vertex ids of ``d``.
    """
    outer_vs = frozenset(e.vertices) - t.inside
    inner_vs = t.inside | frozenset(t.vertices)
    e0 = e.restrict(outer_vs)
    e1 = e.restrict(inner_vs)
    e1 = e1.with_outer_face(e1.find_face(t.vertices))
    return (d.induced(outer_vs), e0), (d.induced(inner_vs), e1)
