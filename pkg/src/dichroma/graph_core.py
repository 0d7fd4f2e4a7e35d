"""Digraphs, plane embeddings, faces and duals.

Embeddings are rotation systems over *darts*.  Edge ``i`` with endpoints
``(u, v)`` owns dart ``2*i`` (u -> v) and dart ``2*i + 1`` (v -> u); the
rotation of a vertex lists the darts leaving it in clockwise order.  Faces are
traced with the face on the left of every dart, so the successor of dart
``u -> v`` is the dart leaving ``v`` immediately clockwise after ``v -> u``.

Darts rather than neighbour lists keep the structure valid for multigraphs,
which the duals of small graphs need.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import DegenerateLink, NotACut, NotPlanar, PartialColouring, PreconditionViolated

INFINITE = math.inf
"""Digirth of an acyclic digraph.  Compares exactly against integers."""

Colouring = Mapping[int, int]
Arc = tuple[int, int]


# ---------------------------------------------------------------------------
# Digraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Digraph:
    """A simple digraph on an explicit vertex set.

    Top-level inputs use the dense ids ``0..n-1``; pieces cut out of a larger
    digraph keep their parent's ids so colourings can be merged directly.
    """

    vertices: tuple[int, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vertices)))
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        vset = set(vs)
        seen = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"arc ({u}, {v}) leaves the vertex set")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "Digraph":
        return cls(tuple(range(n)), tuple(arcs))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            out[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in out.items()}

    @cached_property
    def predecessors(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            inc[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in inc.items()}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Sorted, deduplicated undirected edges ``(min, max)``."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs})

    def underlying_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arcs)
        return g

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        vs = frozenset(vertices)
        return Digraph(tuple(vs), tuple((u, v) for u, v in self.arcs if u in vs and v in vs))


def is_oriented(d: Digraph) -> bool:
    """True iff ``d`` has no loops and no digons."""
    return not any(d.has_arc(v, u) for u, v in d.arcs)


def digirth(d: Digraph) -> int | float:
    """Length of a shortest directed cycle, or ``INFINITE`` when acyclic.

    One breadth-first search per vertex ``v``: the shortest cycle through ``v``
    closes with an arc ``w -> v`` where ``w`` is nearest to ``v``.
    """
    best = INFINITE
    succ, pred = d.successors, d.predecessors
    for s in d.vertices:
        if not pred[s] or not succ[s]:
            continue
        dist = {s: 0}
        queue = deque([s])
        targets = set(pred[s])
        while queue:
            x = queue.popleft()
            if dist[x] + 1 >= best:
                break
            if x in targets:
                best = min(best, dist[x] + 1)
                break
            for y in succ[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
    return best


def find_directed_cycle(d: Digraph, vertices: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """A directed cycle inside the subdigraph induced by ``vertices``, or None.

    The cycle is rotated to start at its smallest vertex.
    """
    allowed = set(d.vertices if vertices is None else vertices)
    succ = d.successors
    state: dict[int, int] = {}  # 1 on the stack, 2 finished
    for root in sorted(allowed):
        if root in state:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        state[root] = 1
        while stack:
            x, it = stack[-1]
            for y in it:
                if y not in allowed:
                    continue
                st = state.get(y)
                if st == 1:
                    cycle = path[path.index(y):]
                    k = cycle.index(min(cycle))
                    return tuple(cycle[k:] + cycle[:k])
                if st is None:
                    state[y] = 1
                    stack.append((y, iter(succ[y])))
                    path.append(y)
                    break
            else:
                state[x] = 2
                stack.pop()
                path.pop()
    return None


@dataclass(frozen=True)
class Verification:
    """Outcome of :func:`verify_colouring`; truthy iff the colouring is valid."""

    witness: tuple[int, ...] | None = None

    @property
    def valid(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.valid


def verify_colouring(d: Digraph, c: Colouring) -> Verification:
    """Check that every colour class induces an acyclic subdigraph."""
    missing = [v for v in d.vertices if v not in c]
    if missing:
        raise PartialColouring(f"vertices without a colour: {missing[:10]}")
    classes: dict[int, list[int]] = {}
    for v in d.vertices:
        classes.setdefault(c[v], []).append(v)
    for colour in sorted(classes):
        cycle = find_directed_cycle(d, classes[colour])
        if cycle is not None:
            return Verification(cycle)
    return Verification()


def restrict_colouring(c: Colouring, vs: Iterable[int]) -> dict[int, int]:
    return {v: c[v] for v in vs}


# ---------------------------------------------------------------------------
# Plane embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    boundary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Cycle:
    """A closed walk given by its nodes and the edge ids joining them.

    ``edges[i]`` joins ``nodes[i]`` and ``nodes[(i + 1) % len(nodes)]``.
    """

    nodes: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def is_simple(self) -> bool:
        return len(set(self.nodes)) == len(self.nodes) and len(set(self.edges)) == len(self.edges)


def _canonical_cycle(nodes: Sequence[int], edges: Sequence[int]) -> Cycle:
    k = min(range(len(nodes)), key=lambda i: (nodes[i], edges[i]))
    return Cycle(tuple(nodes[k:]) + tuple(nodes[:k]), tuple(edges[k:]) + tuple(edges[:k]))


@dataclass(frozen=True)
class PlaneEmbedding:
    """A rotation system with a designated outer face.

    ``edges[i] = (u, v)``; ``rotation[v]`` is the clockwise cyclic sequence of
    darts leaving ``v``, stored starting from the dart with the smallest head.
    """

    edges: tuple[tuple[int, int], ...]
    rotation: Mapping[int, tuple[int, ...]]
    outer_face: int = 0

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        rotation = {}
        seen = set()
        for v in sorted(self.rotation):
            darts = tuple(self.rotation[v])
            for dart in darts:
                if not 0 <= dart < 2 * len(edges):
                    raise ValueError(f"dart {dart} out of range")
                if dart in seen:
                    raise ValueError(f"dart {dart} appears twice in the rotation system")
                if self.tail(dart) != v:
                    raise ValueError(f"dart {dart} listed at {v} but leaves {self.tail(dart)}")
                seen.add(dart)
            if darts:
                k = min(range(len(darts)), key=lambda i: (self.head(darts[i]), darts[i]))
                darts = darts[k:] + darts[:k]
            rotation[v] = darts
        if len(seen) != 2 * len(edges):
            raise ValueError("some darts are missing from the rotation system")
        object.__setattr__(self, "rotation", rotation)
        if edges and not 0 <= self.outer_face < len(self.faces):
            raise ValueError(f"outer face {self.outer_face} does not exist")
        if edges and self.is_connected() and self.n - self.m + self.f != 2:
            raise ValueError(f"not a plane embedding: n - m + f = {self.n - self.m + self.f}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_neighbour_lists(cls, adjacency: Mapping[int, Sequence[int]], outer_face: int = 0) -> "PlaneEmbedding":
        """Build from clockwise neighbour lists of a simple graph."""
        edges = sorted({(min(u, v), max(u, v)) for u, ws in adjacency.items() for v in ws})
        index = {e: i for i, e in enumerate(edges)}

        def dart(u, v):
            i = index[(min(u, v), max(u, v))]
            return 2 * i if u < v else 2 * i + 1

        rotation = {v: tuple(dart(v, w) for w in ws) for v, ws in adjacency.items()}
        return cls(tuple(edges), rotation, outer_face)

    def with_outer_face(self, face_id: int) -> "PlaneEmbedding":
        return PlaneEmbedding(self.edges, self.rotation, face_id)

    def restrict(self, vertices: Iterable[int]) -> "PlaneEmbedding":
        """Embedding induced on ``vertices``; the outer face follows a surviving outer dart."""
        keep = frozenset(vertices)
        new_id = {}
        edges = []
        for i, (u, v) in enumerate(self.edges):
            if u in keep and v in keep:
                new_id[i] = len(edges)
                edges.append((u, v))

        def remap(dart):
            return 2 * new_id[dart >> 1] + (dart & 1)

        rotation = {
            v: tuple(remap(d) for d in self.rotation[v] if (d >> 1) in new_id) for v in self.rotation if v in keep
        }
        out = PlaneEmbedding(tuple(edges), rotation, 0)
        if self.edges:
            for dart in self.faces[self.outer_face].darts:
                if (dart >> 1) in new_id:
                    return out.with_outer_face(out.face_of[remap(dart)])
        return out

    # -- darts ----------------------------------------------------------------

    def tail(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def head(self, dart: int) -> int:
        return self.edges[dart >> 1][1 - (dart & 1)]

    @cached_property
    def _position(self) -> dict[int, tuple[int, int]]:
        return {d: (v, i) for v, ds in self.rotation.items() for i, d in enumerate(ds)}

    def next_in_face(self, dart: int) -> int:
        v, i = self._position[dart ^ 1]
        ring = self.rotation[v]
        return ring[(i + 1) % len(ring)]

    # -- sizes and structure ---------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.rotation)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def f(self) -> int:
        return len(self.faces)

    @cached_property
    def _traced(self) -> tuple[tuple[Face, ...], tuple[int, ...]]:
        face_of = [-1] * (2 * len(self.edges))
        faces = []
        for start in range(2 * len(self.edges)):
            if face_of[start] >= 0:
                continue
            darts = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                darts.append(d)
                d = self.next_in_face(d)
            if d != start:
                raise ValueError("face tracing did not close")
            k = min(range(len(darts)), key=lambda i: (self.tail(darts[i]), darts[i]))
            darts = darts[k:] + darts[:k]
            faces.append(Face(len(faces), tuple(darts), tuple(self.tail(x) for x in darts)))
        return tuple(faces), tuple(face_of)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._traced[0]

    @property
    def face_of(self) -> tuple[int, ...]:
        """Face id on the left of each dart."""
        return self._traced[1]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(self.head(d) for d in self.rotation[v])

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(self.head(d) for d in ds) for v, ds in self.rotation.items()}

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        index: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            index.setdefault((u, v), i)
            index.setdefault((v, u), i)
        return index

    def edge_id(self, u: int, v: int) -> int:
        """Id of an edge joining ``u`` and ``v`` (the first, if parallel)."""
        return self._edge_index[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_index

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(self._edge_index) == 2 * len(self.edges)

    def is_connected(self) -> bool:
        if not self.rotation:
            return True
        return len(_component_of(self.adjacency, next(iter(self.rotation)))) == self.n

    def is_triangulation(self) -> bool:
        return self.n >= 3 and self.is_simple() and all(len(f) == 3 for f in self.faces)

    def euler_holds(self) -> bool:
        return self.n - self.m + self.f == 2

    def find_face(self, vertices: Iterable[int]) -> int | None:
        """Id of the first face whose boundary vertex set equals ``vertices``."""
        target = frozenset(vertices)
        for face in self.faces:
            if len(face) == len(target) and frozenset(face.boundary) == target:
                return face.id
        return None


def _component_of(adjacency: Mapping[int, Iterable[int]], root: int, blocked: frozenset = frozenset()) -> set[int]:
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y not in seen and y not in blocked:
                seen.add(y)
                stack.append(y)
    return seen


def compute_embedding(d: Digraph) -> PlaneEmbedding:
    """Planar embedding of the underlying undirected graph of ``d``."""
    g = d.underlying_graph()
    if d.n and not nx.is_connected(g):
        raise PreconditionViolated("compute_embedding needs a connected underlying graph")
    planar, cert = nx.check_planarity(g, counterexample=True)
    if not planar:
        raise NotPlanar("underlying graph is not planar", witness=sorted(map(tuple, map(sorted, cert.edges()))))
    return PlaneEmbedding.from_neighbour_lists({v: list(cert.neighbors_cw_order(v)) for v in d.vertices})


# ---------------------------------------------------------------------------
# Duals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    """Dual of a plane embedding.

    Node ``f`` is primal face ``f``; dual edge ``i`` crosses primal edge ``i``
    and dual dart ``d`` leaves the face on the left of primal dart ``d``.
    """

    primal: PlaneEmbedding
    embedding: PlaneEmbedding = field(repr=False)

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.embedding.vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.embedding.edges

    def primal_edge(self, dual_edge: int) -> int:
        return dual_edge

    def degree(self, node: int) -> int:
        return len(self.embedding.rotation[node])

    @cached_property
    def vertex_of_face(self) -> dict[int, int]:
        """Primal vertex surrounded by each face of the dual."""
        return {face.id: self.primal.tail(face.darts[0]) for face in self.embedding.faces}


def dual(e: PlaneEmbedding) -> DualGraph:
    face_of = e.face_of
    edges = tuple((face_of[2 * i], face_of[2 * i + 1]) for i in range(e.m))
    rotation = {face.id: face.darts for face in e.faces}
    return DualGraph(e, PlaneEmbedding(edges, rotation, 0))


def facial_cycle_of_vertex(e: PlaneEmbedding, dual_graph: DualGraph, v: int) -> Cycle:
    """Faces around ``v`` in rotation order, as a cycle of the dual."""
    darts = e.rotation[v]
    if len(darts) < 3:
        raise DegenerateLink(f"vertex {v} has degree {len(darts)} < 3")
    nodes = [e.face_of[d] for d in darts]
    if len(set(nodes)) != len(nodes):
        raise DegenerateLink(f"faces around vertex {v} repeat: {nodes}")
    cycle = _canonical_cycle(nodes, [d >> 1 for d in darts])
    for i, edge in enumerate(cycle.edges):
        a, b = dual_graph.edges[edge]
        assert {a, b} == {cycle.nodes[i], cycle.nodes[(i + 1) % len(cycle)]}
    return cycle


def cycle_sides(e: PlaneEmbedding, dual_cycle: Cycle | Iterable[int], anchor: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split the primal along the edges crossed by a dual cycle.

    Returns ``(inside, outside)`` where ``outside`` is the side holding ``anchor``.
    """
    cut = frozenset(dual_cycle.edges if isinstance(dual_cycle, Cycle) else dual_cycle)
    adjacency: dict[int, list[int]] = {v: [] for v in e.vertices}
    for i, (u, v) in enumerate(e.edges):
        if i not in cut:
            adjacency[u].append(v)
            adjacency[v].append(u)
    outside = _component_of(adjacency, anchor)
    rest = set(e.vertices) - outside
    if not rest:
        raise NotACut("dual cycle leaves the primal connected", cut=sorted(cut))
    inside = _component_of(adjacency, min(rest))
    if len(inside) != len(rest):
        raise NotACut("dual cycle splits the primal into more than two parts", cut=sorted(cut))
    return frozenset(inside), frozenset(outside)
