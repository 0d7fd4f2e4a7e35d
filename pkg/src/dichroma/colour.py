"""Constructive 2-colouring of planar digraphs.

The base case cuts a 4-connected triangulation along a cycle of its dual
obtained from a Tutte path and colours the two sides differently.  Separating
triangles are handled by splitting and recursing, blocks are coloured
independently and glued at cut vertices.  Every returned colouring has been
verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .decompose import (
    blocks,
    find_separating_triangle,
    separating_triangles,
    split_at_triangle,
    stellate,
)
from .errors import (
    ColouringsDisagree,
    DigirthTooSmall,
    InternalVerificationFailed,
    MergedInvalid,
    NotACut,
    NotOriented,
    NotPlanar,
    NotTriangulation,
    OverlapNotTournament,
    PreconditionViolated,
)
from .graph_core import (
    Colouring,
    Digraph,
    PlaneEmbedding,
    compute_embedding,
    cycle_sides,
    digirth,
    dual,
    facial_cycle_of_vertex,
    is_oriented,
    verify_colouring,
)
from .tutte import TuttePathQuery, find_tutte_path


@dataclass(frozen=True)
class TrianglePrecolouring:
    triangle: tuple[int, int, int]
    colours: tuple[int, int, int]

    def __post_init__(self):
        if len(set(self.triangle)) != 3 or any(c not in (1, 2) for c in self.colours):
            raise ValueError(f"bad precolouring {self}")

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.triangle, self.colours))


@dataclass(frozen=True)
class ApexInput:
    digraph: Digraph
    v0: int


@dataclass
class Trace:
    """Counters and choices recorded while colouring one instance."""

    blocks: int = 0
    stellation_vertices: int = 0
    separators: int = 0
    tutte_queries: int = 0
    tutte_expansions: int = 0
    tutte_restarts: int = 0
    two_colour_branch: int = 0
    one_colour_branch: int = 0
    apex_base: int = 0
    fallbacks: int = 0
    branch_b_choices: list = field(default_factory=list)

    @property
    def fallback_engaged(self) -> bool:
        return self.fallbacks > 0

    def as_dict(self) -> dict:
        out = {k: v for k, v in vars(self).items() if k != "branch_b_choices"}
        out["branch_b_choices"] = " ".join(f"{u}/{w}" for u, w in self.branch_b_choices) or "-"
        out["fallback_engaged"] = str(self.fallback_engaged).lower()
        return out


def _tutte(q: TuttePathQuery, trace: Trace | None):
    stats: dict = {}
    cert = find_tutte_path(q, stats=stats)
    if trace is not None:
        trace.tutte_queries += 1
        trace.tutte_expansions += stats["expansions"]
        trace.tutte_restarts += stats["restarts"]
    return cert


def _require_valid(d: Digraph, c: Colouring, what: str) -> dict[int, int]:
    result = verify_colouring(d, c)
    if not result:
        raise InternalVerificationFailed(f"{what} produced a monochromatic cycle", witness=result.witness, digraph=d)
    return dict(c)


# ---------------------------------------------------------------------------
# Merging
# ---------------------------------------------------------------------------


def combine_colourings(d1: Digraph, c1: Colouring, d2: Digraph, c2: Colouring, overlap) -> dict[int, int]:
    """Union of two colourings that agree on a shared tournament."""
    overlap = tuple(sorted(overlap))
    for d in (d1, d2):
        if not set(overlap) <= set(d.vertices):
            raise OverlapNotTournament(f"overlap {overlap} is not inside both digraphs")
    arcs1 = {(u, v) for u, v in itertools.permutations(overlap, 2) if d1.has_arc(u, v)}
    arcs2 = {(u, v) for u, v in itertools.permutations(overlap, 2) if d2.has_arc(u, v)}
    if arcs1 != arcs2:
        raise OverlapNotTournament("the two digraphs disagree on the overlap")
    for u, v in itertools.combinations(overlap, 2):
        if ((u, v) in arcs1) == ((v, u) in arcs1):
            raise OverlapNotTournament(f"overlap pair {u}, {v} is not joined by exactly one arc")
    for v in overlap:
        if c1[v] != c2[v]:
            raise ColouringsDisagree(f"vertex {v} has colour {c1[v]} and {c2[v]}")
    merged = {**dict(c1), **dict(c2)}
    union = Digraph(tuple(set(d1.vertices) | set(d2.vertices)), tuple(d1.arc_set | d2.arc_set))
    result = verify_colouring(union, merged)
    if not result:
        if not verify_colouring(d1, c1) or not verify_colouring(d2, c2):
            raise PreconditionViolated("an input colouring is already invalid")
        raise MergedInvalid("merged colouring has a monochromatic cycle", witness=result.witness)
    return merged


# ---------------------------------------------------------------------------
# Precoloured outer triangle
# ---------------------------------------------------------------------------


def _check_triangle_input(d: Digraph, e: PlaneEmbedding, pre: TrianglePrecolouring) -> None:
    if not e.is_triangulation():
        raise NotTriangulation("expected a plane triangulation")
    if set(e.faces[e.outer_face].boundary) != set(pre.triangle):
        raise PreconditionViolated(f"outer face is not the precoloured triangle {pre.triangle}")
    if set(d.vertices) != set(e.vertices) or {frozenset(a) for a in d.arcs} != {frozenset(x) for x in e.edges}:
        raise PreconditionViolated("digraph and embedding describe different graphs")
    if not is_oriented(d):
        raise NotOriented("digraph has a digon")
    if digirth(d) < 4:
        raise DigirthTooSmall("digirth must be at least 4")


def extend_on_triangle(
    d: Digraph, e: PlaneEmbedding, pre: TrianglePrecolouring, trace: Trace | None = None
) -> dict[int, int]:
    """Extend a precoloured outer triangle of a 4-connected triangulation."""
    _check_triangle_input(d, e, pre)
    if e.n > 3 and find_separating_triangle(e) is not None:
        raise PreconditionViolated("triangulation has a separating triangle; use extend_recursive")
    return _extend_base(d, e, pre, trace)


def _extend_base(d: Digraph, e: PlaneEmbedding, pre: TrianglePrecolouring, trace: Trace | None) -> dict[int, int]:
    if e.n == 3:
        return _require_valid(d, pre.as_dict(), "triangle precolouring")
    if len(set(pre.colours)) == 2:
        return _two_colour_case(d, e, pre, trace)
    return _one_colour_case(d, e, pre, trace)


def _outer_dual_faces(e: PlaneEmbedding, a: int, b: int, c: int) -> tuple[int, int, int, int]:
    """Outer face and the faces across bc, ac, ab from it."""
    t = e.outer_face

    def across(x, y):
        i = e.edge_id(x, y)
        f0, f1 = e.face_of[2 * i], e.face_of[2 * i + 1]
        return f1 if f0 == t else f0

    return t, across(b, c), across(a, c), across(a, b)


def _two_colour_case(d, e, pre, trace):
    colour = pre.as_dict()
    # a carries the colour used once on the triangle
    (a,) = [x for x in pre.triangle if list(pre.colours).count(colour[x]) == 1]
    b, c = [x for x in pre.triangle if x != a]
    t, _, b_star, c_star = _outer_dual_faces(e, a, b, c)
    h = dual(e)
    around_a = facial_cycle_of_vertex(e, h, a)
    q = TuttePathQuery(h.embedding, around_a.nodes, u=b_star, v=t, e=(t, c_star))
    cert = _tutte(q, trace)
    cut = [h.embedding.edge_id(x, y) for x, y in zip(cert.path, cert.path[1:])]
    cut.append(e.edge_id(a, c))  # dual edge b* t*
    inside, outside = cycle_sides(e, cut, anchor=b)
    if a not in inside or c not in outside:
        raise NotACut("dual cycle does not separate a from b and c", triangle=(a, b, c), cut=cut)
    out = {v: colour[a] for v in inside}
    out.update({v: colour[b] for v in outside})
    for face in e.faces:
        x, y, z = face.boundary
        if out[x] == out[y] == out[z] and (d.has_arc(x, y) and d.has_arc(y, z) and d.has_arc(z, x)
                                            or d.has_arc(y, x) and d.has_arc(z, y) and d.has_arc(x, z)):
            raise InternalVerificationFailed("monochromatic directed facial triangle", face=face.boundary)
    if trace is not None:
        trace.two_colour_branch += 1
    return _require_valid(d, out, "two-colour case")


def _one_colour_case(d, e, pre, trace):
    a, b, c = pre.triangle
    same = pre.colours[0]
    t, a_star, b_star, c_star = _outer_dual_faces(e, a, b, c)
    h = dual(e)
    rest = h.embedding.restrict(set(h.nodes) - {t})
    boundary = next(
        f.boundary for f in rest.faces if {a_star, b_star, c_star} <= set(f.boundary) and len(set(f.boundary)) == len(f)
    )

    def cycle_neighbours(x):
        i = boundary.index(x)
        return sorted({boundary[i - 1], boundary[(i + 1) % len(boundary)]})

    last_error = None
    for u, w in itertools.product(cycle_neighbours(a_star), cycle_neighbours(c_star)):
        if {c_star, w} == {a_star, u}:
            continue
        q = TuttePathQuery(rest, boundary, u=a_star, v=u, e=(c_star, w))
        cert = _tutte(q, trace)
        cut = [h.embedding.edge_id(x, y) for x, y in zip(cert.path, cert.path[1:])]
        cut.append(h.embedding.edge_id(u, a_star))
        inside, outside = cycle_sides(e, cut, anchor=a)
        if b not in outside or c not in outside:
            last_error = NotACut("cycle separates the precoloured triangle", cut=cut)
            continue
        out = {v: 3 - same for v in inside}
        out.update({v: same for v in outside})
        if verify_colouring(d, out):
            if trace is not None:
                trace.one_colour_branch += 1
                trace.branch_b_choices.append((u, w))
            return out
        last_error = InternalVerificationFailed("one-colour case produced a monochromatic cycle", choice=(u, w))
    raise last_error or InternalVerificationFailed("no admissible neighbour choice in the one-colour case")


def extend_recursive(
    d: Digraph, e: PlaneEmbedding, pre: TrianglePrecolouring, trace: Trace | None = None
) -> dict[int, int]:
    """Extend a precoloured outer triangle of any triangulation with digirth >= 4."""
    _check_triangle_input(d, e, pre)
    return _extend(d, e, pre, trace)


def _extend(d, e, pre, trace):
    if e.n == 3:
        return _extend_base(d, e, pre, trace)
    t = find_separating_triangle(e)
    if t is None:
        return _extend_base(d, e, pre, trace)
    if trace is not None:
        trace.separators += 1
    (d0, e0), (d1, e1) = split_at_triangle(d, e, t)
    c0 = _extend(d0, e0, pre, trace)
    inner = TrianglePrecolouring(t.vertices, tuple(c0[v] for v in t.vertices))
    c1 = _extend(d1, e1, inner, trace)
    return combine_colourings(d0, c0, d1, c1, t.vertices)


# ---------------------------------------------------------------------------
# Apex vertex
# ---------------------------------------------------------------------------


def _directed_triangles(d: Digraph) -> list[tuple[int, int, int]]:
    succ = d.successors
    out = []
    for x in d.vertices:
        for y in succ[x]:
            for z in succ[y]:
                if x < y and x < z and d.has_arc(z, x):
                    out.append((x, y, z))
    return out


def _apex(d: Digraph, e: PlaneEmbedding, v0: int, trace: Trace | None) -> dict[int, int]:
    if e.n == 3:
        return _require_valid(d, {v: 2 if v == v0 else 1 for v in e.vertices}, "apex triangle")
    seps = separating_triangles(e)
    if not seps:
        return _apex_base(d, e, v0, trace)
    clear = [t for t in seps if v0 not in t.vertices]
    if not clear:
        if trace is not None:
            trace.fallbacks += 1
        found = backtracking_colouring(d)
        if found is None:
            raise InternalVerificationFailed("exhaustive search found no 2-colouring", digraph=d)
        return found
    t = min(clear, key=lambda s: s.vertices)
    if trace is not None:
        trace.separators += 1
    (d0, e0), (d1, e1) = split_at_triangle(d, e, t)
    if v0 in t.inside:
        (da, ea), (db, eb) = (d1, e1), (d0, e0.with_outer_face(e0.find_face(t.vertices)))
    else:
        (da, ea), (db, eb) = (d0, e0), (d1, e1)
    ca = _apex(da, ea, v0, trace)
    pre = TrianglePrecolouring(t.vertices, tuple(ca[v] for v in t.vertices))
    cb = _extend(db, eb, pre, trace)
    return combine_colourings(da, ca, db, cb, t.vertices)


def _apex_base(d, e, v0, trace):
    h = dual(e)
    ring = facial_cycle_of_vertex(e, h, v0)
    k = len(ring)
    for i in range(k):
        u, v, w = ring.nodes[i], ring.nodes[(i + 1) % k], ring.nodes[(i + 2) % k]
        q = TuttePathQuery(h.embedding, ring.nodes, u=u, v=v, e=(v, w))
        cert = _tutte(q, trace)
        cut = [h.embedding.edge_id(x, y) for x, y in zip(cert.path, cert.path[1:])]
        cut.append(ring.edges[i])  # dual edge u* v*
        inside, outside = cycle_sides(e, cut, anchor=v0)
        out = {x: 1 for x in inside}
        out.update({x: 2 for x in outside})
        if verify_colouring(d, out):
            if trace is not None:
                trace.apex_base += 1
            return out
    raise InternalVerificationFailed("no apex cut produced a valid colouring", v0=v0, digraph=d)


def backtracking_colouring(d: Digraph, fixed: Colouring | None = None) -> dict[int, int] | None:
    """Complete search for a 2-colouring, assigning vertices in breadth-first order.

    A vertex may take colour ``k`` unless it closes a directed cycle through
    already coloured vertices of colour ``k``.
    """
    fixed = dict(fixed or {})
    g = d.underlying_graph()
    order = [v for v in fixed]
    for comp_root in sorted(d.vertices):
        if comp_root not in order:
            order.extend(v for v in nx.bfs_tree(g, comp_root) if v not in order)
    colour: dict[int, int] = {}
    succ = d.successors

    def closes_cycle(v, k):
        stack = [w for w in succ[v] if colour.get(w) == k]
        seen = set(stack)
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y == v:
                    return True
                if y not in seen and colour.get(y) == k:
                    seen.add(y)
                    stack.append(y)
        return False

    def assign(i):
        if i == len(order):
            return True
        v = order[i]
        for k in ([fixed[v]] if v in fixed else [1, 2]):
            if not closes_cycle(v, k):
                colour[v] = k
                if assign(i + 1):
                    return True
                del colour[v]
        return False

    return dict(colour) if assign(0) else None


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def _block_embedding(block: Digraph, embedding: PlaneEmbedding | None) -> PlaneEmbedding:
    if embedding is None:
        return compute_embedding(block)
    return embedding.restrict(block.vertices)


def _check_planar(d: Digraph, embedding: PlaneEmbedding | None) -> None:
    if embedding is not None:
        if {frozenset(a) for a in d.arcs} != {frozenset(x) for x in embedding.edges}:
            raise PreconditionViolated("embedding does not match the digraph")
        return
    planar, _ = nx.check_planarity(d.underlying_graph())
    if not planar:
        raise NotPlanar("underlying graph is not planar")


def _colour_blocks(d: Digraph, embedding, colour_block, trace) -> dict[int, int]:
    parts = blocks(d)
    if trace is not None:
        trace.blocks += len(parts)
    done: dict[int, int] = {}
    union = Digraph((), ())
    pending = [(bd, colour_block(bd)) for bd, _ in parts]
    while pending:
        idx = next((i for i, (bd, _) in enumerate(pending) if set(bd.vertices) & done.keys()), 0)
        bd, bc = pending.pop(idx)
        overlap = set(bd.vertices) & done.keys()
        if overlap:
            (x,) = overlap
            if bc[x] != done[x]:
                bc = {v: 3 - k for v, k in bc.items()}
        done = combine_colourings(union, done, bd, bc, overlap)
        union = Digraph(tuple(set(union.vertices) | set(bd.vertices)), tuple(union.arc_set | bd.arc_set))
    for v in d.vertices:
        done.setdefault(v, 1)
    return _require_valid(d, done, "block merge")


def _stellated(block: Digraph, embedding, trace):
    ds, es, record = stellate(block, _block_embedding(block, embedding))
    if trace is not None:
        trace.stellation_vertices += len(record.added)
    return ds, es


def _colour_block_digirth4(block: Digraph, embedding, trace) -> dict[int, int]:
    if block.n == 2:
        return {v: 1 for v in block.vertices}
    ds, es = _stellated(block, embedding, trace)
    outer = es.faces[es.outer_face].boundary
    c = _extend(ds, es, TrianglePrecolouring(tuple(outer), (1, 1, 1)), trace)
    return {v: c[v] for v in block.vertices}


def colour_digirth4(d: Digraph, embedding: PlaneEmbedding | None = None, trace: Trace | None = None) -> dict[int, int]:
    """2-colour a planar oriented graph of digirth at least 4.

    ``embedding`` may supply a plane embedding of the underlying graph;
    otherwise one is computed.
    """
    if not is_oriented(d):
        raise NotOriented("digraph has a digon")
    if digirth(d) < 4:
        raise DigirthTooSmall(f"digirth is {digirth(d)}, need at least 4")
    _check_planar(d, embedding)
    return _colour_blocks(d, embedding, lambda b: _colour_block_digirth4(b, embedding, trace), trace)


def colour_with_apex(a: ApexInput, embedding: PlaneEmbedding | None = None, trace: Trace | None = None) -> dict[int, int]:
    """2-colour a planar oriented graph whose directed triangles all use ``a.v0``."""
    d, v0 = a.digraph, a.v0
    if v0 not in d.vertices:
        raise PreconditionViolated(f"v0 = {v0} is not a vertex")
    if not is_oriented(d):
        raise NotOriented("digraph has a digon")
    bad = [t for t in _directed_triangles(d) if v0 not in t]
    if bad:
        raise PreconditionViolated(f"directed triangle {bad[0]} avoids v0 = {v0}")
    _check_planar(d, embedding)

    def colour_block(block):
        if v0 not in block.vertices:
            return _colour_block_digirth4(block, embedding, trace)
        if block.n == 2:
            return {v: 1 for v in block.vertices}
        ds, es = _stellated(block, embedding, trace)
        c = _apex(ds, es, v0, trace)
        return {v: c[v] for v in block.vertices}

    return _colour_blocks(d, embedding, colour_block, trace)
