"""Ground truth for the tests: brute force, exhaustive enumeration, generators.

Nothing here calls into the constructive colouring pipeline.  Acyclicity is
decided with bitmask peeling rather than :func:`graph_core.find_directed_cycle`
so the two checks stay independent.
"""

from __future__ import annotations

import itertools
import random
from importlib import resources
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from .errors import GenerationFailed, TooLarge
from .formats import read_planar_code
from .graph_core import Digraph, PlaneEmbedding
from .tutte import TuttePathQuery, certificate_for, check_certificate

TRIANGULATION = "triangulation"
ANY_PLANAR = "any_planar"


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    n: int
    digirth_min: int = 4
    shape: str = TRIANGULATION

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("instances need at least 3 vertices")
        if self.digirth_min not in (3, 4, 5):
            raise ValueError("digirth_min must be 3, 4 or 5")
        if self.shape not in (TRIANGULATION, ANY_PLANAR):
            raise ValueError(f"unknown shape {self.shape!r}")


# ---------------------------------------------------------------------------
# Brute-force colouring
# ---------------------------------------------------------------------------


def _masks(d: Digraph) -> tuple[list[int], list[int], dict[int, int]]:
    index = {v: i for i, v in enumerate(d.vertices)}
    succ = [0] * d.n
    pred = [0] * d.n
    for u, v in d.arcs:
        succ[index[u]] |= 1 << index[v]
        pred[index[v]] |= 1 << index[u]
    return succ, pred, index


def _acyclic(mask: int, succ: list[int], pred: list[int]) -> bool:
    """Peel sources and sinks; a nonempty remainder holds a directed cycle."""
    changed = True
    while mask and changed:
        changed = False
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if not pred[i] & mask or not succ[i] & mask:
                mask ^= low
                changed = True
    return mask == 0


def is_valid_two_colouring(d: Digraph, colouring) -> bool:
    succ, pred, index = _masks(d)
    ones = sum(1 << index[v] for v in d.vertices if colouring[v] == 1)
    full = (1 << d.n) - 1
    return _acyclic(ones, succ, pred) and _acyclic(full ^ ones, succ, pred)


def all_two_colourings(d: Digraph) -> Iterator[dict[int, int]]:
    """Every valid 2-colouring; bit ``i`` of the counter puts vertex ``i`` in colour 2."""
    if d.n > 24:
        raise TooLarge(f"2^{d.n} colourings is beyond the brute-force budget")
    succ, pred, _ = _masks(d)
    full = (1 << d.n) - 1
    for twos in range(1 << d.n):
        if _acyclic(full ^ twos, succ, pred) and _acyclic(twos, succ, pred):
            yield {v: 2 if twos >> i & 1 else 1 for i, v in enumerate(d.vertices)}


def brute_force_two_colouring(d: Digraph) -> dict[int, int] | None:
    return next(all_two_colourings(d), None)


# ---------------------------------------------------------------------------
# Orientations
# ---------------------------------------------------------------------------


def undirected_cycles(edges: list[tuple[int, int]], max_len: int) -> list[tuple[int, ...]]:
    """Simple cycles with at most ``max_len`` vertices, each reported once."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    out = []

    def walk(path):
        start, last = path[0], path[-1]
        for w in sorted(adj[last]):
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > start and w not in path and len(path) < max_len:
                walk(path + [w])

    for s in sorted(adj):
        walk([s])
    return out


def enumerate_orientations(g: nx.Graph | Iterable[tuple[int, int]], digirth_min: int = 3) -> Iterator[Digraph]:
    """All orientations of a simple graph with no directed cycle shorter than ``digirth_min``.

    Orientation number ``k`` reverses edge ``i`` (sorted ``(u < v)`` order) iff
    bit ``i`` of ``k`` is set; orientations are produced in increasing ``k``.
    """
    if isinstance(g, nx.Graph):
        nodes = sorted(g.nodes)
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    else:
        edges = sorted({(min(u, v), max(u, v)) for u, v in g})
        nodes = sorted({x for e in edges for x in e})
    m = len(edges)
    if m > 24:
        raise TooLarge(f"2^{m} orientations is beyond the enumeration budget")
    index = {e: i for i, e in enumerate(edges)}
    forbidden = []
    for cyc in undirected_cycles(edges, digirth_min - 1):
        mask = forward = 0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            i = index[(min(a, b), max(a, b))]
            mask |= 1 << i
            if a > b:
                forward |= 1 << i
        forbidden.append((mask, forward, mask ^ forward))
    for k in range(1 << m):
        if any(k & mask in (fw, bw) for mask, fw, bw in forbidden):
            continue
        arcs = tuple((v, u) if k >> i & 1 else (u, v) for i, (u, v) in enumerate(edges))
        yield Digraph(tuple(nodes), arcs)


def count_orientations_by_sampling(g: nx.Graph, digirth_min: int, samples: int, seed: int = 0) -> float:
    """Monte Carlo estimate of the number of orientations with digirth >= ``digirth_min``."""
    from .graph_core import digirth

    rng = random.Random(seed)
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    hits = 0
    for _ in range(samples):
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges]
        if digirth(Digraph(tuple(g.nodes), tuple(arcs))) >= digirth_min:
            hits += 1
    return hits / samples * 2 ** len(edges)


# ---------------------------------------------------------------------------
# Triangulations
# ---------------------------------------------------------------------------


def _k4_rotation() -> dict[int, list[int]]:
    return {0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]}


def _faces_of(rot: dict[int, list[int]]) -> list[tuple[int, int, int]]:
    """Triangles (a, b, c) with the face on the left of a -> b -> c."""
    out = set()
    for a in rot:
        for b in rot[a]:
            ring = rot[b]
            c = ring[(ring.index(a) + 1) % len(ring)]
            k = min((a, b, c), (b, c, a), (c, a, b))
            out.add(k)
    return sorted(out)


def _stellate_face(rot: dict[int, list[int]], face: tuple[int, int, int], s: int) -> None:
    a, b, c = face
    for x, y in ((a, b), (b, c), (c, a)):
        # face (x, y, z) sits at x just after z and before y: next(z->x) = x->y
        ring = rot[x]
        ring.insert(ring.index(y), s)
    rot[s] = [c, b, a]


def _flip(rot: dict[int, list[int]], a: int, b: int) -> bool:
    """Flip edge ab if the result stays a simple triangulation."""
    if len(rot[a]) <= 3 or len(rot[b]) <= 3:
        return False
    rb, ra = rot[b], rot[a]
    c = rb[(rb.index(a) + 1) % len(rb)]
    d = ra[(ra.index(b) + 1) % len(ra)]
    if c == d or d in rot[c]:
        return False
    ra.remove(b)
    rb.remove(a)
    rc, rd = rot[c], rot[d]
    rc.insert(rc.index(b) + 1, d)
    rd.insert(rd.index(a) + 1, c)
    return True


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> PlaneEmbedding:
    """Grow by stellating random faces from K4, then mix with random edge flips."""
    if n == 3:
        return PlaneEmbedding.from_neighbour_lists({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    rot = _k4_rotation()
    for s in range(4, n):
        _stellate_face(rot, rng.choice(_faces_of(rot)), s)
    flips = 2 * n if flips is None else flips
    for _ in range(flips):
        a = rng.randrange(n)
        _flip(rot, a, rng.choice(rot[a]))
    return PlaneEmbedding.from_neighbour_lists(rot)


def embedding_rotation(e: PlaneEmbedding) -> dict[int, list[int]]:
    return {v: list(e.neighbours(v)) for v in e.vertices}


def random_two_connected(n: int, rng: random.Random, keep: float = 0.6) -> PlaneEmbedding:
    """Random triangulation with edges deleted while the graph stays 2-connected."""
    rot = embedding_rotation(random_triangulation(n, rng))
    edges = sorted({(min(u, v), max(u, v)) for u in rot for v in rot[u]})
    rng.shuffle(edges)
    g = nx.Graph(edges)
    target = max(n, int(len(edges) * keep))
    for u, v in edges:
        if g.number_of_edges() <= target:
            break
        g.remove_edge(u, v)
        if nx.is_biconnected(g):
            rot[u].remove(v)
            rot[v].remove(u)
        else:
            g.add_edge(u, v)
    return PlaneEmbedding.from_neighbour_lists(rot)


def enumerate_triangulations(n: int) -> list[PlaneEmbedding]:
    """All plane triangulations on ``n`` vertices up to isomorphism.

    Explores the flip graph, which is connected, and keeps one
    representative per isomorphism class of the underlying graph
    (3-connected planar graphs have a unique embedding up to mirroring).
    """
    start = embedding_rotation(random_triangulation(n, random.Random(0), flips=0))
    reps: list[nx.Graph] = []
    out = []
    queue = [start]
    while queue:
        rot = queue.pop()
        g = nx.Graph([(u, v) for u in rot for v in rot[u]])
        if any(nx.faster_could_be_isomorphic(g, h) and nx.is_isomorphic(g, h) for h in reps):
            continue
        reps.append(g)
        out.append(PlaneEmbedding.from_neighbour_lists(rot))
        for a in sorted(rot):
            for b in sorted(rot[a]):
                if a < b:
                    nxt = {v: list(ws) for v, ws in rot.items()}
                    if _flip(nxt, a, b):
                        queue.append(nxt)
    out.sort(key=lambda e: sorted(len(e.rotation[v]) for v in e.vertices))
    return out


def bundled_triangulations(n_min: int = 4, n_max: int = 7) -> list[PlaneEmbedding]:
    """The shipped planar_code corpus: every plane triangulation on 4 to 7 vertices."""
    data = resources.files("dichroma").joinpath("data/triangulations_4_7.pc").read_bytes()
    return [e for e in read_planar_code(data) if n_min <= e.n <= n_max]


def brute_force_separating_triangles(e: PlaneEmbedding) -> list[tuple[int, int, int]]:
    """Pairwise adjacent triples whose removal disconnects the graph."""
    g = nx.Graph(e.edges)
    out = []
    for t in itertools.combinations(sorted(e.vertices), 3):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(t, 2)):
            rest = g.subgraph(set(g.nodes) - set(t))
            if rest.number_of_nodes() and not nx.is_connected(rest):
                out.append(t)
    return out


# ---------------------------------------------------------------------------
# Orientations with a digirth floor
# ---------------------------------------------------------------------------


def first_short_cycle(d: Digraph, limit: int) -> tuple[int, ...] | None:
    """First directed cycle of length < ``limit`` in lexicographic vertex order."""
    succ = d.successors

    def walk(path):
        for w in succ[path[-1]]:
            if w == path[0]:
                return tuple(path)
            if w > path[0] and w not in path and len(path) < limit - 1:
                found = walk(path + [w])
                if found:
                    return found
        return None

    for s in d.vertices:
        found = walk([s])
        if found:
            return found
    return None


def orient_with_digirth(edges: list[tuple[int, int]], n: int, digirth_min: int, rng: random.Random) -> Digraph:
    """Random orientation, repaired until no directed cycle is shorter than ``digirth_min``."""
    m = len(edges)
    for _ in range(20):
        arcs = {(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges}
        for _ in range(10 * m + 1):
            d = Digraph.from_arcs(n, sorted(arcs))
            cyc = first_short_cycle(d, digirth_min)
            if cyc is None:
                return d
            arc = min(zip(cyc, cyc[1:] + cyc[:1]))
            arcs.remove(arc)
            arcs.add(arc[::-1])
        rng = random.Random(rng.getrandbits(64))
    raise GenerationFailed(f"could not reach digirth >= {digirth_min}")


def random_instance(spec: InstanceSpec) -> tuple[Digraph, PlaneEmbedding]:
    rng = random.Random(spec.seed)
    if spec.shape == TRIANGULATION or spec.n < 4:
        e = random_triangulation(spec.n, rng)
    else:
        e = random_two_connected(spec.n, rng)
    d = orient_with_digirth(list(e.edges), spec.n, spec.digirth_min, rng)
    return d, e


def random_four_connected_triangulation(n: int, rng: random.Random, attempts: int = 10000) -> PlaneEmbedding:
    """Flip edges of separating triangles until none is left."""
    if n < 6:
        raise ValueError("4-connected triangulations need at least 6 vertices")
    rot = embedding_rotation(random_triangulation(n, rng))
    for _ in range(attempts):
        bad = _separating_triangles_of(rot)
        if not bad:
            return PlaneEmbedding.from_neighbour_lists(rot)
        x, y, z = rng.choice(bad)
        a, b = rng.choice([(x, y), (y, z), (x, z)])
        _flip(rot, a, b)
    raise GenerationFailed("no 4-connected triangulation reached")


def _separating_triangles_of(rot: dict[int, list[int]]) -> list[tuple[int, int, int]]:
    faces = {frozenset(f) for f in _faces_of(rot)}
    adj = {v: set(ws) for v, ws in rot.items()}
    out = []
    for x in sorted(adj):
        for y in sorted(adj[x]):
            if y > x:
                for z in sorted(adj[x] & adj[y]):
                    if z > y and frozenset((x, y, z)) not in faces:
                        out.append((x, y, z))
    return out


# ---------------------------------------------------------------------------
# Tutte paths
# ---------------------------------------------------------------------------


def enumerate_tutte_paths(q: TuttePathQuery) -> Iterator[tuple[int, ...]]:
    """Every simple ``u``-``v`` path through ``e`` that passes the certificate checker."""
    adj = q.graph.adjacency
    req = frozenset(q.e)

    def walk(path, used):
        x = path[-1]
        for y in sorted(adj[x]):
            if y in path:
                continue
            now = used or frozenset((x, y)) == req
            if y == q.v:
                if now:
                    yield tuple(path) + (y,)
                continue
            yield from walk(path + [y], now)

    for path in walk([q.u], False):
        if not check_certificate(q, certificate_for(q, path)):
            yield path


def random_tutte_queries(host: PlaneEmbedding, rng: random.Random, k: int) -> list[TuttePathQuery]:
    """Up to ``k`` distinct valid queries on ``host``: facial cycle, ``v`` and ``e`` on it, any ``u``."""
    faces = [f.boundary for f in host.faces if len(set(f.boundary)) == len(f)]
    seen = set()
    out = []
    for _ in range(20 * k):
        if len(out) == k:
            break
        cycle = rng.choice(faces)
        i = rng.randrange(len(cycle))
        e = (cycle[i], cycle[(i + 1) % len(cycle)])
        v = rng.choice(cycle)
        u = rng.choice([x for x in host.vertices if x != v])
        key = (cycle, u, v, e)
        if key not in seen:
            seen.add(key)
            out.append(TuttePathQuery(host, cycle, u, v, e))
    return out
