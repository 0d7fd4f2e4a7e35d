"""Bridges of a subgraph and certified Tutte paths.

A Tutte path ``P`` with respect to a facial cycle ``C`` is a path whose
bridges (``P``-components) have at most three attachments each, and at most
two when the bridge contains an edge of ``C``.  A classical theorem on
plane graphs guarantees one from any ``u`` to any ``v`` on ``C`` through any
edge ``e`` of ``C`` when the host is 2-connected; ``find_tutte_path``
searches for it and ``check_certificate`` audits the result from scratch.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .errors import PreconditionViolated, SearchBudgetExceeded, SearchExhausted
from .graph_core import PlaneEmbedding

DEFAULT_SEARCH_BUDGET = 10**7

CHORD = "chord"
BRIDGE = "bridge"


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def search_budget() -> int:
    """Expansion cap; ``DICHROMA_SEARCH_BUDGET`` overrides the default."""
    raw = os.environ.get("DICHROMA_SEARCH_BUDGET")
    return int(raw) if raw else DEFAULT_SEARCH_BUDGET


@dataclass(frozen=True)
class HComponent:
    kind: str
    internal_vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    attachments: frozenset[int]


def h_components(
    edges: Iterable[tuple[int, int]], h_vertices: Iterable[int], h_edges: Iterable[tuple[int, int]] = ()
) -> list[HComponent]:
    """All bridges of ``H`` in the simple graph given by ``edges``.

    Chord edges come first (sorted), then bridges ordered by smallest internal vertex.
    """
    hv = frozenset(h_vertices)
    he = {_edge(*e) for e in h_edges}
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chords = []
    outer = []
    for u, v in {_edge(*e) for e in edges}:
        if (u, v) in he:
            continue
        if u in hv and v in hv:
            chords.append((u, v))
            continue
        outer.append((u, v))
        if u not in hv and v not in hv:
            parent[find(u)] = find(v)
        else:
            find(u if u not in hv else v)
    groups: dict[int, tuple[set, set, set]] = {}
    for u, v in outer:
        root = find(u if u not in hv else v)
        inner, es, att = groups.setdefault(root, (set(), set(), set()))
        es.add((u, v))
        for x in (u, v):
            (att if x in hv else inner).add(x)
    out = [HComponent(CHORD, frozenset(), frozenset([c]), frozenset(c)) for c in sorted(chords)]
    bridges = [HComponent(BRIDGE, frozenset(i), frozenset(es), frozenset(a)) for i, es, a in groups.values()]
    bridges.sort(key=lambda b: min(b.internal_vertices))
    return out + bridges


@dataclass(frozen=True)
class TuttePathQuery:
    """Find a path from ``u`` to ``v`` through ``e`` with respect to facial cycle ``cycle``."""

    graph: PlaneEmbedding
    cycle: tuple[int, ...]
    u: int
    v: int
    e: tuple[int, int]

    @property
    def cycle_edges(self) -> frozenset[tuple[int, int]]:
        c = self.cycle
        return frozenset(_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


@dataclass(frozen=True)
class TuttePathCertificate:
    path: tuple[int, ...]
    components: tuple[HComponent, ...]
    contains_edge_of_cycle: tuple[bool, ...]

    @property
    def path_edges(self) -> frozenset[tuple[int, int]]:
        p = self.path
        return frozenset(_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


def _is_facial(g: PlaneEmbedding, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    edges = {_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    for face in g.faces:
        if len(face) == k and set(face.boundary) == set(cycle):
            b = face.boundary
            if {_edge(b[i], b[(i + 1) % k]) for i in range(k)} == edges:
                return True
    return False


def _query_problems(q: TuttePathQuery) -> list[Violation]:
    out = []
    if not _is_facial(q.graph, q.cycle):
        out.append(Violation("query", f"cycle {q.cycle} is not a facial cycle"))
    if q.v not in q.cycle:
        out.append(Violation("query", f"endpoint {q.v} is not on the cycle"))
    if _edge(*q.e) not in q.cycle_edges:
        out.append(Violation("query", f"edge {q.e} is not on the cycle"))
    if q.u not in q.graph.rotation or q.u == q.v:
        out.append(Violation("query", f"start {q.u} must be a vertex other than {q.v}"))
    return out


def check_certificate(q: TuttePathQuery, cert: TuttePathCertificate) -> list[Violation]:
    """Audit ``cert`` against ``q``; an empty list means valid.

    Components are recomputed from the path; the stored ones are ignored.
    """
    out = _query_problems(q)
    path = cert.path
    if not path or path[0] != q.u or path[-1] != q.v:
        out.append(Violation("endpoints", f"path must run from {q.u} to {q.v}"))
    if len(set(path)) != len(path):
        out.append(Violation("simple", "path repeats a vertex"))
    for a, b in zip(path, path[1:]):
        if not q.graph.has_edge(a, b):
            out.append(Violation("adjacency", f"{a} and {b} are not adjacent"))
    if _edge(*q.e) not in cert.path_edges:
        out.append(Violation("required edge", f"path misses edge {q.e}"))
    out.extend(_condition_violations(q, path, cert.path_edges))
    return out


def _condition_violations(q: TuttePathQuery, path, path_edges) -> list[Violation]:
    out = []
    cycle_edges = q.cycle_edges
    for comp in h_components(q.graph.edges, path, path_edges):
        k = len(comp.attachments)
        if k > 3:
            out.append(Violation("condition (i)", f"component with {k} attachments {sorted(comp.attachments)}"))
        elif k > 2 and comp.edges & cycle_edges:
            out.append(Violation("condition (ii)", f"cycle component with {k} attachments {sorted(comp.attachments)}"))
    return out


def certificate_for(q: TuttePathQuery, path: Iterable[int]) -> TuttePathCertificate:
    path = tuple(path)
    cycle_edges = q.cycle_edges
    p_edges = {_edge(path[i], path[i + 1]) for i in range(len(path) - 1)}
    comps = tuple(h_components(q.graph.edges, path, p_edges))
    return TuttePathCertificate(path, comps, tuple(bool(c.edges & cycle_edges) for c in comps))


def _check_host(q: TuttePathQuery) -> None:
    g = q.graph
    if not g.is_simple():
        raise PreconditionViolated("Tutte-path hosts must be simple graphs")
    if g.n < 3 or not nx.is_biconnected(nx.Graph(g.edges)) or nx.Graph(g.edges).number_of_nodes() != g.n:
        raise PreconditionViolated("Tutte-path host is not 2-connected")
    problems = _query_problems(q)
    if problems:
        raise PreconditionViolated("; ".join(p.detail for p in problems))


def _luby(i: int) -> int:
    """The ``i``-th term (1-based) of the Luby restart sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while i != (1 << k) - 1:
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1
    return 1 << (k - 1)


class _Search:
    """One depth-first search; ``rng`` shuffles ties in the move ordering."""

    def __init__(self, q: TuttePathQuery, rng: random.Random | None):
        self.q = q
        self.rng = rng
        names = sorted(q.graph.vertices)
        index = {v: i for i, v in enumerate(names)}
        self.names = names
        self.size = len(names)
        self.adj = [sorted(index[w] for w in q.graph.adjacency[v]) for v in names]
        self.cycle_pairs = {_edge(index[a], index[b]) for a, b in q.cycle_edges}
        self.on_cycle = [any(_edge(a, b) in self.cycle_pairs for b in self.adj[a]) for a in range(self.size)]
        self.target = index[q.v]
        self.start = index[q.u]
        self.req = _edge(index[q.e[0]], index[q.e[1]])
        self.on_path = [False] * self.size
        self.path: list[int] = []
        self.expansions = 0

    def touches_cycle(self, a: int, b: int) -> bool:
        return self.on_cycle[a] and self.on_cycle[b] and _edge(a, b) in self.cycle_pairs

    def bridge_ok(self, part, known_on=frozenset()) -> bool:
        """Lower-bound check for a set of vertices that will lie in one final bridge."""
        att = set()
        touches = False
        for a in part:
            for b in self.adj[a]:
                if self.on_path[b] or b in known_on:
                    att.add(b)
                if not touches and self.touches_cycle(a, b):
                    touches = True
        return len(att) <= 3 and not (touches and len(att) > 2)

    def components(self, allowed) -> list[list[int]]:
        seen = set()
        out = []
        for root in sorted(allowed):
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            k = 0
            while k < len(comp):
                for b in self.adj[comp[k]]:
                    if b in allowed and b not in seen:
                        seen.add(b)
                        comp.append(b)
                k += 1
            out.append(comp)
        return out

    def analyse(self, x: int, used_req: bool) -> tuple[set[int], dict[int, int]] | None:
        """Candidate region for the rest of the path, or None if the prefix is dead.

        Returns the vertices that may still carry the path (besides ``x``) and
        their number of usable neighbours.
        """
        adj, on_path, target, req = self.adj, self.on_path, self.target, self.req
        free = {a for a in range(self.size) if not on_path[a]}
        live = None
        for comp in self.components(free):
            if target in comp:
                live = set(comp)
            elif not self.bridge_ok(comp):
                return None
        if live is None:
            return None

        # vertices that cannot be interior to the remaining path
        region = set(live)
        avail = {a: sum(1 for b in adj[a] if b in region or b == x) for a in region}
        off: set[int] = set()
        queue = [a for a in region if avail[a] < (1 if a == target else 2)]
        while queue:
            a = queue.pop()
            if a in off:
                continue
            if a == target:
                return None
            off.add(a)
            region.discard(a)
            for b in adj[a]:
                if b in region:
                    avail[b] -= 1
                    if avail[b] < (1 if b == target else 2):
                        queue.append(b)
        if not any(b in region for b in adj[x]):
            return None

        # cut vertices of region + x separating x from the target
        known_on, hanging = self.route_cuts(x, region)
        if known_on is None:
            return None
        off |= hanging
        region -= hanging
        if not used_req and not all(a == x or a in region for a in req):
            return None
        for comp in self.components(off):
            if not self.bridge_ok(comp, known_on):
                return None
        return region, avail

    def route_cuts(self, x: int, region: set[int]):
        adj, target = self.adj, self.target
        disc = {x: 0}
        low = {x: 0}
        parent = {x: -1}
        sub = {x: 1}
        order = [x]
        stack = [(x, iter(adj[x]))]
        while stack:
            a, it = stack[-1]
            for b in it:
                if b not in region and b != x:
                    continue
                if b not in disc:
                    parent[b] = a
                    disc[b] = low[b] = len(order)
                    sub[b] = 1
                    order.append(b)
                    stack.append((b, iter(adj[b])))
                    break
                if b != parent[a] and disc[b] < low[a]:
                    low[a] = disc[b]
            else:
                stack.pop()
                p = parent[a]
                if p >= 0:
                    sub[p] += sub[a]
                    if low[a] < low[p]:
                        low[p] = low[a]
        if target not in disc:
            return None, None
        route = [target]
        while route[-1] != x:
            route.append(parent[route[-1]])
        route.reverse()
        on_route = set(route)
        children: dict[int, list[int]] = {}
        for y, p in parent.items():
            if p >= 0 and p in on_route and y not in on_route:
                children.setdefault(p, []).append(y)
        known_on = {x, target}
        hanging: set[int] = set()
        for i in range(1, len(route)):
            c = route[i]
            if c != target and low[route[i + 1]] < disc[c]:
                continue
            known_on.add(c)
            for y in children.get(c, ()):
                if low[y] >= disc[c]:
                    hanging.update(order[disc[y] : disc[y] + sub[y]])
        return known_on, hanging

    def order_moves(self, x: int, options: list[int], avail: dict[int, int]) -> list[int]:
        req, cyc = self.req, self.cycle_pairs
        if self.rng is not None:
            self.rng.shuffle(options)
            return sorted(options, key=lambda y: (_edge(x, y) != req, avail[y]))
        return sorted(options, key=lambda y: (_edge(x, y) != req, avail[y], _edge(x, y) not in cyc, y))

    def run(self, budget: int) -> list[int] | None:
        self.path = [self.start]
        self.on_path = [False] * self.size
        self.on_path[self.start] = True
        self.budget = budget
        return self.extend(False)

    def extend(self, used_req: bool) -> list[int] | None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise _OutOfBudget
        path, target, req = self.path, self.target, self.req
        x = path[-1]
        found = self.analyse(x, used_req)
        if found is None:
            return None
        region, avail = found
        for y in self.order_moves(x, [y for y in self.adj[x] if y in region], avail):
            now_used = used_req or _edge(x, y) == req
            if y == target:
                if not now_used:
                    continue
                named = [self.names[i] for i in path] + [self.names[y]]
                p_edges = {_edge(named[i], named[i + 1]) for i in range(len(named) - 1)}
                if not _condition_violations(self.q, named, p_edges):
                    return named
                continue
            path.append(y)
            self.on_path[y] = True
            result = self.extend(now_used)
            if result is not None:
                return result
            path.pop()
            self.on_path[y] = False
        return None


_RESTART_UNIT = 64


class _OutOfBudget(Exception):
    pass


def find_tutte_path(
    q: TuttePathQuery, budget: int | None = None, stats: dict | None = None, restarts: bool = True
) -> TuttePathCertificate:
    """Backtracking search over simple paths from ``q.u``, pruned by final bridges.

    With the path ending at ``x``, its remainder runs from ``x`` to ``q.v``
    inside the component ``L`` of ``G - P`` holding ``q.v``.  The following
    are already (parts of) final bridges and must pass both conditions:

    * every other component of ``G - P``;
    * vertices of ``L`` left with too few usable neighbours to be interior
      to the remainder, found by propagation to a fixpoint;
    * blocks hanging off cut vertices that separate ``x`` from ``q.v``,
      since the remainder must cross those vertices and cannot come back.

    None of these cuts discards a prefix that extends to a Tutte path.  Search
    time is heavy-tailed, so runs with shuffled move orders are restarted
    under caps that follow the Luby schedule.  Every run is complete on its
    own, so the first one to end inside its cap settles the query.
    """
    _check_host(q)
    budget = search_budget() if budget is None else budget
    spent = 0
    rounds = 0
    found = None
    try:
        while True:
            rounds += 1
            # every run is complete, so one that ends inside its cap settles the query
            cap = budget - spent if not restarts else min(_RESTART_UNIT * _luby(rounds), budget - spent)
            search = _Search(q, random.Random(rounds) if rounds > 1 else None)
            try:
                found = search.run(cap)
                spent += search.expansions
                break
            except _OutOfBudget:
                spent += cap
                if spent >= budget:
                    raise SearchBudgetExceeded(
                        "Tutte-path search exceeded its budget", budget=budget, query=q
                    ) from None
    finally:
        if stats is not None:
            stats["expansions"] = stats.get("expansions", 0) + spent
            stats["restarts"] = stats.get("restarts", 0) + rounds - 1
    if found is None:
        raise SearchExhausted("no Tutte path found, although every valid query on a 2-connected plane host has one", query=q)
    return certificate_for(q, found)
