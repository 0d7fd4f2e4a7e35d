"""Text and binary file formats.

Digraph text format, one graph per file::

    n m
    u v          (m arc lines, 0-indexed)
    rotation     (optional block)
    w1 w2 ...    (n lines: clockwise neighbours of vertex i)

Colouring files hold one ``<vertex> <colour>`` line per vertex, sorted.
``planar_code`` is the binary corpus format of plantri: a ``>>planar_code<<``
header, then per graph a byte ``n`` and, for each vertex, its clockwise
neighbours (1-indexed) closed by a 0 byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .graph_core import Digraph, PlaneEmbedding

PLANAR_CODE_HEADER = b">>planar_code<<"


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_digraph(text: str) -> tuple[Digraph, PlaneEmbedding | None]:
    """Read the text format; the embedding is None without a rotation block."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines:
        raise ParseError("empty digraph file")
    head = _ints(lines[0][1], lines[0][0])
    if len(head) != 2 or min(head) < 0:
        raise ParseError("first line must be 'n m'")
    n, m = head
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} arc lines, found {len(lines) - 1}")
    arcs = []
    for lineno, line in lines[1 : 1 + m]:
        pair = _ints(line, lineno)
        if len(pair) != 2 or not all(0 <= x < n for x in pair):
            raise ParseError(f"line {lineno}: bad arc {line!r}")
        arcs.append(tuple(pair))
    try:
        d = Digraph.from_arcs(n, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rest = lines[1 + m :]
    if not rest:
        return d, None
    if rest[0][1] != "rotation" or len(rest) != n + 1:
        raise ParseError("trailing content must be a 'rotation' block with n lines")
    adjacency = {}
    for v, (lineno, line) in enumerate(rest[1:]):
        adjacency[v] = _ints(line, lineno)
    edges = {(min(u, v), max(u, v)) for u, v in arcs}
    listed = {(min(u, v), max(u, v)) for u, ws in adjacency.items() for v in ws}
    if edges != listed or any(len(set(ws)) != len(ws) for ws in adjacency.values()):
        raise ParseError("rotation block does not list each arc once at both ends")
    try:
        return d, PlaneEmbedding.from_neighbour_lists(adjacency)
    except ValueError as exc:
        raise ParseError(f"rotation block is not a plane embedding: {exc}") from None


def format_digraph(d: Digraph, embedding: PlaneEmbedding | None = None) -> str:
    if d.vertices != tuple(range(d.n)):
        raise ValueError("the text format needs vertices 0..n-1")
    out = [f"{d.n} {d.m}"]
    out += [f"{u} {v}" for u, v in sorted(d.arcs)]
    if embedding is not None:
        out.append("rotation")
        out += [" ".join(map(str, embedding.neighbours(v))) for v in range(d.n)]
    return "\n".join(out) + "\n"


def parse_colouring(text: str) -> dict[int, int]:
    colouring = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        pair = _ints(line, lineno)
        if len(pair) != 2 or pair[1] not in (1, 2):
            raise ParseError(f"line {lineno}: expected '<vertex> <colour 1|2>'")
        if pair[0] in colouring:
            raise ParseError(f"line {lineno}: vertex {pair[0]} coloured twice")
        colouring[pair[0]] = pair[1]
    return colouring


def format_colouring(colouring: dict[int, int]) -> str:
    return "".join(f"{v} {colouring[v]}\n" for v in sorted(colouring))


def read_planar_code(data: bytes) -> list[PlaneEmbedding]:
    """Decode a planar_code stream (header optional) into embeddings."""
    if data.startswith(PLANAR_CODE_HEADER):
        data = data[len(PLANAR_CODE_HEADER) :]
    out = []
    pos = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise ParseError("planar_code graph with 0 vertices (long format is not supported)")
        adjacency = {}
        for v in range(n):
            ws = []
            while True:
                if pos >= len(data):
                    raise ParseError("truncated planar_code stream")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise ParseError(f"neighbour {b} out of range for n = {n}")
                ws.append(b - 1)
            adjacency[v] = ws
        try:
            out.append(PlaneEmbedding.from_neighbour_lists(adjacency))
        except (ValueError, KeyError) as exc:
            raise ParseError(f"planar_code graph {len(out)} is not a plane embedding: {exc}") from None
    return out


def write_planar_code(embeddings) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for e in embeddings:
        vs = sorted(e.vertices)
        if vs != list(range(len(vs))) or len(vs) > 255:
            raise ValueError("planar_code needs vertices 0..n-1 with n < 256")
        out.append(len(vs))
        for v in vs:
            out.extend(w + 1 for w in e.neighbours(v))
            out.append(0)
    return bytes(out)


@dataclass
class RunReport:
    """Summary of one ``colour`` run, written as ``key: value`` lines."""

    n: int
    m: int
    digirth: int | float
    colouring: dict[int, int]
    valid: bool
    wall_time: float
    trace: dict = field(default_factory=dict)
    v0: int | None = None

    def to_text(self) -> str:
        digirth = "infinite" if self.digirth == float("inf") else str(self.digirth)
        rows = [
            ("n", self.n),
            ("m", self.m),
            ("digirth", digirth),
            ("mode", "apex" if self.v0 is not None else "digirth4"),
            ("v0", "-" if self.v0 is None else self.v0),
        ]
        rows += sorted(self.trace.items())
        rows += [
            ("colour_1", sum(1 for c in self.colouring.values() if c == 1)),
            ("colour_2", sum(1 for c in self.colouring.values() if c == 2)),
            ("verification", "valid" if self.valid else "invalid"),
            ("wall_time_s", f"{self.wall_time:.3f}"),
        ]
        return "".join(f"{k}: {v}\n" for k, v in rows)
