"""Acyclic 2-colourings of planar oriented graphs.

Every planar oriented graph without directed cycles of length at most 3
splits into two induced acyclic subgraphs.  This package builds such a
splitting constructively: it stellates the input into a triangulation,
recurses on separating triangles, and in the 4-connected case cuts the
triangulation along a cycle of the dual graph obtained from a Tutte path.
Every result is checked, and small instances are cross-examined against
brute-force oracles in :mod:`dichroma.oracle`.
"""

from .colour import (
    ApexInput,
    Trace,
    TrianglePrecolouring,
    colour_digirth4,
    colour_with_apex,
    combine_colourings,
    extend_on_triangle,
    extend_recursive,
)
from .decompose import blocks, find_separating_triangle, split_at_triangle, stellate
from .errors import DichromaError, InternalError, PreconditionViolated
from .graph_core import (
    INFINITE,
    Digraph,
    PlaneEmbedding,
    compute_embedding,
    cycle_sides,
    digirth,
    dual,
    facial_cycle_of_vertex,
    is_oriented,
    restrict_colouring,
    verify_colouring,
)
from .tutte import TuttePathQuery, check_certificate, find_tutte_path, h_components

__all__ = [
    "ApexInput",
    "Digraph",
    "DichromaError",
    "INFINITE",
    "InternalError",
    "PlaneEmbedding",
    "PreconditionViolated",
    "Trace",
    "TrianglePrecolouring",
    "TuttePathQuery",
    "blocks",
    "check_certificate",
    "colour_digirth4",
    "colour_with_apex",
    "combine_colourings",
    "compute_embedding",
    "cycle_sides",
    "digirth",
    "dual",
    "extend_on_triangle",
    "extend_recursive",
    "facial_cycle_of_vertex",
    "find_separating_triangle",
    "find_tutte_path",
    "h_components",
    "is_oriented",
    "restrict_colouring",
    "split_at_triangle",
    "stellate",
    "verify_colouring",
]
__version__ = "0.1.0"
