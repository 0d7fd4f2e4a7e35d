"""Stellation, separating triangles and the recursive extension."""

from dichroma import Trace, TrianglePrecolouring, extend_recursive, find_separating_triangle, stellate
from dichroma import Digraph, compute_embedding, digirth
from dichroma.oracle import ANY_PLANAR, InstanceSpec, random_instance

# A directed 4-cycle has two square faces; stellation puts a sink in each
# and gives the octahedron, which has no separating triangle.
c4 = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
s, es, record = stellate(c4, compute_embedding(c4))
print("after stellation:", s.n, "vertices,", s.m, "arcs; sinks", sorted(record.added))
print("digirth before/after:", digirth(c4), digirth(s))
print("separating triangle:", find_separating_triangle(es))

# A random 2-connected instance stellates into something less regular.
d, e = random_instance(InstanceSpec(seed=0, n=9, digirth_min=4, shape=ANY_PLANAR))
s, es, record = stellate(d, e)
t = find_separating_triangle(es)
print("separating triangle:", t.vertices, "inside:", sorted(t.inside))

# split, colour the outside first, then the inside from the induced triangle colours
outer = es.faces[es.outer_face].boundary
trace = Trace()
c = extend_recursive(s, es, TrianglePrecolouring(outer, (1, 1, 1)), trace)
print("colouring of the original vertices:", {v: c[v] for v in d.vertices})
print("separators used:", trace.separators, " branches:", trace.two_colour_branch, trace.one_colour_branch)
