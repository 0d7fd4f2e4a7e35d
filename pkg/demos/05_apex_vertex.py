"""Directed triangles are fine as long as they all share one vertex."""

from dichroma import ApexInput, Digraph, Trace, colour_with_apex, digirth, verify_colouring

# wheel: hub 0, rim 1..5 directed cyclically, spokes alternating in and out
rim = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
spokes = [(0, 1), (2, 0), (0, 3), (4, 0), (0, 5)]
w = Digraph.from_arcs(6, rim + spokes)
print("digirth:", digirth(w))  # 3, e.g. 0 -> 1 -> 2 -> 0

trace = Trace()
c = colour_with_apex(ApexInput(w, v0=0), trace=trace)
print("colouring:", c, "valid:", bool(verify_colouring(w, c)))
print("apex cuts:", trace.apex_base, "fallback:", trace.fallback_engaged)
