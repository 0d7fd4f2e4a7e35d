"""Search for a Tutte path and audit it."""

import random

from dichroma import dual, find_tutte_path, check_certificate
from dichroma.oracle import random_four_connected_triangulation, random_tutte_queries

rng = random.Random(1)
t = random_four_connected_triangulation(30, rng)
host = dual(t).embedding  # cubic, cyclically 4-edge-connected
q = random_tutte_queries(host, rng, 1)[0]
print("facial cycle:", q.cycle)
print(f"from {q.u} to {q.v} through {q.e}")

stats = {}
cert = find_tutte_path(q, stats=stats)
print("path:", cert.path)
print("expansions:", stats["expansions"], "restarts:", stats["restarts"])

# bridges of the path; at most 3 attachments each, 2 if they touch the cycle
for comp, touches in zip(cert.components, cert.contains_edge_of_cycle):
    if comp.internal_vertices:
        print(" bridge", sorted(comp.internal_vertices), "attached at", sorted(comp.attachments), "cycle" if touches else "")

print("violations:", check_certificate(q, cert))  # []
