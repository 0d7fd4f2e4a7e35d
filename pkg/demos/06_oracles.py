"""The constructive colouring against exhaustive search on tiny inputs."""

from dichroma import colour_digirth4
from dichroma.oracle import all_two_colourings, brute_force_two_colouring, bundled_triangulations, enumerate_orientations

for e in bundled_triangulations(4, 6):
    orientations = list(enumerate_orientations(list(e.edges), 4))
    agree = 0
    for d in orientations:
        assert brute_force_two_colouring(d) is not None
        valid = [c for c in all_two_colourings(d)]
        agree += colour_digirth4(d, e) in valid
    print(f"n={e.n} m={e.m}: {len(orientations)} orientations of digirth >= 4, {agree} constructive colourings confirmed")
