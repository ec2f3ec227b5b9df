"""
Billera-Lee spheres
===================

The boundary of a shellable Billera-Lee ball is a simplicial sphere whose
Stanley-Reisner ideal is the Gorenstein configuration ideal.
"""

import numpy as np

from gorlink.simplicial import billera_lee_ball, boundary_complex, faces, h_vector, polytope_check

bl = billera_lee_ball((1, 3, 5, 3, 1), "polytope")
sphere = boundary_complex(bl.complex)
print("ball facets:", len(bl.complex.facets), " sphere facets:", len(sphere.facets))
print("f =", faces(sphere), " h =", h_vector(sphere))

###############################################################################
# Vertex degrees of the sphere.

counts = np.zeros(sphere.n_vertices, dtype=int)
for f in sphere.facets:
    counts[list(f)] += 1
print("facets per vertex:", counts)

for h in [(1, 3, 3, 1), (1, 4, 4, 1), (1, 3, 6, 3, 1)]:
    r = polytope_check(h)
    print(h, r["primes_match"], r["shelling"], r["f_vector"])
