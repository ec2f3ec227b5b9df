"""
Linkage arithmetic
==================

h-vectors of linked schemes and of the sum of their ideals, including the
complete-intersection table that shows why Gorenstein links are needed.
"""

from gorlink.hilbert import ci_hvector, link_table, sum_linked_hvector

print(sum_linked_hvector((1, 2, 1), (1, 2)))  # two points on a conic

cvec = ci_hvector((3, 3, 4))
rows = link_table(cvec, (1, 3, 6, 4))
for name, row in rows.items():
    print(f"{name:>4}", row)

###############################################################################
# With a complete intersection of type (3,3,4) the middle entry n of
# (1,4,10,n,10,4,1) is 10 + a - b, and a is at most 8.

reach = sorted({sum_linked_hvector(cvec, (1, 3, 6, a, b))[3] for a in range(9) for b in range(a + 1)})
print("reachable n:", [n for n in reach if n >= 14])
