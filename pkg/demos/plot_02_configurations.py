"""
Building configurations from labels
===================================

Each monomial of a LOIM becomes a prime component, a set of labels M_i, L_i
standing for linear forms.  The union is a reduced ACM configuration, and one
more step gives an arithmetically Gorenstein one.
"""

from gorlink.configurations import (
    build_g_max,
    build_gorenstein,
    build_z,
    is_generalized_stick_figure,
    relabel_g_max,
)
from gorlink.hilbert import hvector_of

Z = build_z((1, 2, 2), 2, 2)
for comp in Z.sorted_components():
    print(" ", comp)
print("h(Z) =", hvector_of(Z), " stick figure:", is_generalized_stick_figure(Z))

###############################################################################
# The maximal Gorenstein configuration in codimension 4 with socle degree 3.

G = build_g_max(4, 3, 1)
print(len(G), "components, h =", hvector_of(G))

###############################################################################
# Arbitrary SI-sequences.  The h-vector is recomputed by counting standard
# monomials and, independently, from the faces of the Stanley-Reisner complex.

for h in [(1, 3, 5, 3, 1), (1, 4, 7, 7, 4, 1), (1, 2, 3, 3, 2, 1)]:
    X = build_gorenstein(h)
    print(h, "->", len(X), "components, h =", hvector_of(X))

###############################################################################
# The relabelled maximal configuration is a different scheme: one prime of
# G_3(1,3,5,3,1) is missing from it.

X = build_gorenstein((1, 3, 5, 3, 1))
R = relabel_g_max(3, 4, 2)
print("only in G_3(h):", sorted(X.components - R.components))
