"""
Extremal Betti tables
=====================

Betti numbers of lex-segment ideals by recursion, the Gorenstein tables built
from them, and a check against Koszul homology of the realized ideal.
"""

from gorlink import oracle
from gorlink.betti import BettiTable, closed_form_max_resolution, gorenstein_max_betti, lex_betti
from gorlink.configurations import build_gorenstein

print(lex_betti((1, 2, 2), 2).diagram())

h = (1, 4, 10, 10, 4, 1)
print(gorenstein_max_betti(h).diagram())

# The closed formula gives the same table, though for s = 2t + 1 it is only a
# prediction (Boij's generic algebra has totals 1 10 18 10 1).
print(closed_form_max_resolution(4, 5, 2, strict=False) == gorenstein_max_betti(h))

###############################################################################
# Koszul homology over Q on the squarefree ideal of G_c(h).

h = (1, 3, 4, 3, 1)
X = build_gorenstein(h)
I = oracle.ideal_of_primes(X.n_m + X.n_l, X.prime_variable_sets())
print(BettiTable(oracle.koszul_betti(I)) == gorenstein_max_betti(h))
