"""
SI-sequences, lex-segment ideals and LOIMs
==========================================

Start from an h-vector, read off its parameters, and look at the monomial
objects the constructions are built from.
"""

from gorlink.monomials import decompose, lex_segment_ideal, loim, phi, render
from gorlink.sequences import is_o_sequence, is_si_sequence, si_failure, si_params

# A symmetric sequence can still fail: its first-half differences must grow
# no faster than Macaulay's bound allows.
bad = (1, 3, 6, 6, 7, 6, 6, 3, 1)
print(bad, is_si_sequence(bad), "|", si_failure(bad))

h = (1, 3, 5, 3, 1)
p = si_params(h)
print(h, "->", p)  # c = 3, s = 4, t = 2, g = (1, 2, 2)
print("g is an O-sequence:", is_o_sequence(p.g))

###############################################################################
# The lex-segment ideal of g in c - 1 = 2 variables, and its splitting by
# powers of z1.

J = lex_segment_ideal(p.g, 2)
print("J =", J.render())
d = decompose(J)
for j, (part, hp) in enumerate(zip(d.parts, d.hparts)):
    print(f"  z1^{j} * {part.render('z', start=2)}   h^{j} = {hp}")

###############################################################################
# Reversing exponents turns the standard monomials of J into the LOIM of g.

std = loim(p.g, 2)
print("LOIM:", [render(m) for m in std])
print("phi(z1^2) =", render(phi((2, 0))))
