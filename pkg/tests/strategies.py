"""Hypothesis strategies for h-vectors."""

from hypothesis import strategies as st

from gorlink.sequences import hvec, integrate, macaulay_bound


@st.composite
def o_sequences(draw, max_h1=4, max_len=5, max_entry=30):
    h = [1]
    if max_len > 1:
        h.append(draw(st.integers(0, max_h1)))
    while len(h) < max_len and h[-1] > 0:
        top = min(macaulay_bound(h[-1], len(h) - 1), max_entry)
        h.append(draw(st.integers(0, top)))
    return hvec(h)


@st.composite
def si_sequences(draw, max_h1=4, max_s=6):
    """Symmetric sequences whose first half is the integral of an O-sequence."""
    s = draw(st.integers(0, max_s))
    half = s // 2 + 1
    g = list(draw(o_sequences(max_h1=max_h1, max_len=half)))
    g = g + [0] * (half - len(g))
    first = list(integrate(g)) + [0] * half
    first = first[:half]
    return hvec(first + first[: s + 1 - half][::-1])
