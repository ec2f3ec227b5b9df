"""Integer sequences: O-sequences, SI-sequences, differencing and integration.

An h-vector is stored as a plain tuple of ints indexed by degree.  Trailing
zeros are never kept, except that the zero vector is written ``(0,)``.
"""

from math import comb
from typing import NamedTuple, Sequence

from .errors import NotSISequence

HVector = tuple


def hvec(entries: Sequence[int]) -> HVector:
    """Normalize a sequence of ints into an h-vector (trailing zeros trimmed)."""
    out = [int(x) for x in entries]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


def parse_hvector(text: str) -> HVector:
    """Parse ``"1,4,10,14,10,4,1"``.  Raises ValueError on junk."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed integer list: {text!r}")
    return hvec(int(p) for p in parts)


def format_hvector(h: Sequence[int]) -> str:
    return ",".join(str(x) for x in h)


def is_zero(h: Sequence[int]) -> bool:
    return all(x == 0 for x in h)


def socle_degree(h: Sequence[int]) -> int:
    """Index of the last nonzero entry (-1 for the zero vector)."""
    h = hvec(h)
    return -1 if h == (0,) else len(h) - 1


def binomial_expansion(value: int, degree: int) -> list[tuple[int, int]]:
    """The degree-th Macaulay representation of value as (k, j) pairs.

    value = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j) with
    k_d > k_{d-1} > ... > k_j >= j >= 1.
    """
    if value < 0 or degree < 1:
        raise ValueError("need value >= 0 and degree >= 1")
    terms = []
    rest, j = value, degree
    while rest > 0 and j >= 1:
        k = j
        while comb(k + 1, j) <= rest:
            k += 1
        terms.append((k, j))
        rest -= comb(k, j)
        j -= 1
    return terms


def macaulay_bound(value: int, degree: int) -> int:
    """Largest admissible h_{degree+1} when h_degree = value."""
    return sum(comb(k + 1, j + 1) for k, j in binomial_expansion(value, degree))


def is_o_sequence(h: Sequence[int]) -> bool:
    h = hvec(h)
    if h == (0,):
        return True
    if h[0] != 1 or any(x < 0 for x in h):
        return False
    for i in range(1, len(h) - 1):
        if h[i + 1] > macaulay_bound(h[i], i):
            return False
    return True


def difference(h: Sequence[int]) -> HVector:
    """First difference (h_0, h_1 - h_0, ..., -h_s)."""
    h = hvec(h)
    if h == (0,):
        return h
    padded = list(h) + [0]
    return hvec([padded[0]] + [padded[i] - padded[i - 1] for i in range(1, len(padded))])


def integrate(d: Sequence[int]) -> HVector:
    """Running partial sums, truncated at the last nonzero partial sum."""
    sums, run = [], 0
    for x in d:
        run += x
        sums.append(run)
    return hvec(sums)


def si_failure(h: Sequence[int]) -> str | None:
    """Reason h is not an SI-sequence, or None if it is one."""
    h = hvec(h)
    if h == (0,) or h[0] != 1:
        return "h_0 must be 1"
    if any(x <= 0 for x in h):
        return "entries must be positive up to the socle degree"
    if h != h[::-1]:
        return "not symmetric"
    half = h[: (len(h) - 1) // 2 + 1]
    diff = [half[0]] + [half[i] - half[i - 1] for i in range(1, len(half))]
    if not is_o_sequence(diff) or any(x < 0 for x in diff):
        return f"first-half differences {format_hvector(diff)} are not an O-sequence"
    return None


def is_si_sequence(h: Sequence[int]) -> bool:
    return si_failure(h) is None


class SIParams(NamedTuple):
    c: int
    s: int
    t: int
    g: HVector


def si_params(h: Sequence[int], c: int | None = None) -> SIParams:
    """Codimension, socle degree, flat-start degree and the g-vector of h."""
    reason = si_failure(h)
    if reason is not None:
        raise NotSISequence(f"not an SI-sequence: {reason}")
    h = hvec(h)
    s = len(h) - 1
    padded = list(h) + [0]
    t = next(i for i in range(s + 1) if padded[i] >= padded[i + 1])
    g = hvec([1] + [h[i] - h[i - 1] for i in range(1, t + 1)])
    c_default = h[1] if s >= 1 else 0
    return SIParams(c_default if c is None else c, s, t, g)


def maximal_hvector(c: int, s: int, t: int) -> HVector:
    """Flat-topped SI-sequence: C(c-1+i, c-1) up to t, constant, then mirrored."""
    out = []
    for i in range(s + 1):
        k = min(i, t, s - i)
        out.append(comb(c - 1 + k, c - 1))
    return hvec(out)


def o_sequences(max_h1: int, max_len: int, max_entry: int | None = None):
    """Yield every O-sequence with h_1 <= max_h1 and length <= max_len.

    The zero vector is not included.  Sequences are generated depth-first using
    the Macaulay bound, so the list is complete.
    """

    def grow(prefix):
        yield hvec(prefix)
        if len(prefix) >= max_len:
            return
        i = len(prefix) - 1
        top = max_h1 if i == 0 else macaulay_bound(prefix[-1], i)
        if max_entry is not None:
            top = min(top, max_entry)
        for v in range(1, top + 1):
            yield from grow(prefix + [v])

    yield from grow([1])


def si_sequences(max_h1: int, max_s: int, max_entry: int = 20):
    """Yield every SI-sequence with h_1 <= max_h1, socle degree <= max_s."""
    seen = set()
    for s in range(max_s + 1):
        half = s // 2 + 1
        for g in o_sequences(max_h1, half):
            g = list(g) + [0] * (half - len(g))
            first = list(integrate(g))[:half]
            h = first + first[: s + 1 - half][::-1]
            h = hvec(h)
            if len(h) != s + 1 or max(h) > max_entry or (s >= 1 and h[1] > max_h1):
                continue
            if is_si_sequence(h) and h not in seen:
                seen.add(h)
                yield h
