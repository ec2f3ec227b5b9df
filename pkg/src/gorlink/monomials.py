"""Monomials, lex-segment ideals, their splitting by powers of z_1, and LOIMs.

A monomial is a tuple of exponents.  In the z-context the variables are
z_1 > ... > z_c (lex order); in the y-context the variables are y_1, ..., y_c
with the reverse lexicographic order <_r.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import CodimTooSmall, ContextMismatch, NotLexSegment, NotOSequence
from .sequences import HVector, hvec, is_o_sequence

Monomial = tuple


def degree(m: Monomial) -> int:
    return sum(m)


def monomials_of_degree(c: int, d: int) -> list[Monomial]:
    """All degree-d monomials in c variables."""
    out = []
    for combo in combinations_with_replacement(range(c), d):
        e = [0] * c
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def lex_key(m: Monomial):
    """Sort key for z_1 > z_2 > ...: a larger key is lex-larger."""
    return tuple(m)


def revlex_key(m: Monomial):
    """Sort key for <_r: a < b iff the last nonzero entry of a - b is negative."""
    return tuple(reversed(m))


def deglex_key(m: Monomial):
    return (degree(m), lex_key(m))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def phi(m: Monomial) -> Monomial:
    """z_1^{a_1}...z_c^{a_c} -> y_1^{a_c}...y_c^{a_1}."""
    return tuple(reversed(m))


def render(m: Monomial, var: str = "y", start: int = 1) -> str:
    parts = []
    for i, e in enumerate(m, start=start):
        if e == 1:
            parts.append(f"{var}{i}")
        elif e > 1:
            parts.append(f"{var}{i}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(gens: Iterable[Monomial]) -> frozenset:
    """Drop every generator divisible by another one."""
    out: list[Monomial] = []
    for m in sorted(set(gens), key=degree):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return frozenset(out)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: frozenset

    @classmethod
    def of(cls, nvars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(x) for x in g) for g in gens]
        if any(len(g) != nvars for g in gens):
            raise ContextMismatch("generator length differs from the variable count")
        return cls(nvars, minimalize(gens))

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def sorted_gens(self) -> list[Monomial]:
        return sorted(self.gens, key=lambda m: (degree(m), [-x for x in m]))

    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def initial_degree(self) -> int | None:
        return min((degree(g) for g in self.gens), default=None)

    def render(self, var: str = "z", start: int = 1) -> str:
        return "(" + ", ".join(render(g, var, start) for g in self.sorted_gens()) + ")"


def _check_lex_input(h: Sequence[int], c: int) -> HVector:
    h = hvec(h)
    if h == (0,) or not is_o_sequence(h):
        raise NotOSequence(f"not an O-sequence: {h}")
    if len(h) > 1 and h[1] > c:
        raise CodimTooSmall(f"h_1 = {h[1]} exceeds the number of variables {c}")
    return h


def lex_segment_ideal(h: Sequence[int], c: int) -> MonomialIdeal:
    """Artinian lex-segment ideal in c variables with standard-monomial counts h."""
    h = _check_lex_input(h, c)
    gens = []
    for d in range(len(h) + 1):
        mons = sorted(monomials_of_degree(c, d), key=lex_key)  # ascending lex
        keep = h[d] if d < len(h) else 0
        gens.extend(mons[keep:])
    ideal = MonomialIdeal.of(c, gens)
    for d in range(len(h)):
        std = sum(1 for m in monomials_of_degree(c, d) if m not in ideal)
        if std != h[d]:
            raise NotOSequence(f"no lex-segment ideal has these counts (degree {d})")
    return ideal


def standard_count(ideal: MonomialIdeal, d: int) -> int:
    return sum(1 for m in monomials_of_degree(ideal.nvars, d) if m not in ideal)


def hilbert_of_artinian(ideal: MonomialIdeal) -> HVector:
    """Standard-monomial counts of an Artinian monomial ideal."""
    out, d = [], 0
    while True:
        n = standard_count(ideal, d)
        if n == 0:
            return hvec(out)
        out.append(n)
        d += 1


def is_lex_segment(ideal: MonomialIdeal, upto: int) -> bool:
    """Every degree piece up to ``upto`` is an initial lex segment."""
    for d in range(upto + 1):
        mons = sorted(monomials_of_degree(ideal.nvars, d), key=lex_key, reverse=True)
        inside = [m in ideal for m in mons]
        if any(not a and b for a, b in zip(inside, inside[1:])):
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    alpha: int
    parts: tuple  # MonomialIdeals in the c-1 variables z_2..z_c
    hparts: tuple  # their h-vectors


def decompose(J: MonomialIdeal) -> Decomposition:
    """Split J = sum_j z_1^j I_j with I_j in the variables z_2..z_c."""
    c = J.nvars
    alpha = J.initial_degree()
    if alpha is None or c < 1:
        raise NotLexSegment("the zero ideal has no decomposition")
    top = max(degree(g) for g in J.gens)
    if not is_lex_segment(J, top):
        raise NotLexSegment("ideal is not a lex-segment ideal")
    parts, hparts = [], []
    for j in range(alpha):
        gens = []
        for d in range(top + 1):
            for m in monomials_of_degree(c - 1, d):
                if (j,) + m in J:
                    gens.append(m)
        part = MonomialIdeal.of(c - 1, gens)
        if c > 1 and not is_lex_segment(part, top):
            raise NotLexSegment(f"part I_{j} is not lex-segment")
        parts.append(part)
        hparts.append(hilbert_of_artinian(part) if c > 1 else hvec([1]))
    return Decomposition(alpha, tuple(parts), tuple(hparts))


def decomposition_hvector_check(h: Sequence[int], d: Decomposition) -> bool:
    """h(s) = sum_j h^j(s - j) for all s."""
    h = hvec(h)
    span = max([len(h)] + [len(p) + j for j, p in enumerate(d.hparts)])
    for s in range(span + 1):
        lhs = h[s] if s < len(h) else 0
        rhs = 0
        for j, p in enumerate(d.hparts):
            if 0 <= s - j < len(p):
                rhs += p[s - j]
        if lhs != rhs:
            return False
    return True


def loim(h: Sequence[int], c: int) -> list[Monomial]:
    """Smallest h_i monomials of each degree i under <_r, in ascending <_r order."""
    h = _check_lex_input(h, c)
    out = []
    for d, count in enumerate(h):
        out.extend(sorted(monomials_of_degree(c, d), key=revlex_key)[:count])
    return sorted(out, key=revlex_key)
