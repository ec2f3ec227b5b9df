"""Graded Betti tables of quotient rings.

A table maps (i, j) to the rank of Tor_i(R/I, K) in internal degree j, so the
unit (0, 0) -> 1 is always present for a proper ideal.
"""

import json
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import DomainError, RegularityHypothesisViolated, SocleParity, SocleTooSmall
from .monomials import decompose, lex_segment_ideal
from .sequences import hvec, si_params


class BettiTable:
    def __init__(self, ranks=None):
        self.ranks = {}
        for (i, j), r in dict(ranks or {}).items():
            if r < 0:
                raise DomainError(f"negative rank at ({i}, {j})")
            if r:
                self.ranks[(int(i), int(j))] = int(r)

    def __getitem__(self, key) -> int:
        return self.ranks.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.ranks == other.ranks

    def __repr__(self) -> str:
        return f"BettiTable({dict(sorted(self.ranks.items()))})"

    def items(self):
        return sorted(self.ranks.items())

    @property
    def length(self) -> int:
        """Projective dimension (largest i with a nonzero rank)."""
        return max((i for i, _ in self.ranks), default=0)

    @property
    def regularity(self) -> int:
        """max (j - i) over the table, i.e. the regularity of R/I."""
        return max((j - i for i, j in self.ranks), default=0)

    def totals(self) -> list:
        out = [0] * (self.length + 1)
        for (i, _), r in self.ranks.items():
            out[i] += r
        return out

    def row(self, k: int) -> list:
        """Entries with j - i = k, one per column i."""
        return [self[(i, i + k)] for i in range(self.length + 1)]

    def euler(self) -> dict:
        """j -> sum_i (-1)^i rank(i, j)."""
        out: dict = {}
        for (i, j), r in self.ranks.items():
            out[j] = out.get(j, 0) + (-1) ** i * r
        return {j: v for j, v in out.items() if v}

    def to_json(self) -> str:
        return json.dumps({"entries": [[i, j, r] for (i, j), r in self.items()]})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        return cls({(i, j): r for i, j, r in json.loads(text)["entries"]})

    def diagram(self) -> str:
        """Macaulay-style layout: columns i, rows j - i, '-' for zero."""
        ncols = self.length + 1
        lines = ["; total: " + "".join(f"{x:6d}" for x in self.totals()) + " "]
        lines.append("; " + "-" * (6 * ncols + 8))
        for k in range(self.regularity + 1):
            cells = "".join(f"{x:6d}" if x else "     -" for x in self.row(k))
            lines.append(f";{k:6d}: " + cells + " ")
        return "\n".join(lines) + "\n"


def _shift(ranks: dict, di: int, dj: int) -> dict:
    return {(i + di, j + dj): r for (i, j), r in ranks.items()}


def _add(*tables: dict) -> dict:
    out: dict = {}
    for t in tables:
        for k, r in t.items():
            out[k] = out.get(k, 0) + r
    return out


@lru_cache(maxsize=None)
def _lex_quotient(h: tuple, c: int) -> tuple:
    """Betti numbers of T/J, J the lex-segment ideal of h in c variables."""
    if c == 1:
        return (((0, 0), 1), ((1, len(h)), 1))
    parts = decompose(lex_segment_ideal(h, c))
    # ideal tables: Tor_i(J) sits at (i - 1) in the quotient table
    i0 = {(i - 1, j): r for (i, j), r in _lex_quotient(parts.hparts[0], c - 1) if i >= 1}
    if parts.alpha == 1:
        colon = {(0, 0): 1}  # J : z_1 is the unit ideal
    else:
        n = max(len(p) + j - 1 for j, p in enumerate(parts.hparts) if j >= 1)
        hc = hvec(
            sum(p[s - j + 1] for j, p in enumerate(parts.hparts) if j >= 1 and 0 <= s - j + 1 < len(p))
            for s in range(n)
        )
        colon = {(i - 1, j): r for (i, j), r in _lex_quotient(hc, c) if i >= 1}
    # Tor(J) = Tor(J : z_1)(-1) + Tor_T(I_0 T/z_1), and the last term doubles
    # Tor over T/z_1 by the Koszul complex on z_1.
    ideal = _add(_shift(colon, 0, 1), i0, _shift(i0, 1, 1))
    quotient = _add({(0, 0): 1}, _shift(ideal, 1, 0))
    return tuple(sorted(quotient.items()))


def lex_betti(h: Sequence[int], c: int) -> BettiTable:
    """Betti table of T/J for the lex-segment ideal J with Hilbert function h."""
    return BettiTable(dict(_lex_quotient(hvec(h), c)))


def sum_linked_betti(tableX: BettiTable, c: int, regXunionY: int) -> BettiTable:
    """Betti table of R/(I_X + I_Y) for a geometric link X, Y of codimension c.

    Tor_i of the sum is Tor_i(R/I_X) plus the dual of Tor_{c-i+1}(R/I_X)
    twisted by reg(X u Y) + c - 1.
    """
    reg_x = tableX.regularity + 1
    if regXunionY < 2 * reg_x:
        raise RegularityHypothesisViolated(f"reg(X u Y) = {regXunionY} < 2 reg(X) = {2 * reg_x}")
    out = dict(tableX.ranks)
    for (i, j), r in tableX.ranks.items():
        key = (c + 1 - i, regXunionY + c - 1 - j)
        out[key] = out.get(key, 0) + r
    return BettiTable(out)


def gorenstein_max_betti(h: Sequence[int]) -> BettiTable:
    """beta_{i,j}(g, c-1) + beta_{c-i, s+c-j}(g, c-1)."""
    p = si_params(h)
    c = max(p.c, 2)
    B = lex_betti(p.g, c - 1)
    out: dict = {}
    for (i, j), r in B.ranks.items():
        out[(i, j)] = out.get((i, j), 0) + r
        key = (c - i, p.s + c - j)
        out[key] = out.get(key, 0) + r
    return BettiTable(out)


def closed_form_max_resolution(c: int, s: int, t: int, strict: bool = True) -> BettiTable:
    """alpha_i = C(c+t-1, i+t) C(t-1+i, t) in degree t+i, gamma_i = alpha_{c-i} in degree s-t+i.

    The formula is a resolution only for s = 2t or s >= 2t + 2.  With
    strict=False it is evaluated at s = 2t + 1 as well, giving the table the
    formula would predict there (which is not attained, see Boij's example).
    """
    if c < 1 or t < 1:
        raise DomainError("need c >= 1 and t >= 1")
    if s < 2 * t:
        raise SocleTooSmall(f"s = {s} < 2t = {2 * t}")
    if strict and s == 2 * t + 1:
        raise SocleParity("no closed form when s = 2t + 1")

    def alpha(i):
        return comb(c + t - 1, i + t) * comb(t - 1 + i, t)

    out = {(0, 0): 1, (c, s + c): 1}
    for i in range(1, c):
        out[(i, t + i)] = out.get((i, t + i), 0) + alpha(i)
        out[(i, s - t + i)] = out.get((i, s - t + i), 0) + alpha(c - i)
    return BettiTable(out)


def gorenstein_bound(h: Sequence[int], c: int | None = None) -> BettiTable:
    """Upper bound for Gorenstein algebras with the weak Lefschetz property.

    beta_{i,j}(g, c-1)                               if j <= s - t + i - 1
    beta_{i,j}(g, c-1) + beta_{c-i,s+c-j}(g, c-1)    if s - t + i <= j <= t + i
    beta_{c-i,s+c-j}(g, c-1)                         if j >= t + i + 1
    """
    p = si_params(h)
    c = max(p.c, 2) if c is None else c
    s, t = p.s, p.t
    B = lex_betti(p.g, c - 1)
    out = {}
    for i in range(c + 1):
        for j in range(0, s + c + 1):
            low = B[(i, j)] if j <= t + i else 0
            high = B[(c - i, s + c - j)] if j >= s - t + i else 0
            if low + high:
                out[(i, j)] = low + high
    return BettiTable(out)


def betti_upper_bound_check(table: BettiTable, h: Sequence[int], c: int, gorenstein: bool = False) -> bool:
    """Every rank is at most the lex-segment rank (or the Gorenstein bound)."""
    bound = gorenstein_bound(h, c) if gorenstein else lex_betti(h, c)
    return all(r <= bound[key] for key, r in table.ranks.items())
