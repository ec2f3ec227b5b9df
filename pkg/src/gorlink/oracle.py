"""Brute-force checks that share no code path with the constructions.

Everything here works from monomial ideals or facet lists by definition:
counting standard monomials, multiplying out intersections of primes,
Koszul homology for graded Betti numbers and Reisner's criterion for the
Cohen-Macaulay property.  Ranks are exact (integer elimination over Q).
"""

from itertools import combinations, combinations_with_replacement, product
from math import gcd

import numpy as np

from .errors import ContextMismatch, ScaleExceeded
from .monomials import MonomialIdeal, divides, lcm, minimalize

MAX_VARS = 10
MAX_CUTOFF = 12


# -- monomial ideal algebra -----------------------------------------------------


def _is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(e <= 1 for g in ideal.gens for e in g)


def _to_mask(m) -> int:
    return sum(1 << k for k, e in enumerate(m) if e)


def _from_mask(mask: int, nvars: int) -> tuple:
    return tuple((mask >> k) & 1 for k in range(nvars))


def _minimal_masks(masks) -> list:
    out: list = []
    for m in sorted(set(masks), key=lambda x: bin(x).count("1")):
        if not any(g & ~m == 0 for g in out):
            out.append(m)
    return out


def _same_context(a: MonomialIdeal, b: MonomialIdeal):
    if a.nvars != b.nvars:
        raise ContextMismatch(f"{a.nvars} variables vs {b.nvars}")


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Generated by the lcms of pairs of generators."""
    _same_context(a, b)
    if _is_squarefree(a) and _is_squarefree(b):
        masks = _minimal_masks(_to_mask(f) | _to_mask(g) for f in a.gens for g in b.gens)
        return MonomialIdeal(a.nvars, frozenset(_from_mask(m, a.nvars) for m in masks))
    return MonomialIdeal(a.nvars, minimalize(lcm(f, g) for f in a.gens for g in b.gens))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_context(a, b)
    return MonomialIdeal(a.nvars, minimalize(a.gens | b.gens))


def colon(a: MonomialIdeal, var: int) -> MonomialIdeal:
    """I : x_var, generated by the generators with one factor x_var removed."""
    gens = []
    for g in a.gens:
        g = list(g)
        if g[var] > 0:
            g[var] -= 1
        gens.append(tuple(g))
    return MonomialIdeal(a.nvars, minimalize(gens))


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same_context(a, b)
    return a.gens == b.gens


def prime_ideal(nvars: int, variables) -> MonomialIdeal:
    gens = []
    for v in variables:
        e = [0] * nvars
        e[v] = 1
        gens.append(tuple(e))
    return MonomialIdeal(nvars, frozenset(gens))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, frozenset([(0,) * nvars]))


def ideal_of_primes(nvars: int, prime_sets) -> MonomialIdeal:
    """Intersection of the primes generated by the given sets of variables.

    No primes at all means the empty scheme, i.e. the unit ideal.
    """
    prime_sets = list(prime_sets)
    if not prime_sets:
        return unit_ideal(nvars)
    ideal = prime_ideal(nvars, prime_sets[0])
    for p in prime_sets[1:]:
        ideal = intersect(ideal, prime_ideal(nvars, p))
    return ideal


def minimal_primes(ideal: MonomialIdeal) -> list:
    """Minimal primes of a squarefree monomial ideal (minimal vertex covers)."""
    if not _is_squarefree(ideal):
        raise ValueError("minimal_primes expects a squarefree monomial ideal")
    supports = [_to_mask(g) for g in ideal.gens]
    if 0 in supports:
        return []
    covers = [0]
    for s in supports:
        nxt = []
        for cov in covers:
            if cov & s:
                nxt.append(cov)
            else:
                nxt.extend(cov | (1 << k) for k in range(ideal.nvars) if (s >> k) & 1)
        covers = _minimal_masks(nxt)
    return sorted(
        (frozenset(k for k in range(ideal.nvars) if (m >> k) & 1) for m in covers),
        key=lambda p: sorted(p),
    )


# -- Hilbert functions ------------------------------------------------------------

_MONOMIAL_CACHE: dict = {}


def _monomial_array(nvars: int, d: int) -> np.ndarray:
    key = (nvars, d)
    if key not in _MONOMIAL_CACHE:
        rows = []
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            rows.append(e)
        _MONOMIAL_CACHE[key] = np.array(rows, dtype=np.int16).reshape(len(rows), nvars)
    return _MONOMIAL_CACHE[key]


def standard_monomials(ideal: MonomialIdeal, cutoff: int) -> list:
    """Number of monomials outside the ideal in each degree 0..cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    gens = np.array(sorted(ideal.gens), dtype=np.int16).reshape(len(ideal.gens), ideal.nvars)
    dims = []
    for d in range(cutoff + 1):
        mons = _monomial_array(ideal.nvars, d)
        alive = np.ones(len(mons), dtype=bool)
        for g in gens:
            if g.sum() <= d:
                alive &= ~(mons >= g).all(axis=1)
        dims.append(int(alive.sum()))
    return dims


def hilbert_to_h(dims, dim: int) -> tuple:
    """Difference a Hilbert function prefix ``dim`` times."""
    out = list(dims)
    for _ in range(dim):
        out = [out[0]] + [out[k] - out[k - 1] for k in range(1, len(out))]
    return tuple(out)


# -- exact linear algebra ---------------------------------------------------------


def exact_rank(rows) -> int:
    """Rank over Q of an integer matrix given as sparse rows {col: value}."""
    pivots: dict = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                pivots[col] = r
                break
            p = pivots[col]
            a, b = p[col], r[col]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - b * v
            r = {k: v for k, v in new.items() if v}
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {k: v // g for k, v in r.items()}
    return len(pivots)


# -- Koszul homology ----------------------------------------------------------------


def koszul_betti(ideal: MonomialIdeal, cutoff: int | None = None) -> dict:
    """Graded Betti numbers {(i, j): rank} of R/I by Koszul homology.

    In each multidegree a, the Koszul complex of R/I has a basis indexed by the
    subsets S of supp(a) for which x^(a - S) lies outside I.  Only multidegrees
    below the lcm of all generators can carry homology.
    """
    n = ideal.nvars
    if n > MAX_VARS:
        raise ScaleExceeded(f"{n} variables exceeds the cap of {MAX_VARS}")
    box = [0] * n
    for g in ideal.gens:
        box = [max(x, y) for x, y in zip(box, g)]
    if cutoff is None:
        cutoff = sum(box)
    if cutoff > MAX_CUTOFF:
        raise ScaleExceeded(f"cutoff {cutoff} exceeds the cap of {MAX_CUTOFF}")
    gens = list(ideal.gens)

    def outside(m):
        return not any(divides(g, m) for g in gens)

    table: dict = {}
    for a in product(*(range(b + 1) for b in box)):
        j = sum(a)
        if j > cutoff:
            continue
        support = [k for k in range(n) if a[k] > 0]
        basis: dict = {}
        for i in range(len(support) + 1):
            cells = []
            for S in combinations(support, i):
                m = list(a)
                for k in S:
                    m[k] -= 1
                if outside(m):
                    cells.append(S)
            basis[i] = {S: idx for idx, S in enumerate(cells)}
        ranks = {}
        for i in range(1, len(support) + 1):
            rows = []
            for S in basis[i]:
                row = {}
                for pos, k in enumerate(S):
                    T = S[:pos] + S[pos + 1:]
                    col = basis[i - 1].get(T)
                    if col is not None:
                        row[col] = (-1) ** pos
                rows.append(row)
            ranks[i] = exact_rank(rows)
        for i in range(len(support) + 1):
            h = len(basis[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if h:
                table[(i, j)] = table.get((i, j), 0) + h
    return table


# -- Reisner's criterion -------------------------------------------------------------


def _faces(facets) -> set:
    out = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def reduced_homology_ranks(faces) -> dict:
    """Reduced rational homology dims {dim: rank} of a complex given by all faces."""
    if not faces:
        return {}
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        for f in by_dim.get(d, []):
            row = {}
            for pos in range(len(f)):
                row[index[d - 1][f[:pos] + f[pos + 1:]]] = (-1) ** pos
            rows.append(row)
        ranks[d] = exact_rank(rows)
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reisner_cm(complex_or_facets, max_vertices: int = 14) -> bool:
    """Reduced homology of every link vanishes below the link's dimension."""
    facets = getattr(complex_or_facets, "facets", complex_or_facets)
    facets = [frozenset(f) for f in facets]
    verts = set().union(*facets) if facets else set()
    if len(verts) > max_vertices:
        raise ScaleExceeded(f"{len(verts)} vertices exceeds the cap of {max_vertices}")
    faces = _faces(facets)
    for F in faces:
        Fs = set(F)
        link = {
            tuple(x for x in G if x not in Fs)
            for G in faces
            if Fs <= set(G)
        }
        link_dim = max(len(G) for G in link) - 1
        hom = reduced_homology_ranks(link)
        if any(d < link_dim for d in hom):
            return False
    return True
