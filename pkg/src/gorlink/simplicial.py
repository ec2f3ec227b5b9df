"""Simplicial complexes, Stanley-Reisner ideals and the Billera-Lee complexes.

Vertices are integers 0..n.  Facets are kept as sorted tuples in a fixed
order, because the order matters for shellings.  The vertex v_k corresponds
to the u-position k+1, hence to the label M_{k/2} (k even) or L_{(k-1)/2}
(k odd).
"""

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .configurations import Configuration, Label, beta_bar, build_gorenstein
from .errors import DomainError, NotPure
from .monomials import loim
from .sequences import hvec, is_o_sequence, is_si_sequence, si_failure, si_params


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple  # sorted vertex tuples, in a meaningful order

    @classmethod
    def of(cls, n_vertices: int, facets) -> "SimplicialComplex":
        out, seen = [], set()
        for f in facets:
            f = tuple(sorted(set(f)))
            if any(v < 0 or v >= n_vertices for v in f):
                raise DomainError(f"facet {f} uses a vertex outside 0..{n_vertices - 1}")
            if f not in seen:
                seen.add(f)
                out.append(f)
        sets = [set(f) for f in out]
        for a in range(len(sets)):
            for b in range(len(sets)):
                if a != b and sets[a] < sets[b]:
                    raise DomainError(f"facet {out[a]} lies inside facet {out[b]}")
        return cls(n_vertices, tuple(out))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def reordered(self, order: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.n_vertices, tuple(self.facets[k] for k in order))


# -- faces and f/h-vectors --------------------------------------------------------


def face_masks(cx: SimplicialComplex) -> set:
    """All faces (including the empty face) as vertex bitmasks."""
    seen: set = set()
    for f in cx.facets:
        verts = list(f)
        for k in range(len(verts) + 1):
            for sub in combinations(verts, k):
                seen.add(sum(1 << v for v in sub))
    return seen


def faces(cx: SimplicialComplex) -> tuple:
    """f-vector (f_{-1}, f_0, ..., f_{d-1}); the void complex gives ()."""
    if not cx.facets:
        return ()
    counts = [0] * (cx.dim + 2)
    for m in face_masks(cx):
        counts[bin(m).count("1")] += 1
    return tuple(counts)


def f_to_h(f: Sequence[int]) -> tuple:
    """sum_j h_j z^j = sum_j f_{j-1} z^j (1 - z)^{d-j}, where d = len(f) - 1."""
    f = list(f)
    if not f:
        return (0,)
    d = len(f) - 1
    h = [0] * (d + 1)
    for j, fj in enumerate(f):
        for k in range(d - j + 1):
            h[j + k] += fj * comb(d - j, k) * (-1) ** k
    return hvec(h)


def h_to_f(h: Sequence[int], d: int) -> tuple:
    """Inverse of f_to_h for a (d-1)-dimensional complex."""
    h = list(h)
    if len(h) > d + 1:
        raise DomainError(f"h has length {len(h)} > d + 1 = {d + 1}")
    h = h + [0] * (d + 1 - len(h))
    # f_{j-1} = sum_{i <= j} C(d - i, j - i) h_i
    return tuple(sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))


def h_vector(cx: SimplicialComplex) -> tuple:
    return f_to_h(faces(cx))


# -- Stanley-Reisner correspondence --------------------------------------------------


def sr_ideal(cx: SimplicialComplex) -> list:
    """Minimal primes of the Stanley-Reisner ideal: complements of the facets."""
    allv = frozenset(range(cx.n_vertices))
    return sorted((allv - frozenset(f) for f in cx.facets), key=sorted)


def complex_of(X: Configuration) -> SimplicialComplex:
    """Facets are the complements of the components inside the universe."""
    vmap = X.variable_map()
    allv = frozenset(vmap.values())
    facets = [sorted(allv - frozenset(vmap[lab] for lab in p)) for p in X.sorted_components()]
    return SimplicialComplex.of(len(vmap), facets)


def label_of_vertex(v: int) -> Label:
    return Label.from_u(v + 1)


# -- shellings and boundaries ---------------------------------------------------------


def is_shelling(cx: SimplicialComplex, order: Sequence[int] | None = None) -> bool:
    """Each facet meets the union of the earlier ones in a pure (d-2)-complex."""
    if not cx.is_pure():
        raise NotPure("shellings are defined here for pure complexes")
    facets = [frozenset(f) for f in (cx.facets if order is None else [cx.facets[k] for k in order])]
    if order is not None and sorted(order) != list(range(len(cx.facets))):
        raise DomainError("order is not a permutation of the facets")
    for i in range(1, len(facets)):
        F = facets[i]
        meets = {F & G for G in facets[:i]}
        maximal = [A for A in meets if not any(A < B for B in meets)]
        if any(len(A) != len(F) - 1 for A in maximal):
            return False
    return True


def boundary_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Ridges of cx contained in exactly one facet."""
    if not cx.is_pure():
        raise NotPure("boundary_complex expects a pure complex")
    count: dict = {}
    for f in cx.facets:
        for k in range(len(f)):
            r = f[:k] + f[k + 1:]
            count[r] = count.get(r, 0) + 1
    ridges = sorted(r for r, n in count.items() if n == 1)
    return SimplicialComplex.of(cx.n_vertices, ridges)


# -- Billera-Lee constructions --------------------------------------------------------


@dataclass(frozen=True)
class BilleraLee:
    complex: SimplicialComplex  # facets listed in shelling order
    mode: str
    c: int
    s: int | None
    t: int


def billera_lee_ball(h: Sequence[int], mode: str = "ball", c: int | None = None, t: int | None = None) -> BilleraLee:
    """Shellable ball whose facets are the beta-bar sets of LOIM(h) (or of LOIM(g)).

    ball mode: h an O-sequence; the Stanley-Reisner ideal is that of Z_{c,t}(h).
    polytope mode: h an SI-sequence; facets are beta-bar sets of LOIM(g) in c-1
    variables, each joined with the extra vertices V''; the boundary of the ball
    is a simplicial sphere whose h-vector is h.
    """
    h = hvec(h)
    if mode == "ball":
        if not is_o_sequence(h) or h == (0,):
            raise DomainError(f"not an O-sequence: {h}")
        c = (h[1] if len(h) > 1 else 0) if c is None else c
        t = len(h) - 1 if t is None else t
        facets = [sorted(u - 1 for u in beta_bar(m, c, t)) for m in loim(h, c)]
        return BilleraLee(SimplicialComplex.of(c + 2 * t, facets), "ball", c, None, t)
    if mode == "polytope":
        reason = si_failure(h)
        if reason is not None:
            raise DomainError(f"not an SI-sequence: {reason}")
        p = si_params(h)
        c, s, t = p.c, p.s, p.t
        if c < 2:
            raise DomainError("polytope mode needs h_1 >= 2")
        n_first = c - 1 + 2 * t
        extra = list(range(n_first, s + c))
        facets = [sorted(u - 1 for u in beta_bar(m, c - 1, t)) + extra for m in loim(p.g, c - 1)]
        return BilleraLee(SimplicialComplex.of(s + c, facets), "polytope", c, s, t)
    raise DomainError(f"unknown mode {mode!r}")


def polytope_label_map(c: int, s: int, t: int) -> dict:
    """Labels of the universe of G_c(h) -> vertices of the Billera-Lee sphere.

    M_i -> 2i and the first L's -> 2i+1 fill V' = {0, ..., c-2+2t}; the remaining
    L's go to V'' = {c-1+2t, ..., s+c-1} in increasing order.
    """
    n_m = t + (c - 2) // 2 + 1
    n_l = s + 1 - t + (c - 3) // 2 + 1
    low_l = t + (c - 3) // 2 + 1  # L_0 .. L_{low_l - 1} live in V'
    out = {Label("M", i): 2 * i for i in range(n_m)}
    out.update({Label("L", i): 2 * i + 1 for i in range(low_l)})
    first_extra = c - 1 + 2 * t
    out.update({Label("L", i): first_extra + (i - low_l) for i in range(low_l, n_l)})
    return out


def polytope_check(h: Sequence[int]) -> dict:
    """Compare the Billera-Lee sphere with G_c(h) and report the findings."""
    bl = billera_lee_ball(h, "polytope")
    ball = bl.complex
    sphere = boundary_complex(ball)
    lmap = polytope_label_map(bl.c, bl.s, bl.t)
    X = build_gorenstein(h, bl.c)
    expected = sorted((frozenset(lmap[lab] for lab in p) for p in X.components), key=sorted)
    hv = h_vector(sphere)
    return {
        "h": hvec(h),
        "vertices": ball.n_vertices,
        "ball_facets": len(ball.facets),
        "sphere_facets": len(sphere.facets),
        "f_vector": faces(sphere),
        "h_vector": hv,
        "primes_match": sr_ideal(sphere) == expected,
        "symmetric": hv == hv[::-1],
        "shelling": is_shelling(ball),
    }


def g_theorem_validate(h: Sequence[int]) -> dict:
    """SI-sequence test, reported in polytope terms (dimension s, s + h_1 vertices)."""
    h = hvec(h)
    ok = is_si_sequence(h)
    s = len(h) - 1
    return {
        "h": h,
        "si": ok,
        "dimension": s,
        "vertices": s + (h[1] if s >= 1 else 0),
    }


# -- serialization -----------------------------------------------------------------


def to_json(cx: SimplicialComplex) -> str:
    """``n`` is the largest vertex index, so there are n + 1 vertices."""
    return json.dumps({"n": cx.n_vertices - 1, "facets": [list(f) for f in cx.facets]})


def from_json(text: str) -> SimplicialComplex:
    data = json.loads(text)
    return SimplicialComplex.of(int(data["n"]) + 1, data["facets"])
