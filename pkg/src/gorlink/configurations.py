"""Configurations of linear subvarieties described by labels M_i and L_i.

A label stands for a linear form.  Labels are totally ordered through their
position u: M_i sits at u = 2i+1 and L_i at u = 2i+2, so the order reads
M0 < L0 < M1 < L1 < ...  A component is a sorted tuple of labels and stands for
the prime generated by those linear forms; a configuration is the union of
its components.
"""

import json
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Sequence

from . import oracle
from .errors import DegreeExceedsT, DomainError, NotSubconfiguration, SocleTooSmall
from .monomials import Monomial, degree, loim
from .sequences import hvec, si_params


@total_ordering
@dataclass(frozen=True)
class Label:
    kind: str
    index: int

    @property
    def u(self) -> int:
        return 2 * self.index + 1 if self.kind == "M" else 2 * self.index + 2

    @classmethod
    def from_u(cls, u: int) -> "Label":
        """The map mu: u_i -> M_{(i-1)/2} for odd i, L_{(i-2)/2} for even i."""
        if u < 1:
            raise ValueError("u-positions start at 1")
        return cls("M", (u - 1) // 2) if u % 2 else cls("L", (u - 2) // 2)

    @classmethod
    def parse(cls, text: str) -> "Label":
        kind, idx = text[0], text[1:]
        if kind not in "ML" or not idx.isdigit():
            raise ValueError(f"bad label {text!r}")
        return cls(kind, int(idx))

    def __lt__(self, other: "Label") -> bool:
        return self.u < other.u

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    __repr__ = __str__


def M(i: int) -> Label:
    return Label("M", i)


def L(i: int) -> Label:
    return Label("L", i)


def component(labels: Iterable) -> tuple:
    """Canonical component: labels (or label strings) sorted by u."""
    out = [Label.parse(x) if isinstance(x, str) else x for x in labels]
    if len(set(out)) != len(out):
        raise DomainError("a component may not repeat a label")
    return tuple(sorted(out))


@dataclass(frozen=True)
class Configuration:
    codim: int
    n_m: int  # universe: M_0 .. M_{n_m - 1}
    n_l: int  # universe: L_0 .. L_{n_l - 1}
    components: frozenset
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for p in self.components:
            if len(p) != self.codim:
                raise DomainError(f"component {p} does not have {self.codim} labels")
            for lab in p:
                bound = self.n_m if lab.kind == "M" else self.n_l
                if lab.index >= bound:
                    raise DomainError(f"label {lab} lies outside the universe")

    def universe(self) -> list:
        return sorted([M(i) for i in range(self.n_m)] + [L(i) for i in range(self.n_l)])

    def variable_map(self) -> dict:
        """Universe labels -> variable indices 0..N-1, in u order."""
        return {lab: k for k, lab in enumerate(self.universe())}

    def sorted_components(self) -> list:
        return sorted(self.components, key=lambda p: [lab.u for lab in p])

    def prime_variable_sets(self) -> list:
        vmap = self.variable_map()
        return [frozenset(vmap[lab] for lab in p) for p in self.sorted_components()]

    def __len__(self) -> int:
        return len(self.components)

    def __contains__(self, p) -> bool:
        return component(p) in self.components


def make_configuration(codim, n_m, n_l, comps, **params) -> Configuration:
    return Configuration(codim, n_m, n_l, frozenset(component(p) for p in comps), dict(params))


def z_universe(c: int, t: int) -> tuple:
    """Sizes of the M and L ranges of the universe for Z_{c,t}."""
    return t + (c - 1) // 2 + 1, t + (c - 2) // 2 + 1


def n_universe(c: int, s: int, t: int) -> tuple:
    """Sizes of the M and L ranges of the universe for G_{c,s,t}."""
    return t + (c - 1) // 2 + 1, s - t + (c - 2) // 2 + 1


# -- components from monomials ------------------------------------------------


def beta_bar(m: Monomial, c: int, t: int) -> frozenset:
    """The 2t-element set of u-positions attached to m = y_{e_1}...y_{e_k}."""
    if len(m) != c:
        raise DomainError(f"monomial {m} is not in {c} variables")
    k = degree(m)
    if k > t:
        raise DegreeExceedsT(f"degree {k} exceeds t = {t}")
    e = [v + 1 for v, a in enumerate(m) for _ in range(a)]
    out = set(range(1, 2 * (t - k) + 1))
    for j, ej in enumerate(e, start=1):
        base = ej + 2 * (j + t - k)
        out.update((base - 1, base))
    return frozenset(out)


def prime_component(m: Monomial, c: int, t: int) -> tuple:
    """Labels of the u-positions 1..c+2t that are not in beta_bar(m)."""
    bb = beta_bar(m, c, t)
    return tuple(Label.from_u(u) for u in range(1, c + 2 * t + 1) if u not in bb)


def build_z(h: Sequence[int], c: int, t: int) -> Configuration:
    """ACM configuration Z_{c,t}(h): one component per monomial of LOIM(h)."""
    h = hvec(h)
    if len(h) - 1 > t:
        raise DegreeExceedsT(f"h has socle degree {len(h) - 1} > t = {t}")
    n_m, n_l = z_universe(c, t)
    comps = frozenset(prime_component(m, c, t) for m in loim(h, c))
    return Configuration(c, n_m, n_l, comps, {"c": c, "s": None, "t": t})


def _chains(parity: int, length: int, umax: int, umin: int = 1):
    """Strictly increasing u-sequences of alternating parity, all within [umin, umax]."""
    if length == 0:
        yield ()
        return
    first = umin if umin % 2 == parity else umin + 1
    for u in range(first, umax + 1, 2):
        for rest in _chains(1 - parity, length - 1, umax, u + 1):
            yield (u,) + rest


def _to_component(us) -> tuple:
    return tuple(Label.from_u(u) for u in us)


def build_z_max(c: int, t: int) -> Configuration:
    """Maximal ACM configuration Z_{c,t}: alternating chains M < L < M < ...

    The last index is bounded by t + (c-2)/2 (c even, ending in L) or
    t + (c-1)/2 (c odd, ending in M); both say u <= c + 2t.
    """
    if c < 1 or t < 0:
        raise DomainError("need c >= 1 and t >= 0")
    n_m, n_l = z_universe(c, t)
    comps = frozenset(_to_component(ch) for ch in _chains(1, c, c + 2 * t))
    return Configuration(c, n_m, n_l, comps, {"c": c, "s": None, "t": t})


def build_g_max(c: int, s: int, t: int) -> Configuration:
    """Maximal Gorenstein configuration G_{c,s,t} as the union of three families.

    A: alternating chains starting with M and ending at u <= c + 2t.
    B: alternating chains starting with L and ending at u <= c + 2t - 1.
    C: an alternating chain of length c-1 starting with M and ending at
       u <= c + 2t - 1, followed by L_i with t + c//2 <= i <= s - t + (c-2)//2.
    """
    if c < 1 or t < 0:
        raise DomainError("need c >= 1 and t >= 0")
    if s < 2 * t:
        raise SocleTooSmall(f"s = {s} < 2t = {2 * t}")
    n_m, n_l = n_universe(c, s, t)
    comps = set()
    comps.update(_to_component(ch) for ch in _chains(1, c, c + 2 * t))
    comps.update(_to_component(ch) for ch in _chains(0, c, c + 2 * t - 1))
    tails = [L(i) for i in range(t + c // 2, s - t + (c - 2) // 2 + 1)]
    for ch in _chains(1, c - 1, c + 2 * t - 1):
        head = _to_component(ch)
        comps.update(head + (tail,) for tail in tails)
    return Configuration(c, n_m, n_l, frozenset(comps), {"c": c, "s": s, "t": t})


def relabel_g_max(c: int, s: int, t: int) -> Configuration:
    """G'_{c,s,t}: for odd c, M_{t+(c-1)/2} is renamed L_{s-t+(c-1)/2}."""
    g = build_g_max(c, s, t)
    if c % 2 == 0:
        return g
    old, new = M(t + (c - 1) // 2), L(s - t + (c - 1) // 2)
    comps = frozenset(component(new if lab == old else lab for lab in p) for p in g.components)
    return Configuration(c, g.n_m - 1, g.n_l + 1, comps, dict(g.params))


def build_gorenstein(h: Sequence[int], c: int | None = None) -> Configuration:
    """Reduced arithmetically Gorenstein configuration G_c(h) with h-vector h.

    With Z = Z_{c-1,t}(g), the components are the c-sets p = p1 + {H}, p1 in Z,
    that contain exactly one component of Z.
    """
    p = si_params(h)
    h1 = p.c
    if c is None:
        c = max(h1, 2)
    elif c < max(h1, 2):
        raise DomainError(f"codimension {c} is below max(h_1, 2) = {max(h1, 2)}")
    s, t = p.s, p.t
    z = build_z(p.g, c - 1, t)
    n_m, n_l = n_universe(c - 1, s + 1, t)
    universe = [M(i) for i in range(n_m)] + [L(i) for i in range(n_l)]
    zsets = {frozenset(q) for q in z.components}
    comps = set()
    for p1 in zsets:
        for lab in universe:
            if lab in p1:
                continue
            cand = p1 | {lab}
            hits = sum(1 for x in cand if cand - {x} in zsets)
            if hits == 1:
                comps.add(component(cand))
    return Configuration(c, n_m, n_l, frozenset(comps), {"c": c, "s": s, "t": t})


def residual(G: Configuration, Z: Configuration) -> Configuration:
    """Components of G that are not components of Z."""
    if G.codim != Z.codim:
        raise NotSubconfiguration("codimensions differ")
    if not Z.components <= G.components:
        raise NotSubconfiguration("Z is not a subconfiguration of G")
    return Configuration(G.codim, G.n_m, G.n_l, G.components - Z.components, dict(G.params))


def is_generalized_stick_figure(X: Configuration) -> bool:
    """No three components span exactly codim + 1 labels.

    Three distinct codim-sets have a union of codim + 1 labels exactly when they
    all lie in one (codim + 1)-set, so it is enough to bucket every component
    under each of its one-label extensions and look for a bucket of size 3.
    """
    labels = {lab for p in X.components for lab in p}
    buckets: dict = {}
    for p in X.components:
        ps = frozenset(p)
        for lab in labels - ps:
            key = ps | {lab}
            n = buckets.get(key, 0) + 1
            if n >= 3:
                return False
            buckets[key] = n
    return True


def stick_figure_violations(X: Configuration) -> list:
    """Every triple of components spanning exactly codim + 1 labels (slow)."""
    comps = X.sorted_components()
    return [
        tri
        for tri in combinations(comps, 3)
        if len(set(tri[0]) | set(tri[1]) | set(tri[2])) == X.codim + 1
    ]


def colon_by_label(X: Configuration, g: Label) -> Configuration:
    """I_X : g for a label g: the components not containing g survive."""
    comps = frozenset(p for p in X.components if g not in p)
    return Configuration(X.codim, X.n_m, X.n_l, comps, dict(X.params))


def subspace_label(c: int, s: int, t: int) -> Label:
    """The linear form used for the subspace property: the last L of N_{c-1,s+1,t}."""
    return L(s - t + (c - 1) // 2)


def check_subspace_property(h: Sequence[int]) -> dict:
    """Verify the subspace property of G_c(h) with respect to subspace_label.

    Reports the colon identity on the maximal configurations, and the initial
    degree a of (J:g)/J found by comparing Hilbert functions with the oracle.
    """
    p = si_params(h)
    c = max(p.c, 2)
    s, t = p.s, p.t
    g = subspace_label(c, s, t)
    big = build_g_max(c - 1, s + 1, t)
    small = build_g_max(c - 1, s, t)
    colon_ok = colon_by_label(big, g).components == small.components

    X = build_gorenstein(h)
    vmap = X.variable_map()
    nvars = len(vmap)
    J = oracle.ideal_of_primes(nvars, X.prime_variable_sets())
    Jg = oracle.colon(J, vmap[g])
    top = s + 2
    hf_j = oracle.standard_monomials(J, top)
    hf_jg = oracle.standard_monomials(Jg, top)
    a = next((d for d in range(top + 1) if hf_j[d] > hf_jg[d]), None)
    reg = s + 1
    return {
        "h": hvec(h),
        "c": c,
        "s": s,
        "t": t,
        "g": str(g),
        "colon_identity": colon_ok,
        "a": a,
        "expected_a": s - t,
        "reg": reg,
        "passes": colon_ok and a is not None and a == s - t and 2 * a >= reg - 1,
    }


def shift(X: Configuration) -> Configuration:
    """The shift tau: every label at position u moves to u + 1."""
    comps = frozenset(component(Label.from_u(lab.u + 1) for lab in p) for p in X.components)
    n_m, n_l = X.n_l + 1, X.n_m  # L_i -> M_{i+1}, M_i -> L_i
    return Configuration(X.codim, n_m, n_l, comps, dict(X.params))


# -- serialization ------------------------------------------------------------


def to_json(X: Configuration) -> str:
    data = {
        "params": {k: X.params.get(k) for k in ("c", "s", "t")},
        "universe": {"M": X.n_m, "L": X.n_l},
        "components": [[str(lab) for lab in p] for p in X.sorted_components()],
    }
    return json.dumps(data)


def from_json(text: str) -> Configuration:
    data = json.loads(text)
    comps = [component(p) for p in data["components"]]
    params = data.get("params") or {}
    codim = len(comps[0]) if comps else params.get("c") or 0
    uni = data.get("universe") or {}
    n_m = uni.get("M", max((lab.index + 1 for p in comps for lab in p if lab.kind == "M"), default=0))
    n_l = uni.get("L", max((lab.index + 1 for p in comps for lab in p if lab.kind == "L"), default=0))
    return Configuration(codim, n_m, n_l, frozenset(comps), params)


def to_m2(X: Configuration) -> str:
    """Plain-text ideal as an intersection of variable primes."""
    nvars = X.n_m + X.n_l
    primes = X.prime_variable_sets()
    body = ",".join("ideal(" + ",".join(f"x{v}" for v in sorted(p)) + ")" for p in primes)
    if not primes:
        return f"R = QQ[x0..x{nvars - 1}];\nI = ideal(1_R);\n"
    return f"R = QQ[x0..x{nvars - 1}];\nI = intersect({body});\n"
