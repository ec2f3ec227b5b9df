"""h-vector arithmetic for links, basic double links and hypersurface sections,
plus the h-vector of a configuration computed two independent ways."""

from typing import Sequence

from . import oracle
from .configurations import Configuration
from .errors import DomainError, NotDominated, OracleDisagreement
from .sequences import HVector, hvec, integrate
from .simplicial import complex_of, f_to_h, faces


def _at(h: Sequence[int], i: int) -> int:
    return h[i] if 0 <= i < len(h) else 0


def linked_hvector(cvec: Sequence[int], gvec: Sequence[int]) -> HVector:
    """h-vector of the residual: g'_i = c_{s-i} - g_{s-i}."""
    cvec, gvec = hvec(cvec), hvec(gvec)
    if cvec != cvec[::-1]:
        raise DomainError(f"linking h-vector {cvec} is not symmetric")
    s = len(cvec) - 1
    for i in range(max(len(cvec), len(gvec))):
        if _at(gvec, i) > _at(cvec, i):
            raise NotDominated(f"g_{i} = {_at(gvec, i)} exceeds c_{i} = {_at(cvec, i)}")
    return hvec(_at(cvec, s - i) - _at(gvec, s - i) for i in range(s + 1))


def sum_linked_hvector(cvec: Sequence[int], gvec: Sequence[int]) -> HVector:
    """h-vector of the sum of the two linked ideals (codimension one higher)."""
    cvec, gvec = hvec(cvec), hvec(gvec)
    gp = linked_hvector(cvec, gvec)
    n = max(len(cvec), len(gvec), len(gp))
    d = [_at(gvec, i) + _at(gp, i) - _at(cvec, i) for i in range(n)]
    return integrate(d)


def link_table(cvec: Sequence[int], gvec: Sequence[int]) -> dict:
    """All five rows of a link: G, Z, Y, the difference of the sum, and the sum."""
    cvec, gvec = hvec(cvec), hvec(gvec)
    gp = linked_hvector(cvec, gvec)
    n = max(len(cvec), len(gvec), len(gp))
    d = hvec(_at(gvec, i) + _at(gp, i) - _at(cvec, i) for i in range(n))
    return {"G": cvec, "Z": gvec, "Y": gp, "dG": d, "sum": integrate(d)}


def basic_double_link_hvector(hI: Sequence[int], hJ: Sequence[int], d: int) -> tuple:
    """t -> hI(t) - hI(t-d) + hJ(t-d), on raw finite sequences."""
    n = max(len(hI), len(hJ) + d) + d
    out = [_at(hI, t) - _at(hI, t - d) + _at(hJ, t - d) for t in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def hypersurface_sections_hvector(hW: Sequence[Sequence[int]], degrees: Sequence[int]) -> HVector:
    """h_Z(t) = h_{W_r}(t) + h_{W_{r-1}}(t - d_r) + ... + h_{W_1}(t - d_r - ... - d_2)."""
    r = len(hW)
    if len(degrees) != r:
        raise DomainError("need one degree per section")
    shifts = [sum(degrees[k + 1:]) for k in range(r)]
    n = max(len(w) + sh for w, sh in zip(hW, shifts))
    return hvec(sum(_at(w, t - sh) for w, sh in zip(hW, shifts)) for t in range(n))


def ci_hvector(degrees: Sequence[int]) -> HVector:
    """Coefficients of prod_i (1 + z + ... + z^{d_i - 1})."""
    if not degrees or any(d < 1 for d in degrees):
        raise DomainError("degrees must be a nonempty list of positive integers")
    poly = [1]
    for d in degrees:
        new = [0] * (len(poly) + d - 1)
        for i, a in enumerate(poly):
            for k in range(d):
                new[i + k] += a
        poly = new
    return hvec(poly)


def hvector_by_counting(X: Configuration) -> HVector:
    """Standard monomials of the intersection of primes, differenced dim times."""
    nvars = X.n_m + X.n_l
    ideal = oracle.ideal_of_primes(nvars, X.prime_variable_sets())
    if not X.components:
        return (0,)
    dim = nvars - X.codim
    dims = oracle.standard_monomials(ideal, dim + 1)
    h = oracle.hilbert_to_h(dims, dim)
    if h[-1] != 0:
        raise OracleDisagreement(f"h-vector does not stop by degree {dim}: {h}")
    return hvec(h)


def hvector_by_faces(X: Configuration) -> HVector:
    """f-vector of the Stanley-Reisner complex, converted to an h-vector."""
    return f_to_h(faces(complex_of(X)))


def hvector_of(X: Configuration) -> HVector:
    a = hvector_by_counting(X)
    b = hvector_by_faces(X)
    if a != b:
        raise OracleDisagreement(f"standard monomials give {a}, faces give {b}")
    return a


def is_symmetric(h: Sequence[int]) -> bool:
    h = hvec(h)
    return h == h[::-1]
