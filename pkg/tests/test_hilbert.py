import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gorlink import oracle
from gorlink.configurations import build_g_max, build_z, make_configuration, residual
from gorlink.errors import DomainError, NotDominated
from gorlink.hilbert import (
    basic_double_link_hvector,
    ci_hvector,
    hvector_by_counting,
    hvector_by_faces,
    hvector_of,
    hypersurface_sections_hvector,
    is_symmetric,
    link_table,
    linked_hvector,
    sum_linked_hvector,
)
from gorlink.monomials import MonomialIdeal
from gorlink.sequences import hvec, maximal_hvector, si_params
from strategies import si_sequences

CI334 = (1, 3, 6, 8, 8, 6, 3, 1)


def test_ci_hvector():
    assert ci_hvector((3, 3, 4)) == CI334
    assert ci_hvector((2, 2)) == (1, 2, 1)
    assert ci_hvector((1,)) == (1,)
    with pytest.raises(DomainError):
        ci_hvector(())


def test_linked_hvector():
    assert linked_hvector((1, 2, 1), (1, 2)) == (1,)
    assert linked_hvector(CI334, (1, 3, 6, 4)) == (1, 3, 6, 8, 4)
    with pytest.raises(NotDominated):
        linked_hvector((1, 2, 1), (1, 3))
    with pytest.raises(DomainError):
        linked_hvector((1, 2), (1,))


def test_sum_linked_hvector():
    assert sum_linked_hvector((1, 2, 1), (1, 2)) == (1, 1)
    assert sum_linked_hvector(CI334, (1, 3, 6, 4)) == (1, 4, 10, 14, 10, 4, 1)
    # maximal table, c = 3, s = 3, t = 1
    assert sum_linked_hvector(maximal_hvector(2, 4, 1), (1, 2)) == (1, 3, 3, 1)


def test_link_table_rows():
    rows = link_table(CI334, (1, 3, 6, 4))
    assert rows["Y"] == (1, 3, 6, 8, 4)
    assert rows["dG"] == (1, 3, 6, 4, -4, -6, -3, -1)
    assert rows["sum"] == (1, 4, 10, 14, 10, 4, 1)


@pytest.mark.parametrize("a", range(9))
def test_ci_links_reach_n_at_most_18(a):
    for b in range(a + 1):
        out = sum_linked_hvector(CI334, (1, 3, 6, a, b))
        assert out[3] - 10 == a - b
        assert out[3] <= 18


@given(st.integers(0, 8), st.integers(0, 8))
def test_linked_hvector_is_an_involution(a, b):
    g = hvec((1, 3, 6, a, b))
    assert linked_hvector(CI334, linked_hvector(CI334, g)) == g


@given(si_sequences(max_h1=5, max_s=7))
def test_sum_of_links_from_maximal_configuration(h):
    p = si_params(h)
    c = max(p.c, 2)
    out = sum_linked_hvector(maximal_hvector(c - 1, p.s + 1, p.t), p.g)
    assert out == h
    assert is_symmetric(out)


def test_basic_double_link_raw_sequences():
    assert basic_double_link_hvector((1, 2, 3), (), 2) == (1, 2, 2, -2, -3)
    assert basic_double_link_hvector((1, 1, 1, 1), (1, 1, 1, 1), 1) == (1, 1, 1, 1)


def _hf(nvars, gens, cutoff):
    return oracle.standard_monomials(MonomialIdeal.of(nvars, gens), cutoff)


@pytest.mark.parametrize(
    "n,I,J,F",
    [
        # J = (x0 x2) inside I = (x0, x1), F = x3
        (4, [(1, 0, 0, 0), (0, 1, 0, 0)], [(1, 0, 1, 0)], (0, 0, 0, 1)),
        # J = (x0 x1) inside I = (x0, x2 x3), F = x3^2
        (4, [(1, 0, 0, 0), (0, 0, 1, 1)], [(1, 1, 0, 0)], (0, 0, 0, 2)),
    ],
)
def test_basic_double_link_against_oracle(n, I, J, F):
    cutoff = 8
    d = sum(F)
    link = [tuple(a + b for a, b in zip(F, g)) for g in I] + J
    expect = _hf(n, link, cutoff)
    got = basic_double_link_hvector(_hf(n, J, cutoff), _hf(n, I, cutoff), d)
    assert list(got[: cutoff + 1]) == expect


def test_hypersurface_sections():
    assert hypersurface_sections_hvector([(1, 2)], [3]) == (1, 2)
    # two sections: h(t) = h_2(t) + h_1(t - d_2)
    assert hypersurface_sections_hvector([(1,), (1, 1)], [1, 2]) == (1, 1, 1)
    with pytest.raises(DomainError):
        hypersurface_sections_hvector([(1,)], [1, 2])


def test_hvector_of_examples():
    assert hvector_of(build_g_max(4, 3, 1)) == (1, 4, 4, 1)
    assert hvector_of(build_z((1, 2, 2), 2, 2)) == (1, 2, 2)
    empty = make_configuration(2, 2, 2, [])
    assert hvector_by_counting(empty) == (0,)
    assert hvector_by_faces(empty) == (0,)


def test_link_in_label_model():
    # Z and its residual Y inside G_max(2,2,1): two points linked to two points
    G = build_g_max(2, 2, 1)
    Z = make_configuration(2, G.n_m, G.n_l, [("M0", "L0"), ("M0", "L1")])
    Y = residual(G, Z)
    assert hvector_of(G) == (1, 2, 1)
    assert linked_hvector(hvector_of(G), hvector_of(Z)) == hvector_of(Y)
    n = G.n_m + G.n_l
    IZ = oracle.ideal_of_primes(n, Z.prime_variable_sets())
    IY = oracle.ideal_of_primes(n, Y.prime_variable_sets())
    S = oracle.ideal_sum(IZ, IY)
    dims = oracle.standard_monomials(S, 6)
    assert oracle.hilbert_to_h(dims, n - 3)[:3] == (1, 1, 0)
