import pytest
from hypothesis import given

from gorlink.errors import CodimTooSmall, ContextMismatch, NotLexSegment, NotOSequence
from gorlink.monomials import (
    Decomposition,
    MonomialIdeal,
    decompose,
    decomposition_hvector_check,
    hilbert_of_artinian,
    is_lex_segment,
    lex_segment_ideal,
    loim,
    monomials_of_degree,
    phi,
    render,
    revlex_key,
)
from strategies import o_sequences


def test_lex_segment_examples():
    assert lex_segment_ideal((1, 2, 2), 2).gens == {(2, 0), (1, 2), (0, 3)}
    assert lex_segment_ideal((1,), 2).gens == {(1, 0), (0, 1)}
    assert lex_segment_ideal((1, 3, 6), 3).gens == frozenset(monomials_of_degree(3, 3))
    assert lex_segment_ideal((1, 2, 2), 2).render() == "(z1^2, z1*z2^2, z2^3)"


def test_lex_segment_errors():
    with pytest.raises(NotOSequence):
        lex_segment_ideal((1, 2, 4), 2)
    with pytest.raises(CodimTooSmall):
        lex_segment_ideal((1, 3), 2)
    with pytest.raises(ContextMismatch):
        MonomialIdeal.of(2, [(1, 0, 0)])


def test_decompose_example():
    d = decompose(lex_segment_ideal((1, 2, 2), 2))
    assert d.alpha == 2
    assert d.parts[0].gens == {(3,)}
    assert d.parts[1].gens == {(2,)}
    assert d.hparts == ((1, 1, 1), (1, 1))
    assert decomposition_hvector_check((1, 2, 2), d)


def test_decompose_maximal_ideal_and_power():
    d = decompose(lex_segment_ideal((1,), 3))
    assert d.alpha == 1 and d.parts[0].gens == {(1, 0), (0, 1)} and d.hparts == ((1,),)
    d = decompose(lex_segment_ideal((1, 3, 6), 3))
    assert d.alpha == 3
    for j, part in enumerate(d.parts):
        assert part.gens == frozenset(monomials_of_degree(2, 3 - j))
    assert decomposition_hvector_check((1,), decompose(lex_segment_ideal((1,), 2)))


def test_decompose_rejects_non_lex():
    with pytest.raises(NotLexSegment):
        decompose(MonomialIdeal.of(2, [(0, 2), (2, 0)]))


def test_corrupted_decomposition_fails_check():
    d = decompose(lex_segment_ideal((1, 2, 2), 2))
    bad = Decomposition(d.alpha, d.parts, ((1, 1), (1, 1)))
    assert not decomposition_hvector_check((1, 2, 2), bad)


def test_phi_and_render():
    assert phi((2, 0, 1)) == (1, 0, 2)
    assert render(phi((2, 0, 1))) == "y1*y3^2"
    assert phi((0, 0)) == (0, 0)
    assert render((0, 0)) == "1"


def test_loim_examples():
    assert loim((1, 2), 2) == [(0, 0), (1, 0), (0, 1)]
    assert set(loim((1, 2, 2), 2)) == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)}
    assert loim((1,), 3) == [(0, 0, 0)]


@given(o_sequences(max_h1=3, max_len=5))
def test_lex_ideal_has_the_right_counts(h):
    c = max(h[1] if len(h) > 1 else 1, 1)
    J = lex_segment_ideal(h, c)
    assert hilbert_of_artinian(J) == h
    assert is_lex_segment(J, len(h))


@given(o_sequences(max_h1=3, max_len=5))
def test_decomposition_splits_h(h):
    c = max(h[1] if len(h) > 1 else 1, 2)
    d = decompose(lex_segment_ideal(h, c))
    assert decomposition_hvector_check(h, d)
    # I_0 subset I_1 subset ... : monotone parts
    for a, b in zip(d.parts, d.parts[1:]):
        assert all(g in b for g in a.gens)


@given(o_sequences(max_h1=3, max_len=5))
def test_loim_is_an_order_ideal(h):
    c = max(h[1] if len(h) > 1 else 1, 1)
    mons = loim(h, c)
    got = set(mons)
    assert len(mons) == sum(h)
    assert mons == sorted(mons, key=revlex_key)
    for m in mons:
        # closed under division
        for k in range(c):
            if m[k]:
                assert tuple(e - (i == k) for i, e in enumerate(m)) in got
        # closed downward under <_r within the degree
        deg = sum(m)
        for other in monomials_of_degree(c, deg):
            if revlex_key(other) < revlex_key(m):
                assert other in got


@given(o_sequences(max_h1=3, max_len=4))
def test_phi_maps_lex_complement_to_loim(h):
    c = max(h[1] if len(h) > 1 else 1, 1)
    J = lex_segment_ideal(h, c)
    standard = {phi(m) for d in range(len(h)) for m in monomials_of_degree(c, d) if m not in J}
    assert standard == set(loim(h, c))
