from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gorlink.errors import NotSISequence
from gorlink.monomials import MonomialIdeal, monomials_of_degree, standard_count
from gorlink.sequences import (
    binomial_expansion,
    difference,
    hvec,
    integrate,
    is_o_sequence,
    is_si_sequence,
    macaulay_bound,
    maximal_hvector,
    o_sequences,
    parse_hvector,
    si_failure,
    si_params,
    si_sequences,
)
from strategies import o_sequences as o_seq_strategy
from strategies import si_sequences as si_seq_strategy


def test_hvec_trims_trailing_zeros():
    assert hvec([1, 2, 0, 0]) == (1, 2)
    assert hvec([0, 0]) == (0,)
    assert parse_hvector(" 1, 3,3 ,1") == (1, 3, 3, 1)
    with pytest.raises(ValueError):
        parse_hvector("1,,2")


def test_binomial_expansion():
    # 6 = C(4,2); 7 = C(4,2) + C(1,1)
    assert binomial_expansion(6, 2) == [(4, 2)]
    assert binomial_expansion(7, 2) == [(4, 2), (1, 1)]
    assert binomial_expansion(0, 3) == []


@pytest.mark.parametrize("value,deg,expected", [(3, 1, 6), (2, 1, 3), (6, 2, 10), (0, 4, 0), (1, 5, 1)])
def test_macaulay_bound(value, deg, expected):
    assert macaulay_bound(value, deg) == expected


def _best_next(value, deg, nvars):
    """Exhaustive: the most degree-(deg+1) standard monomials over all order
    ideals with exactly `value` standard monomials in degree `deg`."""
    best = 0
    mons = monomials_of_degree(nvars, deg)
    for keep in combinations(mons, value):
        ideal = MonomialIdeal.of(nvars, [m for m in mons if m not in keep])
        best = max(best, standard_count(ideal, deg + 1))
    return best


def test_macaulay_bound_brute_force():
    # 6 standard quadrics: 3 variables give all of them, 4 variables choose 6 of 10
    assert max(_best_next(6, 2, n) for n in (3, 4)) == 10
    assert max(_best_next(3, 1, n) for n in (3, 4)) == 6
    assert _best_next(2, 2, 3) == macaulay_bound(2, 2)


@pytest.mark.parametrize(
    "h,ok",
    [((1, 3, 6, 10), True), ((1, 2, 4), False), ((1, 3, 6, 4), True), ((1, 3, 7), False), ((1,), True)],
)
def test_is_o_sequence(h, ok):
    assert is_o_sequence(h) is ok


@pytest.mark.parametrize(
    "h,ok",
    [
        ((1, 3, 6, 6, 7, 6, 6, 3, 1), False),
        ((1, 4, 10, 14, 10, 4, 1), True),
        ((1, 4, 10, 19, 10, 4, 1), True),
        ((1, 4, 10, 20, 10, 4, 1), True),
        ((1, 2), False),
        ((1, 3, 5, 3, 1), True),
        ((1, 1), True),
        ((1,), True),
        ((1, 3, 2, 3, 1), False),
    ],
)
def test_is_si_sequence(h, ok):
    assert is_si_sequence(h) is ok


def test_si_failure_reasons():
    assert "symmetric" in si_failure((1, 2))
    assert "O-sequence" in si_failure((1, 3, 6, 6, 7, 6, 6, 3, 1))
    assert si_failure((1, 3, 3, 1)) is None


def test_difference_and_integrate():
    assert integrate((1, 0, -1)) == (1, 1)
    assert difference((1, 1)) == (1, 0, -1)
    assert difference((1, 2)) == (1, 1, -2)


@pytest.mark.parametrize(
    "h,params",
    [
        ((1, 4, 4, 1), (4, 3, 1, (1, 3))),
        ((1, 3, 5, 3, 1), (3, 4, 2, (1, 2, 2))),
        ((1, 1), (1, 1, 0, (1,))),
        ((1, 4, 10, 10, 4, 1), (4, 5, 2, (1, 3, 6))),
    ],
)
def test_si_params(h, params):
    assert tuple(si_params(h)) == params


def test_si_params_rejects():
    with pytest.raises(NotSISequence, match="not an SI-sequence"):
        si_params((1, 3, 6, 6, 7, 6, 6, 3, 1))


def test_maximal_hvector():
    assert maximal_hvector(4, 3, 1) == (1, 4, 4, 1)
    assert maximal_hvector(4, 5, 2) == (1, 4, 10, 10, 4, 1)
    assert maximal_hvector(3, 6, 2) == (1, 3, 6, 6, 6, 3, 1)


def test_enumerators_match_brute_force():
    brute = set()
    for s in range(5):
        half = s // 2 + 1
        def rec(prefix):
            if len(prefix) == half:
                h = prefix + prefix[: s + 1 - half][::-1]
                if is_si_sequence(h):
                    brute.add(hvec(h))
                return
            top = 3 if len(prefix) == 1 else 12
            for v in range(1, top + 1):
                rec(prefix + [v])
        rec([1])
    assert set(si_sequences(3, 4, 12)) == brute
    assert all(is_o_sequence(h) for h in o_sequences(3, 4))
    assert len(set(o_sequences(2, 3))) == len(list(o_sequences(2, 3)))


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8))
def test_integrate_inverts_difference(d):
    h = integrate(d)
    if h != (0,) and sum(d) == 0:
        assert difference(h) == hvec(d)
    assert integrate(difference(h)) == h


@given(o_seq_strategy())
def test_o_sequence_strategy_is_sound(h):
    assert is_o_sequence(h)


@given(si_seq_strategy())
def test_si_sequences_are_symmetric_with_o_sequence_params(h):
    assert is_si_sequence(h)
    assert h == h[::-1]
    p = si_params(h)
    assert is_o_sequence(p.g)
    assert 2 * p.t <= p.s
    assert len(p.g) <= p.t + 1
