from fractions import Fraction
from math import gcd as math_gcd

import pytest
from hypothesis import given, strategies as st

from blowdown.arith import bracket, gcd, mod_inverse, ncf_eval, ncf_expand
from oracles import hj_search, nested_fraction


@pytest.mark.parametrize('x, y, expected', [(7, 2, 1), (6, 4, 2), (9, 9, 9)])
def test_gcd(x, y, expected):
    assert gcd(x, y) == expected


def test_gcd_rejects_nonpositive():
    with pytest.raises(ValueError):
        gcd(0, 3)


@pytest.mark.parametrize('entries, expected', [
    ([5, 5, 2, 2, 2], Fraction(81, 17)),
    ([4], Fraction(4)),
    ([2, 2, 2, 2], Fraction(5, 4)),
])
def test_ncf_eval(entries, expected):
    assert nested_fraction(entries) == expected
    assert ncf_eval(entries) == expected


def test_ncf_eval_rejects_empty_and_small_entries():
    with pytest.raises(ValueError, match='empty bracket'):
        ncf_eval([])
    with pytest.raises(ValueError):
        ncf_eval([3, 1])


def test_bracket_allows_entry_one():
    assert bracket([1, 5]) == Fraction(4, 5)
    assert bracket([1]) == 1
    with pytest.raises(ValueError):
        bracket([2, 1, 1])


@pytest.mark.parametrize('P, Q, expected', [
    (81, 17, [5, 5, 2, 2, 2]),
    (4, 1, [4]),
    (16, 3, [6, 2, 2]),
])
def test_ncf_expand(P, Q, expected):
    assert hj_search(P, Q) == [expected]
    assert ncf_expand(P, Q) == expected


@pytest.mark.parametrize('P, Q', [(3, 3), (2, 5), (6, 4), (5, 0)])
def test_ncf_expand_invalid(P, Q):
    with pytest.raises(ValueError, match='invalid fraction'):
        ncf_expand(P, Q)


@pytest.mark.parametrize('q, P, expected', [(17, 81, 62), (1, 5, 1), (2, 9, 5)])
def test_mod_inverse(q, P, expected):
    assert mod_inverse(q, P) == expected


def test_mod_inverse_not_invertible():
    with pytest.raises(ValueError):
        mod_inverse(3, 9)


def test_expansion_matches_search_oracle():
    for P in range(2, 40):
        for Q in range(1, P):
            if math_gcd(P, Q) == 1:
                assert [ncf_expand(P, Q)] == hj_search(P, Q)


coprime = st.tuples(st.integers(2, 10**6), st.integers(1, 10**6)).filter(
    lambda t: t[1] < t[0] and math_gcd(*t) == 1)


@given(coprime)
def test_round_trip_and_uniqueness(pq):
    P, Q = pq
    entries = ncf_expand(P, Q)
    assert all(c >= 2 for c in entries)
    assert ncf_eval(entries) == Fraction(P, Q)
    value = ncf_eval(entries)
    assert ncf_expand(value.numerator, value.denominator) == entries


@given(coprime)
def test_reversal_law(pq):
    P, Q = pq
    rev = ncf_eval(ncf_expand(P, Q)[::-1])
    assert rev.numerator == P
    assert (Q * rev.denominator) % P == 1 % P


@given(st.lists(st.integers(2, 50), min_size=1, max_size=30))
def test_eval_agrees_with_recursion(entries):
    value = ncf_eval(entries)
    assert value == nested_fraction(entries)
    assert value > 1
