from math import gcd

import pytest
from hypothesis import given, strategies as st

from blowdown.euclid import A, reverse_word, run_algorithm_A, st_pair
from oracles import euclid_by_hand


def test_example_7_2_trace():
    trace = run_algorithm_A(7, 2)
    assert trace.word == 'LLLR'
    assert [(r.a, r.b) for r in trace.rows] == [(7, 2), (5, 2), (3, 2), (1, 2), (1, 1)]
    assert [(r.m, r.n) for r in trace.rows] == [(1, 1), (2, 1), (3, 1), (4, 1), (4, 5)]
    assert [(r.s, r.t) for r in trace.rows] == [(1, 0), (1, 0), (1, 0), (1, 0), (1, 1)]
    assert (trace.n_L, trace.n_R) == (3, 1)
    assert trace.A == (4, 5)


def test_trivial_trace():
    trace = run_algorithm_A(1, 1)
    assert trace.word == ''
    assert len(trace.rows) == 1
    assert A(1, 1) == (1, 1)


def test_three_one():
    trace = run_algorithm_A(3, 1)
    assert trace.word == 'LL'
    assert trace.A == (3, 1)


@pytest.mark.parametrize('pair, expected', [((7, 2), (4, 5)), ((5, 2), (3, 4)),
                                            ((1, 1), (1, 1)), ((3, 2), (2, 3))])
def test_A_values(pair, expected):
    assert A(*pair) == expected


@pytest.mark.parametrize('a', [1, 2, 5, 17, 100])
def test_A_b_equals_one(a):
    assert A(a, 1) == (a, 1)


def test_not_coprime():
    with pytest.raises(ValueError, match='not coprime'):
        run_algorithm_A(6, 4)
    with pytest.raises(ValueError, match='not coprime'):
        A(9, 3)


def test_st_pair():
    assert st_pair(7, 2) == (1, 1)
    for pair in [(1, 1), (3, 1), (2, 1)]:
        with pytest.raises(ValueError, match='degenerate'):
            st_pair(*pair)


@pytest.mark.parametrize('w, expected', [('LLLR', 'RLLL'), ('', ''), ('LR', 'RL')])
def test_reverse_word(w, expected):
    assert reverse_word(w) == expected


def test_trace_matches_recursive_oracle():
    for a in range(1, 40):
        for b in range(1, 40):
            if gcd(a, b) == 1:
                trace = run_algorithm_A(a, b)
                assert (trace.word, trace.A, trace.st) == euclid_by_hand(a, b)
                assert A(a, b) == trace.A


pairs = st.tuples(st.integers(1, 5000), st.integers(1, 5000)).filter(lambda t: gcd(*t) == 1)


@given(pairs)
def test_A_involution_symmetry_and_sum(pair):
    a, b = pair
    m, n = A(a, b)
    assert A(m, n) == (a, b)
    assert A(b, a) == (n, m)
    assert m + n == a + b
    assert reverse_word(run_algorithm_A(a, b).word) == run_algorithm_A(m, n).word


@given(pairs)
def test_row_invariants(pair):
    a, b = pair
    trace = run_algorithm_A(a, b)
    for i in range(len(trace.rows)):
        assert trace.conserved(i) == (a + b, -1, b)
    assert trace.rows[-1][:2] == (1, 1)
    assert trace.A == A(a, b)


@given(pairs.filter(lambda t: t[1] >= 2))
def test_st_law(pair):
    a, b = pair
    m, n = A(a, b)
    s, t = st_pair(a, b)
    assert m * t - n * s == -1
    assert 0 < s < a + b and 0 < t < a + b
    assert s + t == b


def test_st_pair_is_the_unique_normalized_solution():
    # Solutions of m t - n s = -1 repeat with period (m, n), so the open box
    # 0 < s, t < a + b can hold two; s + t < a + b singles out one.
    doubles = 0
    for a in range(1, 25):
        for b in range(2, 25):
            if gcd(a, b) != 1:
                continue
            m, n = A(a, b)
            sols = [(s, t) for s in range(1, a + b) for t in range(1, a + b)
                    if m * t - n * s == -1]
            doubles += len(sols) > 1
            assert [(s, t) for s, t in sols if s + t < a + b] == [st_pair(a, b)]
            assert [(s, t) for s, t in sols if s <= m and t <= n] == [st_pair(a, b)]
    assert doubles > 0
