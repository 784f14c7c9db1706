"""
The subtractive Euclidean algorithm on a coprime pair, recorded as a word
in the letters L and R, together with the involution A on coprime pairs.

Starting from (a, b), (m, n) = (1, 1) and (s, t) = (1, 0):

    a > b:  L,  (a, b) -> (a - b, b),  (m, n) -> (m + n, n),  (s, t) -> (s + t, t)
    a < b:  R,  (a, b) -> (a, b - a),  (m, n) -> (m, n + m),  (s, t) -> (s, t + s)

until (a, b) = (1, 1).  A(a, b) is the final (m, n).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = ['Row', 'EuclideanTrace', 'check_pair', 'run_algorithm_A', 'A',
           'st_pair', 'reverse_word', 'letter_counts']


class NotCoprimeError(ValueError):
    pass


def check_pair(a, b):
    """Validate a coprime pair of positive integers."""
    if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
        raise ValueError(f'expected positive integers, got ({a}, {b})')
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f'({a}, {b}) not coprime')


class Row(NamedTuple):
    a: int
    b: int
    m: int
    n: int
    s: int
    t: int


@dataclass(frozen=True)
class EuclideanTrace:
    rows: tuple
    word: str

    @property
    def N(self):
        return len(self.word)

    @property
    def n_L(self):
        return self.word.count('L')

    @property
    def n_R(self):
        return self.word.count('R')

    @property
    def A(self):
        last = self.rows[-1]
        return (last.m, last.n)

    @property
    def st(self):
        last = self.rows[-1]
        return (last.s, last.t)

    @property
    def reverse(self):
        return reverse_word(self.word)

    def conserved(self, i):
        """
        The three bilinear quantities at row i:
        (a n + b m, m t - n s, a t + b s), which stay equal to
        (a_0 + b_0, -1, b_0) along the whole trace.
        """
        r = self.rows[i]
        return (r.a * r.n + r.b * r.m, r.m * r.t - r.n * r.s, r.a * r.t + r.b * r.s)


def run_algorithm_A(a, b):
    """Run the LR rule on (a, b) and return every row of the trace."""
    check_pair(a, b)
    m, n, s, t = 1, 1, 1, 0
    rows = [Row(a, b, m, n, s, t)]
    letters = []
    while (a, b) != (1, 1):
        if a > b:
            letters.append('L')
            a, m, s = a - b, m + n, s + t
        elif a < b:
            letters.append('R')
            b, n, t = b - a, n + m, t + s
        else:
            raise AssertionError(f'a == b == {a} away from (1, 1)')
        rows.append(Row(a, b, m, n, s, t))
    return EuclideanTrace(tuple(rows), ''.join(letters))


def A(a, b):
    """
    The involution A on coprime pairs.

    Equivalent to run_algorithm_A(a, b).A, but consumes each run of equal
    letters with one division so large pairs cost O(log) steps.
    """
    check_pair(a, b)
    m, n = 1, 1
    while a != b:
        if a > b:
            # L-steps until a < b, or until (1, 1) when b == 1
            k = (a - 1) // b
            a -= k * b
            m += k * n
        else:
            k = (b - 1) // a
            b -= k * a
            n += k * m
    return (m, n)


def st_pair(a, b):
    """
    The pair (s, t) with m t - n s = -1 and s + t = b, where (m, n) = A(a, b).

    Only defined for b >= 2: for b = 1 the word is all L and t stays 0.
    """
    check_pair(a, b)
    if b == 1:
        raise ValueError(f'degenerate: t = 0 for ({a}, {b})')
    return run_algorithm_A(a, b).st


def reverse_word(w):
    return w[::-1]


def letter_counts(w):
    """Return (n_L, n_R)."""
    return w.count('L'), w.count('R')
