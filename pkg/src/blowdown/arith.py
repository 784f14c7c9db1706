"""
Exact integer helpers and negative (Hirzebruch-Jung) continued fractions.

A bracket [x1, x2, ..., xn] denotes x1 - 1/(x2 - 1/(... - 1/xn)).  Entries
are stored as positive integers; the sign convention of plumbing weights
lives with the weight chains.
"""

import math
from fractions import Fraction

__all__ = ['gcd', 'bracket', 'ncf_eval', 'ncf_expand', 'mod_inverse']


def gcd(x, y):
    """Greatest common divisor of two positive integers."""
    if x < 1 or y < 1:
        raise ValueError(f'gcd expects positive integers, got ({x}, {y})')
    return math.gcd(x, y)


def _bracket_pair(entries):
    # Evaluate from the innermost entry outward, keeping (num, den) as ints.
    num, den = entries[-1], 1
    for x in reversed(entries[:-1]):
        if num == 0:
            raise ValueError(f'bracket {list(entries)} divides by zero')
        num, den = x * num - den, num
    return num, den


def bracket(entries):
    """
    Evaluate a bracket with arbitrary integer entries.

    Unlike ncf_eval this accepts entries below 2 (torus-knot legs have an
    outer entry 1).  Raises ValueError if an intermediate value is zero.
    """
    entries = tuple(entries)
    if not entries:
        raise ValueError('empty bracket')
    num, den = _bracket_pair(entries)
    if den == 0:
        raise ValueError(f'bracket {list(entries)} divides by zero')
    return Fraction(num, den)


def ncf_eval(entries):
    """
    Evaluate a negative continued fraction whose entries are all >= 2.

    >>> ncf_eval([5, 5, 2, 2, 2])
    Fraction(81, 17)
    """
    entries = tuple(entries)
    if not entries:
        raise ValueError('empty bracket')
    if any(x < 2 for x in entries):
        raise ValueError(f'entries must all be >= 2, got {list(entries)}')
    # With entries >= 2 every partial value exceeds 1, so no zero division.
    num, den = _bracket_pair(entries)
    return Fraction(num, den)


def ncf_expand(P, Q):
    """
    Expand P/Q (P > Q >= 1, coprime) as a negative continued fraction.

    Repeated ceiling division: c = ceil(P/Q), then continue with
    Q/(c*Q - P) until the remainder vanishes.  Every entry is >= 2 and the
    expansion is unique.
    """
    if Q < 1 or P <= Q or math.gcd(P, Q) != 1:
        raise ValueError(f'invalid fraction {P}/{Q}')
    entries = []
    while Q:
        c = -(-P // Q)
        entries.append(c)
        P, Q = Q, c * Q - P
    return entries


def mod_inverse(q, P):
    """Return r in (0, P) with q*r = 1 mod P."""
    if P < 2:
        raise ValueError(f'modulus must be >= 2, got {P}')
    try:
        return pow(q % P, -1, P)
    except ValueError:
        raise ValueError(f'{q} is not invertible mod {P}') from None
