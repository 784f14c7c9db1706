"""
Linear plumbings, their intersection forms and lens-space boundaries.
"""

import math
from dataclasses import dataclass

import numpy as np

from .arith import mod_inverse, ncf_eval, ncf_expand

__all__ = ['LensSpace', 'build_C_pq', 'chain_to_matrix', 'leading_minors',
           'determinant', 'matrix_invariants', 'chain_to_lens', 'two_leg_lens',
           'lens_equivalent', 'check_pq']


@dataclass(frozen=True)
class LensSpace:
    P: int
    Q: int

    def __post_init__(self):
        if not 0 < self.Q < self.P or math.gcd(self.P, self.Q) != 1:
            raise ValueError(f'invalid lens space L({self.P}, {self.Q})')

    def __str__(self):
        return f'L({self.P},{self.Q})'


def check_pq(p, q):
    if not (isinstance(p, int) and isinstance(q, int)) or not 1 <= q < p:
        raise ValueError(f'need 1 <= q < p, got ({p}, {q})')
    if math.gcd(p, q) != 1:
        raise ValueError(f'({p}, {q}) not coprime')


def build_C_pq(p, q):
    """Weights (-c_0, ..., -c_N) where [c_0, ..., c_N] = p^2/(pq - 1)."""
    check_pq(p, q)
    return tuple(-c for c in ncf_expand(p * p, p * q - 1))


def chain_to_matrix(chain):
    """Tridiagonal intersection matrix of a linear plumbing."""
    if len(chain) == 0:
        raise ValueError('empty chain')
    k = len(chain)
    M = np.diag(np.asarray(chain, dtype=np.int64))
    idx = np.arange(k - 1)
    M[idx, idx + 1] = 1
    M[idx + 1, idx] = 1
    return M


def _is_tridiagonal(M):
    return not (np.triu(M, 2).any() or np.tril(M, -2).any())


def _bareiss_det(rows):
    # Fraction-free elimination with row pivoting; exact on Python ints.
    a = [list(r) for r in rows]
    k = len(a)
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


def leading_minors(M):
    """
    Leading principal minors D_1, ..., D_k as exact integers.

    Tridiagonal input uses D_j = d_j D_{j-1} - e_{j-1}^2 D_{j-2}; anything
    else falls back to a Bareiss determinant per minor.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f'expected a square matrix, got shape {M.shape}')
    if _is_tridiagonal(M):
        diag = [int(x) for x in np.diagonal(M)]
        off = [int(x) * int(y) for x, y in zip(np.diagonal(M, 1), np.diagonal(M, -1))]
        minors = []
        prev2, prev = 0, 1
        for j, d in enumerate(diag):
            cur = d * prev - (off[j - 1] * prev2 if j else 0)
            minors.append(cur)
            prev2, prev = prev, cur
        return minors
    rows = [[int(x) for x in r] for r in M]
    return [_bareiss_det([r[:j] for r in rows[:j]]) for j in range(1, len(rows) + 1)]


def determinant(M):
    M = np.asarray(M)
    if M.shape == (0, 0):
        return 1
    return leading_minors(M)[-1]


def matrix_invariants(M):
    """
    Return (determinant, negative_definite) for a symmetric integer matrix.

    Negative definite iff the leading principal minors alternate in sign
    starting negative: (-1)^j D_j > 0 for every j.
    """
    minors = leading_minors(M)
    neg_def = all((-1) ** j * d > 0 for j, d in enumerate(minors, 1))
    return minors[-1], neg_def


def chain_to_lens(chain):
    """L(P, Q) where P/Q is the bracket of the absolute weights, left to right."""
    if any(w > -2 for w in chain):
        raise ValueError(f'not normalized: {chain}')
    value = ncf_eval([-w for w in chain])
    return LensSpace(value.numerator, value.denominator)


def two_leg_lens(alpha1, beta1, alpha2, beta2, gamma2, delta2):
    """
    Lens space of a plumbing contracted to two vertices with fractions
    -alpha1/beta1 and -alpha2/beta2:

        P = alpha1 alpha2 - beta1 beta2
        Q = alpha1 gamma2 - beta1 delta2  (mod P)

    with alpha2 delta2 - beta2 gamma2 = -1.
    """
    if alpha2 * delta2 - beta2 * gamma2 != -1:
        raise ValueError('need alpha2*delta2 - beta2*gamma2 == -1')
    P = alpha1 * alpha2 - beta1 * beta2
    Q = alpha1 * gamma2 - beta1 * delta2
    if P < 0:
        P, Q = -P, -Q
    if P < 2:
        raise ValueError(f'P = {P} does not give a lens space')
    return LensSpace(P, Q % P)


def lens_equivalent(L1, L2, orientation_insensitive=False):
    """
    Orientation-preserving homeomorphism test: equal P and Q' = Q^{+-1} mod P.
    With orientation_insensitive, -Q is allowed as well.
    """
    if L1.P != L2.P:
        return False
    P = L1.P
    candidates = {L1.Q % P, mod_inverse(L1.Q, P)}
    if orientation_insensitive:
        candidates |= {-x % P for x in candidates}
    return L2.Q % P in candidates
