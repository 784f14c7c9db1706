"""
Negative continued fractions and lens spaces
============================================

C_{p,q} is the linear plumbing whose weights expand p^2/(pq - 1).  Its
boundary is L(p^2, pq - 1); reversing the chain gives L(p^2, p(p-q) - 1),
the same oriented lens space.
"""

import numpy as np

from blowdown import (build_C_pq, chain_to_lens, chain_to_matrix, lens_equivalent,
                      matrix_invariants, ncf_eval, ncf_expand)

print(ncf_expand(81, 17), ncf_eval([5, 5, 2, 2, 2]))

# A few chains; note the symmetry C_{p,p-q} = reverse(C_{p,q})
for p, q in [(2, 1), (5, 2), (7, 3), (9, 2), (28, 9)]:
    chain = build_C_pq(p, q)
    print(f'C_{p},{q} = {chain}   reversed C_{p},{p - q} = {build_C_pq(p, p - q)[::-1]}')

# Intersection form: tridiagonal, determinant +-p^2, negative definite
M = chain_to_matrix(build_C_pq(9, 2))
print(M)
det, neg_def = matrix_invariants(M)
print('det =', det, ' negative definite:', neg_def)
print('eigenvalues (float, for comparison):', np.round(np.linalg.eigvalsh(M), 3))

L1 = chain_to_lens(build_C_pq(9, 2))
L2 = chain_to_lens(build_C_pq(9, 7))
print(L1, L2, 'equivalent:', lens_equivalent(L1, L2))
