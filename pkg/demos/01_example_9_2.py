"""
From (p, q) = (9, 2) to a plumbing chain
========================================

Walk through every stage for one pair: the Euclidean word, the involution A,
both blow-up constructions and the resulting continued fraction.
"""

from blowdown import (A, assemble_chain, ncf_eval, run_algorithm_A, st_pair,
                      step3_states, step3prime_states)

p, q = 9, 2
a, b = p - q, q

# The subtractive Euclidean algorithm on (a, b) = (7, 2)
trace = run_algorithm_A(a, b)
for row in trace.rows:
    print(row)
print('w =', trace.word, ' W =', trace.reverse)
print('A(7, 2) =', A(a, b), ' (s, t) =', st_pair(a, b))

# Blow-ups guided by W, starting from (-1, -1, -1)
for state in step3_states(trace.reverse):
    print(state.step, dict(state.items()))

# ... and the alternative construction starting from (-4)
for state in step3prime_states(trace.reverse):
    print(state.step, dict(state.items()))

chain = assemble_chain(step3_states(trace.reverse)[-1], trace.n_L, trace.n_R)
print('chain =', chain)

# read backwards, the absolute values give p^2/(pq - 1)
print(ncf_eval([-w for w in reversed(chain)]), '=', p * p, '/', p * q - 1)
