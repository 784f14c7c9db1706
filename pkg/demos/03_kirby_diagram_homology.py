"""
The Kirby diagram L_{p,q}
=========================

L_{p,q} is a dotted circle u plus the torus knot T(m, n) with framing mn,
where (m, n) = A(p - q, q).  Trading u for a 0-framed unknot gives a
surgery presentation of the same boundary; its linking matrix has
determinant -(m + n)^2 = -p^2, matching |H_1(L(p^2, pq - 1))|.
"""

from blowdown import (ball_h1_order, boundary_h1_order, build_C_pq, build_L_pq,
                      chain_to_matrix, determinant, dotted_to_surgery, emit_diagram)

for p, q in [(2, 1), (5, 2), (9, 2), (13, 5)]:
    d = build_L_pq(p, q)
    S = dotted_to_surgery(d)
    print(emit_diagram(d))
    print('  linking matrix', S.tolist(),
          ' |H1(boundary)| =', boundary_h1_order(S),
          ' |H1(ball)| =', ball_h1_order(d),
          ' |det C_pq| =', abs(determinant(chain_to_matrix(build_C_pq(p, q)))))
