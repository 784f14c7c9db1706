"""
Exact integer constructions around the rational homology balls B_{p,q} of
generalized rational blow-down: Euclidean LR-words and the involution A,
blow-up weight sequences, negative continued fractions, linear plumbings,
lens spaces, and the torus-knot Kirby diagram L_{p,q}.
"""

from .arith import bracket, gcd, mod_inverse, ncf_eval, ncf_expand
from .blowup import (IndexedWeights, assemble_chain, blowup_chain, center_tracks,
                     center_weight, step3_run, step3_states, step3prime_run,
                     step3prime_states, torus_knot_legs)
from .euclid import (A, EuclideanTrace, Row, letter_counts, reverse_word,
                     run_algorithm_A, st_pair)
from .kirby import (KirbyDiagram, ball_h1_order, boundary_h1_order, build_L_pq,
                    dotted_to_surgery, emit_diagram, parse_diagram)
from .plumbing import (LensSpace, build_C_pq, chain_to_lens, chain_to_matrix,
                       determinant, leading_minors, lens_equivalent,
                       matrix_invariants, two_leg_lens)
from .report import pair_record, parse_record, render_trace, to_dot, to_json
from .verify import VerificationReport, check_pair_properties, verify_range

__version__ = '0.1.0'
