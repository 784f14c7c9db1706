"""
Checking every pair up to a bound
=================================

verify_range runs every property (involution of A, conserved quantities,
agreement of the two blow-up constructions, torus-knot legs, the main
continued-fraction identity, intersection forms, Kirby homology, reversal
symmetry) for all coprime (p, q) with p in range.
"""

import sys

from blowdown import verify_range

p_max = int(sys.argv[1]) if len(sys.argv) > 1 else 100
report = verify_range(p_max)
print(report.summary())
