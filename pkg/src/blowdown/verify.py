"""
Exhaustive verification of every algebraically checkable statement over a
range of coprime pairs (p, q), 1 <= q < p.

Each pair is an independent work unit; reports merge associatively, so a
parallel run gives the same report as a serial one (apart from wall time).
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import ncf_eval
from .blowup import (assemble_chain, center_tracks, step3_run, step3prime_run,
                     torus_knot_legs)
from .euclid import A, run_algorithm_A, st_pair
from .kirby import ball_h1_order, boundary_h1_order, build_L_pq, dotted_to_surgery
from .plumbing import (LensSpace, build_C_pq, chain_to_lens, chain_to_matrix,
                       lens_equivalent, matrix_invariants, two_leg_lens)

__all__ = ['PROPERTIES', 'coprime_pairs', 'check_pair_properties',
           'VerificationReport', 'verify_range']


def coprime_pairs(p_min, p_max):
    for p in range(max(p_min, 2), p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


def _chain(p, q):
    trace = run_algorithm_A(p - q, q)
    return assemble_chain(step3_run(trace.reverse), trace.n_L, trace.n_R)


def _involution(p, q, ctx):
    a, b = p - q, q
    m, n = A(a, b)
    return A(m, n) == (a, b) and A(b, a) == (n, m)


def _word_identity(p, q, ctx):
    trace = ctx['trace']
    return run_algorithm_A(*trace.A).word == trace.reverse


def _closed_forms(p, q, ctx):
    a, b = p - q, q
    if b == 1:
        return A(a, 1) == (a, 1)
    if b == 2:
        return A(a, 2) == ((a + 1) // 2, (a + 3) // 2)
    return True


def _conservation(p, q, ctx):
    a, b = p - q, q
    trace = ctx['trace']
    m, n = trace.A
    if m + n != a + b or trace.rows[-1][:2] != (1, 1):
        return False
    if any(trace.conserved(i) != (a + b, -1, b) for i in range(len(trace.rows))):
        return False
    if b >= 2:
        s, t = st_pair(a, b)
        return m * t - n * s == -1 and 0 < s < a + b and 0 < t < a + b and s + t == b
    return True


def _agreement(p, q, ctx):
    W = ctx['trace'].reverse
    cs, bars = center_tracks(W)
    return cs == bars and ctx['chain'] == step3prime_run(W).weights


def _shape(p, q, ctx):
    trace, chain = ctx['trace'], ctx['chain']
    return (len(chain) == trace.n_L + trace.n_R + 1
            and all(w <= -2 for w in chain)
            and chain[trace.n_L] <= -4)


def _legs(p, q, ctx):
    trace = ctx['trace']
    m, n = trace.A
    left, right = torus_knot_legs(step3_run(trace.reverse), m, n)
    return (left, right) == (Fraction(m, n), Fraction(n, m))


def _main_identity(p, q, ctx):
    chain = ctx['chain']
    target = Fraction(p * p, p * q - 1)
    entries = [-w for w in chain]
    C = build_C_pq(p, q)
    return (target in (ncf_eval(entries), ncf_eval(entries[::-1]))
            and C in (chain, chain[::-1]))


def _two_leg(p, q, ctx):
    trace = ctx['trace']
    m, n = trace.A
    s, t = trace.st
    return two_leg_lens(m, -(2 * m + n), m, n, s, t) == LensSpace(p * p, p * q - 1)


def _quadratic_form(p, q, ctx):
    for chain in (ctx['chain'], build_C_pq(p, q)):
        det, neg_def = matrix_invariants(chain_to_matrix(chain))
        if abs(det) != p * p or not neg_def:
            return False
    return True


def _kirby(p, q, ctx):
    d = build_L_pq(p, q)
    order = boundary_h1_order(dotted_to_surgery(d))
    det, _ = matrix_invariants(chain_to_matrix(build_C_pq(p, q)))
    swapped = d.swapped()
    return (order == p * p and ball_h1_order(d) == p and order == abs(det)
            and boundary_h1_order(dotted_to_surgery(swapped)) == order
            and ball_h1_order(swapped) == p)


def _reversal(p, q, ctx):
    chain = ctx['chain']
    if _chain(p, p - q) != chain[::-1]:
        return False
    L1, L2 = chain_to_lens(chain), chain_to_lens(chain[::-1])
    return lens_equivalent(L1, L2, ctx['orientation_insensitive'])


PROPERTIES = {
    'involution_symmetry': _involution,
    'word_identity': _word_identity,
    'closed_forms': _closed_forms,
    'conservation': _conservation,
    'agreement': _agreement,
    'chain_shape': _shape,
    'torus_knot_legs': _legs,
    'main_identity': _main_identity,
    'two_leg_lens': _two_leg,
    'quadratic_form': _quadratic_form,
    'kirby_homology': _kirby,
    'reversal': _reversal,
}


def check_pair_properties(p, q, orientation_insensitive=False):
    """Return {property name: passed} for one pair."""
    trace = run_algorithm_A(p - q, q)
    ctx = {
        'trace': trace,
        'chain': assemble_chain(step3_run(trace.reverse), trace.n_L, trace.n_R),
        'orientation_insensitive': orientation_insensitive,
    }
    results = {}
    for name, check in PROPERTIES.items():
        try:
            results[name] = bool(check(p, q, ctx))
        except (ValueError, ArithmeticError):
            results[name] = False
    return results


@dataclass
class VerificationReport:
    p_min: int
    p_max: int
    pairs: int = 0
    passed: dict = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    failed: dict = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    first_failure: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self):
        return not any(self.failed.values())

    def add(self, p, q, results):
        self.pairs += 1
        for name, good in results.items():
            if good:
                self.passed[name] += 1
            else:
                self.failed[name] += 1
                w = self.first_failure.get(name)
                if w is None or (p, q) < w:
                    self.first_failure[name] = (p, q)

    def merge(self, other):
        out = VerificationReport(min(self.p_min, other.p_min),
                                 max(self.p_max, other.p_max))
        out.pairs = self.pairs + other.pairs
        for name in PROPERTIES:
            out.passed[name] = self.passed[name] + other.passed[name]
            out.failed[name] = self.failed[name] + other.failed[name]
            ws = [r.first_failure[name] for r in (self, other) if name in r.first_failure]
            if ws:
                out.first_failure[name] = min(ws)
        out.wall_time = max(self.wall_time, other.wall_time)
        return out

    def summary(self):
        lines = [f'verified {self.pairs} coprime pairs with '
                 f'{self.p_min} <= p <= {self.p_max} in {self.wall_time:.2f}s']
        for name in PROPERTIES:
            status = 'ok' if not self.failed[name] else 'FAIL'
            line = f'  {name:<20} {self.passed[name]:>7} pass {self.failed[name]:>5} fail  {status}'
            if name in self.first_failure:
                line += f'  first witness (p,q) = {self.first_failure[name]}'
            lines.append(line)
        return '\n'.join(lines)


def _verify_block(args):
    ps, orientation_insensitive = args
    report = VerificationReport(min(ps), max(ps))
    for p in ps:
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                report.add(p, q, check_pair_properties(p, q, orientation_insensitive))
    return report


def verify_range(p_max, p_min=2, parallel=1, orientation_insensitive=False):
    """Run every property for all coprime (p, q) with p_min <= p <= p_max."""
    if p_max < 2:
        raise ValueError(f'p_max must be >= 2, got {p_max}')
    p_min = max(p_min, 2)
    if p_min > p_max:
        raise ValueError(f'empty range {p_min}..{p_max}')
    start = time.perf_counter()
    ps = list(range(p_min, p_max + 1))
    if parallel > 1:
        # interleave p values so blocks carry similar work
        blocks = [(ps[k::parallel], orientation_insensitive)
                  for k in range(parallel) if ps[k::parallel]]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            parts = list(pool.map(_verify_block, blocks))
    else:
        parts = [_verify_block((ps, orientation_insensitive))]
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    report.p_min, report.p_max = p_min, p_max
    report.wall_time = time.perf_counter() - start
    return report
