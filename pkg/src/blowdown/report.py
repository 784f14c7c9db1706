"""
Rendering of a (p, q) computation: text trace tables, a JSON record and a
Graphviz DOT path graph for the plumbing.

JSON record fields (stable):

    p, q          the input pair
    word          w(p - q, q) over {L, R}
    A             [m, n] = A(p - q, q)
    st            [s, t], or null when q = 1
    chain         assembled blow-up chain (a_1, ..., a_nL, c, a_-nR, ..., a_-1)
    lens          {"P": p^2, "Q": pq - 1}
    kirby         {"m", "n", "framing", "linking", "dotted"}
    matrix        intersection matrix of the chain, row-major
    det           its determinant
    negative_definite
"""

import json

from .arith import ncf_eval
from .blowup import assemble_chain, step3_states, step3prime_states
from .euclid import run_algorithm_A
from .kirby import build_L_pq, emit_diagram
from .plumbing import (build_C_pq, chain_to_lens, chain_to_matrix, check_pq,
                       matrix_invariants)

__all__ = ['pair_record', 'to_json', 'parse_record', 'to_dot', 'render_trace']


def _pair(x, y):
    return f'({x},{y})'


def _tuple(ws):
    return '(' + ','.join(str(w) for w in ws) + ')'


def _bracket(ws):
    return '[' + ','.join(str(w) for w in ws) + ']'


def pair_record(p, q):
    check_pq(p, q)
    trace = run_algorithm_A(p - q, q)
    chain = assemble_chain(step3_states(trace.reverse)[-1], trace.n_L, trace.n_R)
    lens = chain_to_lens(build_C_pq(p, q))
    M = chain_to_matrix(chain)
    det, neg_def = matrix_invariants(M)
    return {
        'p': p,
        'q': q,
        'word': trace.word,
        'A': list(trace.A),
        'st': list(trace.st) if q >= 2 else None,
        'chain': list(chain),
        'lens': {'P': lens.P, 'Q': lens.Q},
        'kirby': emit_diagram(build_L_pq(p, q)),
        'matrix': M.tolist(),
        'det': det,
        'negative_definite': neg_def,
    }


def to_json(record, indent=2):
    return json.dumps(record, indent=indent)


def parse_record(text):
    record = json.loads(text)
    missing = {'p', 'q', 'word', 'A', 'st', 'chain', 'lens', 'kirby', 'det',
               'negative_definite'} - set(record)
    if missing:
        raise ValueError(f'record missing fields: {sorted(missing)}')
    return record


def to_dot(p, q):
    """Undirected path graph of the plumbing chain, nodes left to right."""
    record = pair_record(p, q)
    lines = [f'graph C_{p}_{q} {{', f'  graph [p={p}, q={q}];']
    chain = record['chain']
    for k, w in enumerate(chain):
        lines.append(f'  v{k} [label="{w}"];')
    if len(chain) > 1:
        lines.append('  ' + ' -- '.join(f'v{k}' for k in range(len(chain))) + ';')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _table(states):
    lo = min(s.lo for s in states)
    hi = max(s.hi for s in states)
    cols = range(lo, hi + 1)
    width = max(3, max(len(str(w)) for s in states for w in s.weights) + 1)
    lines = ['i |' + ''.join(f'{j:>{width}}' for j in cols)]
    for s in states:
        cells = [f'{s[j]:>{width}}' if s.lo <= j <= s.hi else ' ' * width
                 for j in cols]
        lines.append(f'{s.step} |' + ''.join(cells).rstrip())
    return lines


def render_trace(p, q):
    check_pq(p, q)
    a, b = p - q, q
    trace = run_algorithm_A(a, b)
    W = trace.reverse
    states = step3_states(W)
    bars = step3prime_states(W)
    chain = assemble_chain(states[-1], trace.n_L, trace.n_R)

    def arrows(key):
        parts = [_pair(*key(trace.rows[0]))]
        for letter, row in zip(trace.word, trace.rows[1:]):
            parts.append(f'->{letter} {_pair(*key(row))}')
        return ' '.join(parts)

    out = [
        f'(p,q) = {_pair(p, q)}  (a,b) = {_pair(a, b)}',
        f'(a_i,b_i) : {arrows(lambda r: (r.a, r.b))}',
        f'(m_i,n_i) : {arrows(lambda r: (r.m, r.n))}',
        f'(s_i,t_i) : {arrows(lambda r: (r.s, r.t))}',
        f'w = {trace.word or "(empty)"}',
        f'W = {W or "(empty)"}',
        f'n_L = {trace.n_L}, n_R = {trace.n_R}',
        f'A = {_pair(*trace.A)}',
        f'(s,t) = {_pair(*trace.st) if b >= 2 else "undefined (q = 1)"}',
        '',
        'blow-ups a^(i)_j:',
        *_table(states),
        '',
        'blow-ups abar^(i)_j:',
        *_table(bars),
        '',
        f'chain = {_tuple(chain)}',
    ]
    for label, ws in (('chain', chain), ('reversed', chain[::-1])):
        entries = [-w for w in ws]
        value = ncf_eval(entries)
        out.append(f'{_bracket(entries)} = {value.numerator}/{value.denominator}'
                   f'  ({label})')
    lens = chain_to_lens(build_C_pq(p, q))
    out.append(f'boundary = {lens}')
    return '\n'.join(out) + '\n'
