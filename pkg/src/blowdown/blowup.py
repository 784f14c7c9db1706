"""
Blow-up weight sequences guided by the reversed word W.

Two constructions are implemented:

* step3: indexed weights a_j starting from (-1, -1, -1) at j = -1, 0, 1.
  An R blows up on the left of the central -1 (a_1 decreases, a fresh -2
  enters at j = -1 and the negative side shifts outward); an L is the mirror.
  The final chain is (a_1, ..., a_nL, c, a_-nR, ..., a_-1) with
  c = a_{nL+1} + a_{-(nR+1)} - 2.
* step3prime: starting from (-4) at j = 0, an R appends -2 on the right and
  decreases the leftmost weight; an L prepends -2 on the left and decreases
  the rightmost weight.

Both produce the same chain.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import bracket

__all__ = ['IndexedWeights', 'step3_states', 'step3_run', 'step3prime_states',
           'step3prime_run', 'assemble_chain', 'center_weight',
           'torus_knot_legs', 'blowup_chain', 'center_tracks']


@dataclass(frozen=True)
class IndexedWeights:
    """
    Weights on a contiguous integer index range lo..hi, stored as a tuple
    plus the lowest index.
    """
    weights: tuple
    lo: int
    step: int = 0

    @property
    def hi(self):
        return self.lo + len(self.weights) - 1

    def __getitem__(self, j):
        if not self.lo <= j <= self.hi:
            raise IndexError(f'index {j} outside {self.lo}..{self.hi}')
        return self.weights[j - self.lo]

    def items(self):
        return [(self.lo + k, w) for k, w in enumerate(self.weights)]


def _check_word(W):
    if set(W) - {'L', 'R'}:
        raise ValueError(f'word must be over L, R: {W!r}')


def _step3(W, snapshot):
    _check_word(W)
    # left[k] is the weight at index -(k+1), right[k] at index k+1
    left, right = [-1], [-1]
    for i, letter in enumerate(W, 1):
        if letter == 'R':
            right[0] -= 1
            left.insert(0, -2)
        else:
            left[0] -= 1
            right.insert(0, -2)
        if snapshot is not None:
            snapshot(left, right, i)
    return left, right


def _pack(left, right, step):
    return IndexedWeights(tuple(left[::-1]) + (-1,) + tuple(right), -len(left), step)


def step3_states(W):
    """All states a^(0), ..., a^(N) of the step-3 construction."""
    states = [IndexedWeights((-1, -1, -1), -1, 0)]
    _step3(W, lambda left, right, i: states.append(_pack(left, right, i)))
    return states


def step3_run(W):
    left, right = _step3(W, None)
    return _pack(left, right, len(W))


def center_weight(state):
    """c^(i) = a_M + a_m - 2 for a step-3 state."""
    return state[state.hi] + state[state.lo] - 2


def _step3prime(W, snapshot):
    _check_word(W)
    weights, lo = [-4], 0
    for i, letter in enumerate(W, 1):
        if letter == 'R':
            weights[0] -= 1
            weights.append(-2)
        else:
            weights[-1] -= 1
            weights.insert(0, -2)
            lo -= 1
        if snapshot is not None:
            snapshot(weights, lo, i)
    return IndexedWeights(tuple(weights), lo, len(W))


def center_tracks(W):
    """
    Per-step centre weights of both constructions: (c^(i) from step3,
    weight at index 0 from step3prime) for i = 0..N.
    """
    cs = [-4]
    bars = [-4]
    _step3(W, lambda left, right, i: cs.append(left[-1] + right[-1] - 2))
    _step3prime(W, lambda w, lo, i: bars.append(w[-lo]))
    return cs, bars


def step3prime_states(W):
    """All states of the alternative construction starting from (-4)."""
    states = [IndexedWeights((-4,), 0, 0)]
    _step3prime(W, lambda w, lo, i: states.append(IndexedWeights(tuple(w), lo, i)))
    return states


def step3prime_run(W):
    return _step3prime(W, None)


def assemble_chain(state, n_L, n_R):
    """
    Read the chain (a_1, ..., a_nL, c, a_-nR, ..., a_-1) off a final
    step-3 state.
    """
    if state.lo != -(n_R + 1) or state.hi != n_L + 1:
        raise ValueError(
            f'inconsistent word counts: range {state.lo}..{state.hi} '
            f'for n_L={n_L}, n_R={n_R}')
    c = center_weight(state)
    chain = [state[j] for j in range(1, n_L + 1)]
    chain.append(c)
    chain.extend(state[j] for j in range(-n_R, 0))
    return tuple(chain)


def blowup_chain(W):
    """Assembled step3 chain for the reversed word W."""
    return assemble_chain(step3_run(W), W.count('L'), W.count('R'))


def torus_knot_legs(state, m, n):
    """
    Evaluate the two legs of a final step-3 state for W = w(m, n).

    Returns (left, right) where left = [|a_-(nR+1)|, ..., |a_-1|] and
    right = [|a_(nL+1)|, ..., |a_1|].  The outer weight on the side of the
    smaller of m, n is -1, and the legs evaluate to m/n and n/m.
    """
    if m == n and (m, n) != (1, 1):
        raise ValueError(f'legs undefined for m == n == {m}')
    left = bracket([abs(state[j]) for j in range(state.lo, 0)])
    right = bracket([abs(state[j]) for j in range(state.hi, 0, -1)])
    if m < n and state[state.lo] != -1:
        raise ValueError(f'outer left weight {state[state.lo]} != -1 for m < n')
    if m > n and state[state.hi] != -1:
        raise ValueError(f'outer right weight {state[state.hi]} != -1 for m > n')
    if {left, right} != {Fraction(m, n), Fraction(n, m)}:
        raise ValueError(f'legs {left}, {right} do not match {m}/{n}')
    return left, right
