"""
Algebraic data of the Kirby diagram L_{p,q} = k(m, n) u u, where k(m, n) is
the torus knot T(m, n) with framing mn drawn on a once-punctured torus and u
is a dotted circle (a 1-handle).

Only homology-level information is modelled: framings, the algebraic
linking of k(m, n) with u, and the surgery presentation obtained by
trading the dotted circle for a 0-framed unknot.
"""

import json
from dataclasses import asdict, dataclass

import numpy as np

from .euclid import A
from .plumbing import check_pq, determinant

__all__ = ['KirbyDiagram', 'build_L_pq', 'dotted_to_surgery',
           'boundary_h1_order', 'ball_h1_order', 'emit_diagram', 'parse_diagram']


@dataclass(frozen=True)
class KirbyDiagram:
    m: int
    n: int
    framing: int
    linking: int
    dotted: bool = True

    def __post_init__(self):
        if self.framing != self.m * self.n:
            raise ValueError(f'framing {self.framing} != mn = {self.m * self.n}')
        if self.linking != self.m + self.n:
            raise ValueError(f'linking {self.linking} != m + n = {self.m + self.n}')

    @classmethod
    def torus(cls, m, n):
        return cls(m, n, m * n, m + n)

    def swapped(self):
        return KirbyDiagram.torus(self.n, self.m)


def build_L_pq(p, q):
    """The diagram k(A(p - q, q)) u u."""
    check_pq(p, q)
    return KirbyDiagram.torus(*A(p - q, q))


def dotted_to_surgery(d):
    """
    Replace the dotted circle by a 0-framed unknot; the boundary is unchanged.
    Returns the linking matrix [[mn, m + n], [m + n, 0]].
    """
    return np.array([[d.framing, d.linking], [d.linking, 0]], dtype=object)


def boundary_h1_order(S):
    """|H_1| of the surgered 3-manifold: |det| of the linking matrix, 0 if infinite."""
    return abs(determinant(S))


def ball_h1_order(d):
    # One 1-handle generator x and one relation x^linking.
    return d.linking


def emit_diagram(d):
    return asdict(d)


def parse_diagram(doc):
    if isinstance(doc, str):
        doc = json.loads(doc)
    return KirbyDiagram(int(doc['m']), int(doc['n']), int(doc['framing']),
                        int(doc['linking']), bool(doc.get('dotted', True)))
