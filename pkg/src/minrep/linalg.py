"""Exact incremental row reduction on sparse vectors (dicts).

Rational entries are carried as plain Fractions, anything else as Scalar;
the two mix freely, and the rational fast path matters for the larger
translate spans.
"""
from __future__ import annotations

from .scalar import Scalar


def _lower(v):
    if isinstance(v, Scalar) and v.is_rational():
        return v.as_fraction()
    return v


class EchelonBasis:
    """Forward-reduced rows keyed by pivot; answers span membership exactly.

    Rows are reduced against all earlier rows at insertion, so a single pass
    in insertion order fully reduces a query vector.
    """

    def __init__(self):
        self.rows: dict = {}
        self.order: list = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = {k: _lower(v) for k, v in vec.items() if v}
        for piv in self.order:
            c = vec.get(piv)
            if c is None:
                continue
            for k, v in self.rows[piv].items():
                w = vec.get(k, 0) - c * v
                if w:
                    vec[k] = w
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns False if it was already in the span."""
        red = self.reduce(vec)
        if not red:
            return False
        piv = max(red)
        inv = 1 / red[piv]
        self.rows[piv] = {k: v * inv for k, v in red.items()}
        self.order.append(piv)
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors) -> int:
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return len(eb)
