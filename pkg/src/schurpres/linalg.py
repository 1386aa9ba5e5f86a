"""Sparse exact Gaussian elimination over Q or Q(v).

Vectors are dicts ``coordinate -> scalar`` with no zero entries.  The scalars
only need ``+ - * /`` and truthiness, so Fractions and RationalFunctions both
work.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable

from .errors import NotInSpan
from .scalars import CLASSICAL, ScalarRing


def axpy(y: dict, a, x: dict) -> None:
    """y <- y + a*x in place, dropping zeros."""
    for k, xv in x.items():
        s = y.get(k)
        s = a * xv if s is None else s + a * xv
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally built row-echelon basis of a span.

    Row ``k`` vanishes on the pivots of rows ``0..k-1``, so a single sweep in
    insertion order fully reduces a vector.  With ``track=True`` every row
    remembers how it was built from the labelled input vectors, which is what
    :meth:`solve` needs.
    """

    def __init__(self, ring: ScalarRing = CLASSICAL, track: bool = False):
        self.ring = ring
        self.track = track
        self.rows: list = []       # (pivot, row, combination)
        self.pivot_row: dict = {}  # pivot coordinate -> row index
        self.labels: list = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict):
        vec = dict(vec)
        acc = {} if self.track else None
        heap = [self.pivot_row[k] for k in vec if k in self.pivot_row]
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            idx = heapq.heappop(heap)
            pivot, row, combo = self.rows[idx]
            c = vec.get(pivot)
            if not c:
                continue
            for k in row:
                r = self.pivot_row.get(k)
                if r is not None and r > idx and r not in seen:
                    seen.add(r)
                    heapq.heappush(heap, r)
            axpy(vec, -c, row)
            if acc is not None:
                axpy(acc, c, combo)
        return vec, acc

    def add(self, vec: dict, label: Hashable = None) -> bool:
        """Insert ``vec``; returns False when it is already in the span."""
        residual, acc = self._reduce(vec)
        if not residual:
            return False
        size = self.ring.size
        pivot = min(residual, key=lambda k: (size(residual[k]), k))
        inv = 1 / residual[pivot]
        row = {k: x * inv for k, x in residual.items()}
        combo = None
        if self.track:
            combo = {label: self.ring.one}
            axpy(combo, -self.ring.one, acc)
            combo = {k: x * inv for k, x in combo.items()}
        self.pivot_row[pivot] = len(self.rows)
        self.rows.append((pivot, row, combo))
        self.labels.append(label)
        return True

    def contains(self, vec: dict) -> bool:
        residual, _ = self._reduce(vec)
        return not residual

    def solve(self, vec: dict) -> dict:
        """Coefficients (by label) expressing ``vec`` in the inserted vectors."""
        if not self.track:
            raise ValueError("solve needs an Echelon built with track=True")
        residual, acc = self._reduce(vec)
        if residual:
            raise NotInSpan(f"vector has {len(residual)} coordinates outside the span")
        return acc


def rank_of(vectors: Iterable[dict], ring: ScalarRing = CLASSICAL) -> int:
    ech = Echelon(ring)
    for v in vectors:
        ech.add(v)
    return ech.rank
