"""Integral bases of the Schur algebra and candidate sets for the open
conjectures.

Basis elements are e_A 1_lam f_C (``plus``) or f_A 1_lam e_C (``minus``)
subject to a content condition.  The composition is stored for the
idempotent-on-the-right placement; the other placements are derived by
weight shifts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import (CartanBinomial, Idempotent, KPower, KostantMonomial, RootPower,
                      SchurAlgebra, get_algebra)
from .errors import NotInSpan
from .linalg import Echelon
from .rootdata import (Root, RootOrder, add_vectors, componentwise_leq, content,
                       content_right, enumerate_compositions, positive_roots, word_weight)
from .scalars import binomial
from .tensorrep import span_rank

PLACEMENTS = ("left", "middle", "right")
SIDES = ("plus", "minus")


@dataclass(frozen=True)
class BasisElement:
    """e_A 1_lam f_C (side ``plus``) or f_A 1_lam e_C (side ``minus``).

    ``A`` and ``C`` are exponent tuples indexed by the positive roots in
    lexicographic order; ``lam`` is the composition for the placement with
    the idempotent on the right.
    """

    A: tuple
    lam: tuple
    C: tuple
    side: str = "plus"
    orderE: RootOrder | None = None
    orderF: RootOrder | None = None

    @property
    def n(self):
        return len(self.lam)

    def _exps(self, which):
        return dict(zip(positive_roots(self.n), which))

    def left_word(self):
        """Factors left of the idempotent in the middle placement."""
        return self._part("E" if self.side == "plus" else "F", self.A)

    def right_word(self):
        return self._part("F" if self.side == "plus" else "E", self.C)

    def _part(self, kind, exps):
        ex = self._exps(exps)
        order = self.orderE if kind == "E" else self.orderF
        seq = order.roots if order is not None else positive_roots(self.n)
        out = []
        for a in seq:
            m = ex.get(a, 0)
            if m:
                out.append(RootPower(a if kind == "E" else -a, m))
        return tuple(out)

    def word(self):
        return self.left_word() + self.right_word()

    def lam_at(self, placement="right"):
        n = self.n
        if placement == "right":
            return self.lam
        mid = add_vectors(self.lam, word_weight(self.right_word(), n))
        if placement == "middle":
            return mid
        if placement == "left":
            return add_vectors(mid, word_weight(self.left_word(), n))
        raise ValueError(f"unknown placement {placement!r}")

    def monomial(self, placement="right") -> KostantMonomial:
        idem = Idempotent(self.lam_at(placement))
        lw, rw = self.left_word(), self.right_word()
        if placement == "right":
            return KostantMonomial(lw + rw + (idem,))
        if placement == "middle":
            return KostantMonomial(lw + (idem,) + rw)
        return KostantMonomial((idem,) + lw + rw)

    def is_hecke(self, omega) -> bool:
        return self.lam_at("left") == tuple(omega) and self.lam_at("right") == tuple(omega)

    def to_json(self, placement="right"):
        roots = positive_roots(self.n)
        return {
            "A": [[list(r), a] for r, a in zip(roots, self.A) if a],
            "lambda": list(self.lam_at(placement)),
            "C": [[list(r), c] for r, c in zip(roots, self.C) if c],
            "side": self.side,
            "placement": placement,
        }

    def __str__(self):
        w = " ".join(str(f) for f in self.word())
        lam = ",".join(map(str, self.lam))
        return f"{w} 1[{lam}]" if w else f"1[{lam}]"


def _monomials_upto(k_vars, deg):
    """Exponent vectors in k_vars variables of total degree <= deg."""
    for total in range(deg + 1):
        for combo in itertools.combinations_with_replacement(range(k_vars), total):
            e = [0] * k_vars
            for c in combo:
                e[c] += 1
            yield tuple(e)


def default_orders(n):
    return RootOrder.box(n), RootOrder.reverse_box(n)


def enumerate_piece(n: int, lam, side="plus", orders=None):
    """Y(lam): elements whose right idempotent is 1_lam."""
    orderE, orderF = orders or default_orders(n)
    pos = positive_roots(n)
    idx = {r: k for k, r in enumerate(pos)}
    per_col = []
    for j in range(1, n + 1):
        col_roots = [Root(i, j) for i in range(1, n + 1) if i != j]
        per_col.append([(col_roots, e) for e in _monomials_upto(len(col_roots), lam[j - 1])])
    out = []
    for choice in itertools.product(*per_col):
        P = [0] * len(pos)
        N = [0] * len(pos)
        for col_roots, e in choice:
            for r, m in zip(col_roots, e):
                if r.positive:
                    P[idx[r]] += m
                else:
                    N[idx[-r]] += m
        if side == "plus":
            A, C = tuple(P), tuple(N)
        else:
            A, C = tuple(N), tuple(P)
        out.append(BasisElement(A, tuple(lam), C, side, orderE, orderF))
    out.sort(key=lambda b: (sum(b.A) + sum(b.C), _word_key(b)))
    return out


def _word_key(b):
    return tuple((f.root.i, f.root.j, f.m) for f in b.word())


def piece_size(lam, n) -> int:
    out = 1
    for part in lam:
        out *= binomial(part + n - 1, n - 1)
    return out


class SchurBasis:
    """An ordered basis, with the linear algebra needed to take coordinates."""

    def __init__(self, n, d, side="plus", orders=None):
        if side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")
        self.n, self.d, self.side = n, d, side
        self.orders = orders or default_orders(n)
        self.elements = []
        for lam in enumerate_compositions(n, d):
            self.elements.extend(enumerate_piece(n, lam, side, self.orders))
        self.index = {b: k for k, b in enumerate(self.elements)}
        self._by_word = {(b.word(), b.lam): k for k, b in enumerate(self.elements)}
        self._echelon = {}
        self._ops = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def lookup(self, word, lam):
        """Index of the element with this right-placement word, or None."""
        return self._by_word.get((tuple(word), tuple(lam)))

    def operators(self, alg: SchurAlgebra):
        key = alg.ring.name
        ops = self._ops.get(key)
        if ops is None:
            ops = [alg.evaluate(b.monomial("right")) for b in self.elements]
            self._ops[key] = ops
        return ops

    def echelon(self, alg: SchurAlgebra) -> Echelon:
        key = alg.ring.name
        ech = self._echelon.get(key)
        if ech is None:
            ech = Echelon(alg.ring, track=True)
            for k, op in enumerate(self.operators(alg)):
                ech.add(op.to_vector(), k)
            self._echelon[key] = ech
        return ech

    def to_json(self, placement="right"):
        return [b.to_json(placement) for b in self.elements]


@lru_cache(maxsize=None)
def _cached_basis(n, d, side, orders):
    return SchurBasis(n, d, side, orders)


def get_basis(n, d, side="plus", orders=None) -> SchurBasis:
    return _cached_basis(n, d, side, tuple(orders) if orders else default_orders(n))


def enumerate_basis(n, d, ring=None, side="plus", placement="right", orders=None) -> list:
    """All basis elements in a deterministic order (ring-independent)."""
    if placement not in PLACEMENTS:
        raise ValueError(f"placement must be one of {PLACEMENTS}")
    return list(get_basis(n, d, side, orders).elements)


def schur_dimension(n, d) -> int:
    return binomial(n * n + d - 1, d)


def content_condition(b: BasisElement) -> bool:
    """The defining inequality, checked in the middle placement."""
    return componentwise_leq(content(b.word(), b.n), b.lam_at("middle"))


def verify_basis(elems: Sequence[BasisElement], alg: SchurAlgebra) -> dict:
    ops = [alg.evaluate(b.monomial("right")) for b in elems]
    rank = span_rank(ops) if ops else 0
    expected = schur_dimension(alg.n, alg.d)
    return {"count": len(elems), "rank": rank, "expected": expected,
            "independent": rank == len(elems), "passed": rank == len(elems) == expected}


class CoordinateVector:
    """Coordinates with respect to a :class:`SchurBasis`."""

    def __init__(self, basis: SchurBasis, ring, coords: dict):
        self.basis = basis
        self.ring = ring
        self.coords = {k: c for k, c in coords.items() if c}
        self.integral = all(ring.is_integral(c) for c in self.coords.values())

    def __eq__(self, other):
        if isinstance(other, CoordinateVector):
            return self.coords == other.coords
        if isinstance(other, dict):
            return self.coords == {k: c for k, c in other.items() if c}
        return NotImplemented

    def __getitem__(self, k):
        return self.coords.get(k, self.ring.zero)

    def items(self):
        return sorted(self.coords.items())

    def __len__(self):
        return len(self.coords)

    def to_json(self):
        return {str(k): self.ring.to_json(c) for k, c in self.items()}

    def __repr__(self):
        body = ", ".join(f"{self.basis[k]}: {c}" for k, c in self.items())
        return "{" + body + "}"


def express_in_basis(op, basis: SchurBasis, alg: SchurAlgebra) -> CoordinateVector:
    ech = basis.echelon(alg)
    coords = ech.solve(op.to_vector())
    return CoordinateVector(basis, alg.ring, coords)


# -- card bijection -----------------------------------------------------------

def card_bijection(A, B, C, n, d, orders=None) -> BasisElement:
    """(A, B, C) with B_1 = 0 and |A|+|B|+|C| <= d to the plus-side element
    e_A 1_lam f_C, lam = (d-|A|-|B|-|C|) e_1 + B + chi(e_A f_C)."""
    A, B, C = tuple(A), tuple(B), tuple(C)
    if B[0] != 0:
        raise ValueError("B_1 must be 0")
    rest = d - sum(A) - sum(B) - sum(C)
    if rest < 0:
        raise ValueError("|A|+|B|+|C| exceeds d")
    orderE, orderF = orders or default_orders(n)
    probe = BasisElement(A, tuple([0] * n), C, "plus", orderE, orderF)
    chi = content(probe.word(), n)
    mid = list(add_vectors(B, chi))
    mid[0] += rest
    right = add_vectors(tuple(mid), word_weight(probe.right_word(), n), -1)
    return BasisElement(A, right, C, "plus", orderE, orderF)


def card_bijection_inverse(b: BasisElement):
    n = b.n
    mid = b.lam_at("middle")
    chi = content(b.word(), n)
    B = list(add_vectors(mid, chi, -1))
    B[0] = 0
    return b.A, tuple(B), b.C


def card_domain(n, d):
    """The index set P of triples (A, B, C)."""
    k = len(positive_roots(n))
    out = []
    for e in _monomials_upto(2 * k + n - 1, d):
        A, Bt, C = e[:k], e[k:k + n - 1], e[k + n - 1:]
        out.append((A, (0,) + Bt, C))
    return out


# -- conjecture candidate sets -------------------------------------------------

CONJECTURE_KINDS = ("pbw", "eHf", "fHe", "EKF", "FKE", "borel", "cartan-subring")


def _root_word(exps, order, sign, n, divided=True):
    ex = dict(zip(positive_roots(n), exps))
    out = []
    for a in order.roots:
        m = ex.get(a, 0)
        if not m:
            continue
        r = a if sign > 0 else -a
        out.extend([RootPower(r, m)] if divided else [RootPower(r, 1)] * m)
    return tuple(out)


def _cartan_word(B, quantum, divided=True):
    out = []
    for i, b in enumerate(B, start=1):
        if not b:
            continue
        if divided:
            out.append(CartanBinomial(i, 0, b))
        elif quantum:
            out.extend([KPower(i, 1)] * b)
        else:
            out.extend([CartanBinomial(i, 0, 1)] * b)
    return tuple(out)


def enumerate_conjecture_sets(n, d, i0=1, kind="eHf", quantum=False, orders=None) -> list:
    """Candidate spanning sets from the open conjectures, as monomials.

    ``eHf``/``fHe``: e_A H_B f_C and f_A H_B e_C (H_B becomes K_B in the
    quantum ring; ``EKF``/``FKE`` force that reading).  ``pbw``: ordinary
    powers of root vectors and of H_i (K_i), i != i0.  ``borel``: E_A H_B.
    """
    if not 1 <= i0 <= n:
        raise ValueError("i0 must lie in 1..n")
    orderE, orderF = orders or default_orders(n)
    k = len(positive_roots(n))
    free = [i for i in range(1, n + 1) if i != i0]
    if kind in ("EKF", "FKE"):
        quantum = True
    out = []
    if kind in ("eHf", "fHe", "EKF", "FKE", "pbw"):
        nvars = 2 * k + n - 1
    elif kind == "borel":
        nvars = k + n - 1
    else:
        raise ValueError(f"no candidate set for kind {kind!r}")
    for e in _monomials_upto(nvars, d):
        A = e[:k]
        Bfree = e[k:k + n - 1]
        C = e[k + n - 1:] if kind != "borel" else (0,) * k
        B = [0] * n
        for i, b in zip(free, Bfree):
            B[i - 1] = b
        if kind == "pbw":
            w = (_root_word(A, orderE, +1, n, divided=False) + _cartan_word(B, quantum, divided=False)
                 + _root_word(C, orderF, -1, n, divided=False))
        elif kind in ("eHf", "EKF", "borel"):
            w = _root_word(A, orderE, +1, n) + _cartan_word(B, quantum) + _root_word(C, orderF, -1, n)
        else:
            w = _root_word(A, orderF, -1, n) + _cartan_word(B, quantum) + _root_word(C, orderE, +1, n)
        out.append(KostantMonomial(w))
    return out
