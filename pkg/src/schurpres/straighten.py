"""Rewrite Kostant monomials into the canonical basis by commutation rules.

Idempotents are pushed to the right end first, so every term is a word of
divided powers followed by one 1_mu.  Cartan factors produced by the rules
are evaluated on the spot: at a known weight they are just scalars.

A term whose right content overshoots mu has a *bad* column j (the first
one that overshoots).  Factors X_ij ending in that column are bad; the
leftmost good factor sitting right of a bad one is commuted past its left
neighbour.  Terms with no overshoot are sorted into the target order by
adjacent swaps.  Either way the leading term of each rule is the swapped
product, and the rest has lower degree (for n <= 3) or is handled by the
same two moves.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .algebra import (CartanBinomial, Idempotent, KostantMonomial, KPower, LinearCombination,
                      RootKBinomial, RootPower, parse_monomial)
from .basisgen import CoordinateVector, SchurBasis, get_basis
from .errors import NonTermination
from .rootdata import content_right, deviation, enumerate_compositions, roots
from .rules import rule_table
from .scalars import ring_by_name


class Measure(NamedTuple):
    """Lexicographic termination measure of a placed word."""

    deviation: int
    degree: int
    defect: int
    crossings: int
    inversions: int


def _weight_step(nu, f):
    i, j = f.root
    out = list(nu)
    out[i - 1] += f.m
    out[j - 1] -= f.m
    return tuple(out)


def cartan_value(f, nu, ring):
    """Eigenvalue of a diagonal factor on the weight space nu."""
    if isinstance(f, CartanBinomial):
        return ring.qbinom(nu[f.i - 1] + f.c, f.t)
    if isinstance(f, RootKBinomial):
        i, j = f.root
        return ring.qbinom(nu[i - 1] - nu[j - 1] + f.c, f.t)
    if isinstance(f, KPower):
        if not ring.quantum:
            raise ValueError("K factors only exist in the quantum ring")
        return ring.v_pow(f.sign * nu[f.i - 1])
    if isinstance(f, Idempotent):
        return ring.one if tuple(f.lam) == tuple(nu) else ring.zero
    raise TypeError(f"not a diagonal factor: {f!r}")


def place(factors, mu, ring):
    """Scan right to left from weight mu.

    Returns (coefficient, root-power word) or None when the product is zero
    on 1_mu (a Cartan factor vanishes or some weight leaves Lambda(n, d)).
    """
    nu = tuple(mu)
    coeff = ring.one
    word = []
    for f in reversed(factors):
        if isinstance(f, RootPower):
            if f.m == 0:
                continue
            nu = _weight_step(nu, f)
            if min(nu) < 0:
                return None
            word.append(f)
        else:
            coeff = coeff * cartan_value(f, nu, ring)
            if not coeff:
                return None
    word.reverse()
    return coeff, tuple(word)


def merge_adjacent(word, ring):
    """Combine neighbouring powers of the same root; returns (coeff, word)."""
    coeff = ring.one
    out = []
    for f in word:
        if out and out[-1].root == f.root:
            g = out.pop()
            coeff = coeff * ring.qbinom(g.m + f.m, f.m)
            out.append(RootPower(f.root, g.m + f.m))
        else:
            out.append(f)
    return coeff, tuple(out)


def move_idempotents_right(m, n: int, d: int, ring) -> LinearCombination:
    """Rewrite m as a sum of words ending in one idempotent.

    Keys are KostantMonomials whose last factor is an Idempotent.
    """
    ring = ring_by_name(ring)
    m = parse_monomial(m) if isinstance(m, str) else m
    factors = tuple(m.factors if isinstance(m, KostantMonomial) else m)
    out = LinearCombination(ring)
    for mu in enumerate_compositions(n, d):
        placed = place(factors, mu, ring)
        if placed is None:
            continue
        c, word = placed
        out.add(KostantMonomial(word + (Idempotent(mu),)), c)
    return out


class Straightener:
    """Normal forms with respect to one :class:`SchurBasis`.

    Results for (word, mu) are memoised, so later calls reuse earlier work.
    """

    def __init__(self, n: int, d: int, ring, side: str = "plus", orders=None,
                 basis: SchurBasis | None = None, max_steps: int = 2_000_000,
                 check_measure: bool = False):
        self.n, self.d = n, d
        self.ring = ring_by_name(ring)
        self.basis = basis or get_basis(n, d, side, orders)
        self.side = self.basis.side
        self.orderE, self.orderF = self.basis.orders
        self.rules = rule_table(self.ring)
        self.max_steps = max_steps
        self.check_measure = check_measure
        self.steps = 0
        self.measure_violations = []
        self.rule_uses: dict = {}
        self._memo: dict = {}
        self._active: set = set()

    # ordering ------------------------------------------------------------
    def sort_key(self, f: RootPower):
        first = 0 if f.root.positive == (self.side == "plus") else 1
        order = self.orderE if f.root.positive else self.orderF
        return (first, order.key(f.root))

    def measure(self, word, mu) -> Measure:
        chi = content_right(word, self.n)
        dev = deviation(chi, mu)
        deg = sum(f.m for f in word)
        defect = crossings = inversions = 0
        if dev:
            col = next(j for j in range(self.n) if chi[j] > mu[j]) + 1
            seen_bad = 0
            for f in word:
                if f.root.j == col:
                    seen_bad += 1
                elif seen_bad:
                    defect += f.m
                    crossings += f.m * seen_bad
        else:
            keys = [self.sort_key(f) for f in word]
            inversions = sum(1 for p in range(len(keys)) for q in range(p + 1, len(keys))
                             if keys[p] > keys[q])
        return Measure(dev, deg, defect, crossings, inversions)

    # rewriting -------------------------------------------------------------
    def _choose_pair(self, word, mu):
        """Position p such that word[p], word[p+1] get swapped, or None if the
        word is already a basis word (or its term vanishes)."""
        chi = content_right(word, self.n)
        over = [j for j in range(self.n) if chi[j] > mu[j]]
        if over:
            col = over[0] + 1
            seen_bad = False
            for p, f in enumerate(word):
                if f.root.j == col:
                    seen_bad = True
                elif seen_bad:
                    return p - 1
            return -1  # all bad factors at the right end: the term is zero
        for p in range(len(word) - 1):
            if self.sort_key(word[p]) > self.sort_key(word[p + 1]):
                return p
        return None

    def normal_form(self, word, mu) -> dict:
        """Coordinates (basis index -> scalar) of word * 1_mu."""
        key = (word, mu)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if key in self._active:
            raise NonTermination(f"rewriting returned to {KostantMonomial(word)} 1{list(mu)}")
        self.steps += 1
        if self.steps > self.max_steps:
            raise NonTermination(f"step budget {self.max_steps} exhausted")
        self._active.add(key)
        try:
            out = self._normal_form(word, mu)
        finally:
            self._active.discard(key)
        self._memo[key] = out
        return out

    def _normal_form(self, word, mu) -> dict:
        p = self._choose_pair(word, mu)
        if p is None:
            idx = self.basis.lookup(word, mu)
            if idx is None:
                raise NonTermination(f"sorted word {KostantMonomial(word)} 1{list(mu)} is not a basis word")
            return {idx: self.ring.one}
        if p < 0:
            return {}
        P, Q = word[p], word[p + 1]
        rule = self.rules.find(P.root, Q.root)
        self.rule_uses[rule.name] = self.rule_uses.get(rule.name, 0) + 1
        expansion = rule(P, Q, self.ring)
        before = self.measure(word, mu) if self.check_measure else None
        ring = self.ring
        out: dict = {}
        prefix, suffix = word[:p], word[p + 2:]
        for piece, c in expansion.items():
            placed = place(prefix + piece.factors + suffix, mu, ring)
            if placed is None:
                continue
            c2, w2 = placed
            c3, w3 = merge_adjacent(w2, ring)
            coeff = c * c2 * c3
            if before is not None:
                after = self.measure(w3, mu)
                if not after < before:
                    self.measure_violations.append((rule.name, before, after))
            for idx, x in self.normal_form(w3, mu).items():
                s = out.get(idx, ring.zero) + coeff * x
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        return out

    def straighten(self, m) -> CoordinateVector:
        """Coordinates of a monomial (or LinearCombination, or text) in the basis."""
        ring = self.ring
        if isinstance(m, LinearCombination):
            total: dict = {}
            for key, c in m.items():
                for idx, x in self.straighten(key).coords.items():
                    total[idx] = total.get(idx, ring.zero) + c * x
            return CoordinateVector(self.basis, ring, total)
        total = {}
        for key, c in move_idempotents_right(m, self.n, self.d, ring).items():
            word, mu = key.factors[:-1], tuple(key.factors[-1].lam)
            cm, word = merge_adjacent(word, ring)
            for idx, x in self.normal_form(word, mu).items():
                total[idx] = total.get(idx, ring.zero) + c * cm * x
        return CoordinateVector(self.basis, ring, total)


_STRAIGHTENERS: dict = {}


def get_straightener(n, d, ring, side="plus", orders=None) -> Straightener:
    ring = ring_by_name(ring)
    key = (n, d, ring.name, side, orders)
    s = _STRAIGHTENERS.get(key)
    if s is None:
        s = _STRAIGHTENERS[key] = Straightener(n, d, ring, side, orders)
    return s


def straighten(m, n: int, d: int, ring="classical", side="plus", orders=None) -> CoordinateVector:
    return get_straightener(n, d, ring, side, orders).straighten(m)


def random_monomial(n: int, d: int, quantum: bool, rng: random.Random | None = None,
                    max_factors: int = 6, nonzero: bool = True, min_factors: int = 1) -> KostantMonomial:
    """A random word mixing root powers, Cartan binomials, K^{+-1} and
    idempotents, with root-power degree at most 2d.

    With ``nonzero`` the word is redrawn until it survives on some 1_mu.
    """
    rng = rng or random.Random()
    rts = roots(n)
    lams = enumerate_compositions(n, d)
    ring = ring_by_name("quantum" if quantum else "classical")
    while True:
        out = []
        budget = 2 * d
        for _ in range(rng.randint(min_factors, max_factors)):
            kind = rng.random()
            if kind < 0.75 and budget > 0:
                m = rng.choice((1, 1, 1, 2, 3)) if d > 1 else 1
                m = min(m, budget, d)
                budget -= m
                out.append(RootPower(rng.choice(rts), m))
            elif kind < 0.85:
                out.append(CartanBinomial(rng.randint(1, n), rng.randint(-1, 1), rng.randint(0, 2)))
            elif kind < 0.93 and quantum:
                out.append(KPower(rng.randint(1, n), rng.choice((1, -1))))
            else:
                out.append(Idempotent(rng.choice(lams)))
        m = KostantMonomial(tuple(out))
        if not nonzero or move_idempotents_right(m, n, d, ring):
            return m
