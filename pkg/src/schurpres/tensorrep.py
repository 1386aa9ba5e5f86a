"""Concrete realization on tensor space V^{(x)d}.

Basis vectors of V^{(x)d} are words in {1..n} of length d, indexed by their
base-n encoding.  Operators are sparse column maps of exact scalars.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import BoundExceeded, ConventionFailure, DimensionMismatch
from .linalg import Echelon
from .scalars import CLASSICAL, QUANTUM, ScalarRing, ring_by_name


class ExactOperator:
    """Sparse linear endomorphism: ``cols[c][r]`` is the (r, c) entry."""

    __slots__ = ("dim", "ring", "cols")

    def __init__(self, dim: int, ring: ScalarRing, cols=None):
        self.dim = dim
        self.ring = ring
        self.cols = {}
        if cols:
            for c, col in cols.items():
                col = {r: x for r, x in col.items() if x}
                if col:
                    self.cols[c] = col

    @classmethod
    def _raw(cls, dim, ring, cols):
        op = cls.__new__(cls)
        op.dim = dim
        op.ring = ring
        op.cols = cols
        return op

    @classmethod
    def identity(cls, dim, ring):
        one = ring.one
        return cls._raw(dim, ring, {c: {c: one} for c in range(dim)})

    @classmethod
    def zero(cls, dim, ring):
        return cls._raw(dim, ring, {})

    @classmethod
    def diagonal(cls, values, ring):
        values = list(values)
        return cls._raw(len(values), ring, {c: {c: x} for c, x in enumerate(values) if x})

    @classmethod
    def from_entries(cls, dim, ring, entries):
        cols = {}
        for r, c, x in entries:
            if x:
                col = cols.setdefault(c, {})
                s = col.get(r)
                col[r] = x if s is None else s + x
        return cls(dim, ring, cols)

    def _check(self, other):
        if not isinstance(other, ExactOperator):
            raise TypeError("expected an ExactOperator")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")
        if other.ring is not self.ring:
            raise DimensionMismatch("operators over different scalar rings")

    # -- algebra
    def compose(self, other: "ExactOperator") -> "ExactOperator":
        """self o other (other acts first)."""
        self._check(other)
        out = {}
        mine = self.cols
        for c, col in other.cols.items():
            acc = {}
            for k, y in col.items():
                a = mine.get(k)
                if not a:
                    continue
                for r, x in a.items():
                    s = acc.get(r)
                    acc[r] = x * y if s is None else s + x * y
            acc = {r: x for r, x in acc.items() if x}
            if acc:
                out[c] = acc
        return ExactOperator._raw(self.dim, self.ring, out)

    __matmul__ = compose

    def __add__(self, other):
        self._check(other)
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = out.setdefault(c, {})
            for r, x in col.items():
                s = tgt.get(r)
                s = x if s is None else s + x
                if s:
                    tgt[r] = s
                else:
                    tgt.pop(r, None)
            if not tgt:
                del out[c]
        return ExactOperator._raw(self.dim, self.ring, out)

    def __neg__(self):
        return ExactOperator._raw(self.dim, self.ring,
                                  {c: {r: -x for r, x in col.items()} for c, col in self.cols.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "ExactOperator":
        a = self.ring.coerce(a)
        if not a:
            return ExactOperator.zero(self.dim, self.ring)
        return ExactOperator._raw(self.dim, self.ring,
                                  {c: {r: a * x for r, x in col.items()} for c, col in self.cols.items()})

    def divide(self, a) -> "ExactOperator":
        """Entrywise exact division by a scalar (keeps integral entries integral)."""
        a = self.ring.coerce(a)
        return ExactOperator._raw(self.dim, self.ring,
                                  {c: {r: x / a for r, x in col.items()} for c, col in self.cols.items()})

    def __mul__(self, a):
        if isinstance(a, ExactOperator):
            return self.compose(a)
        return self.scale(a)

    def __rmul__(self, a):
        return self.scale(a)

    def __pow__(self, k: int):
        out = ExactOperator.identity(self.dim, self.ring)
        for _ in range(k):
            out = out.compose(self)
        return out

    def map_scalars(self, fn, ring: ScalarRing) -> "ExactOperator":
        return ExactOperator(self.dim, ring,
                             {c: {r: fn(x) for r, x in col.items()} for c, col in self.cols.items()})

    # -- inspection
    def __eq__(self, other):
        if not isinstance(other, ExactOperator):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def __hash__(self):
        return hash((self.dim, len(self.cols)))

    def is_zero(self) -> bool:
        return not self.cols

    def entry(self, r, c):
        return self.cols.get(c, {}).get(r, self.ring.zero)

    def entries(self):
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def apply(self, vec: dict) -> dict:
        out = {}
        for c, y in vec.items():
            for r, x in self.cols.get(c, {}).items():
                s = out.get(r)
                out[r] = x * y if s is None else s + x * y
        return {r: x for r, x in out.items() if x}

    def diagonal_values(self):
        return [self.cols.get(c, {}).get(c, self.ring.zero) for c in range(self.dim)]

    def is_diagonal(self) -> bool:
        return all(list(col) == [c] for c, col in self.cols.items())

    def to_vector(self) -> dict:
        N = self.dim
        return {r * N + c: x for c, col in self.cols.items() for r, x in col.items()}

    def to_json(self) -> dict:
        tj = self.ring.to_json
        return {"dim": self.dim, "entries": [[r, c, tj(x)] for r, c, x in self.entries()]}

    @classmethod
    def from_json(cls, data: dict, ring) -> "ExactOperator":
        ring = ring_by_name(ring)
        return cls.from_entries(data["dim"], ring,
                                ((r, c, ring.from_json(x)) for r, c, x in data["entries"]))

    def __repr__(self):
        return f"<ExactOperator dim={self.dim} nnz={self.nnz()} ring={self.ring.name}>"


def compose(a: ExactOperator, b: ExactOperator) -> ExactOperator:
    return a.compose(b)


# -- tensor space ------------------------------------------------------------

class TensorSpace:
    """Words of length d over {1..n} in base-n order."""

    def __init__(self, n: int, d: int):
        self.n, self.d = n, d
        self.words = list(itertools.product(range(1, n + 1), repeat=d))
        self.dim = len(self.words)
        self.weights = [tuple(w.count(i) for i in range(1, n + 1)) for w in self.words]

    def index(self, word) -> int:
        k = 0
        for a in word:
            k = k * self.n + (a - 1)
        return k

    def __len__(self):
        return self.dim


@lru_cache(maxsize=None)
def tensor_space(n: int, d: int) -> TensorSpace:
    return TensorSpace(n, d)


class GeneratorSet:
    """Images of the Chevalley-type generators on V^{(x)d}.

    Classical sets carry ``e``, ``f``, ``h``; quantum sets carry ``e``, ``f``
    (the E_i, F_i), ``k`` and ``kinv``.  Dicts are keyed by the 1-based index.
    """

    def __init__(self, n, d, ring, e, f, h=None, k=None, kinv=None, metadata=None):
        self.n, self.d, self.ring = n, d, ring
        self.space = tensor_space(n, d)
        self.dim = self.space.dim
        self.e, self.f = dict(e), dict(f)
        self.h = dict(h or {})
        self.k = dict(k or {})
        self.kinv = dict(kinv or {})
        self.metadata = dict(metadata or {})

    @property
    def quantum(self) -> bool:
        return self.ring.quantum

    def identity(self) -> ExactOperator:
        return ExactOperator.identity(self.dim, self.ring)

    def zero(self) -> ExactOperator:
        return ExactOperator.zero(self.dim, self.ring)

    def cartan(self, i: int) -> ExactOperator:
        """H_i in the classical set, K_i in the quantum set."""
        return self.k[i] if self.quantum else self.h[i]

    def replace(self, **changes) -> "GeneratorSet":
        fields = dict(e=self.e, f=self.f, h=self.h, k=self.k, kinv=self.kinv,
                      metadata=self.metadata)
        for key, val in changes.items():
            fields[key] = {**fields[key], **val} if key != "metadata" else val
        return GeneratorSet(self.n, self.d, self.ring, **fields)


def _check_nd(n, d):
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")


@lru_cache(maxsize=None)
def build_classical_generators(n: int, d: int) -> GeneratorSet:
    """e_i, f_i act as derivations, H_i counts letters equal to i."""
    _check_nd(n, d)
    sp = tensor_space(n, d)
    ring = CLASSICAL
    one = ring.one
    e, f, h = {}, {}, {}
    for i in range(1, n):
        ecols, fcols = {}, {}
        for c, w in enumerate(sp.words):
            for p, a in enumerate(w):
                if a == i + 1:
                    r = sp.index(w[:p] + (i,) + w[p + 1:])
                    col = ecols.setdefault(c, {})
                    col[r] = col.get(r, 0) + one
                if a == i:
                    r = sp.index(w[:p] + (i + 1,) + w[p + 1:])
                    col = fcols.setdefault(c, {})
                    col[r] = col.get(r, 0) + one
        e[i] = ExactOperator(sp.dim, ring, ecols)
        f[i] = ExactOperator(sp.dim, ring, fcols)
    for i in range(1, n + 1):
        h[i] = ExactOperator.diagonal([ring.coerce(wt[i - 1]) for wt in sp.weights], ring)
    return GeneratorSet(n, d, ring, e, f, h=h, metadata={"ring": "classical"})


# Two comultiplications are tried, in this order.  "right-twist" is
#   D(E) = E (x) K_i K_{i+1}^-1 + 1 (x) E,  D(F) = F (x) 1 + K_i^-1 K_{i+1} (x) F,
# "left-twist" is its mirror image
#   D(E) = E (x) 1 + K_i K_{i+1}^-1 (x) E,  D(F) = F (x) K_i^-1 K_{i+1} + 1 (x) F.
CONVENTIONS = ("right-twist", "left-twist")


def _quantum_ops(n, d, convention):
    sp = tensor_space(n, d)
    ring = QUANTUM
    vp = ring.v_pow
    e, f, k, kinv = {}, {}, {}, {}

    def kappa(letter, i):
        return (letter == i) - (letter == i + 1)

    for i in range(1, n):
        ecols, fcols = {}, {}
        for c, w in enumerate(sp.words):
            for p, a in enumerate(w):
                before = sum(kappa(x, i) for x in w[:p])
                after = sum(kappa(x, i) for x in w[p + 1:])
                if a == i + 1:
                    ex = after if convention == "right-twist" else before
                    r = sp.index(w[:p] + (i,) + w[p + 1:])
                    col = ecols.setdefault(c, {})
                    col[r] = col.get(r, ring.zero) + vp(ex)
                if a == i:
                    ex = -before if convention == "right-twist" else -after
                    r = sp.index(w[:p] + (i + 1,) + w[p + 1:])
                    col = fcols.setdefault(c, {})
                    col[r] = col.get(r, ring.zero) + vp(ex)
        e[i] = ExactOperator(sp.dim, ring, ecols)
        f[i] = ExactOperator(sp.dim, ring, fcols)
    for i in range(1, n + 1):
        k[i] = ExactOperator.diagonal([vp(wt[i - 1]) for wt in sp.weights], ring)
        kinv[i] = ExactOperator.diagonal([vp(-wt[i - 1]) for wt in sp.weights], ring)
    return e, f, k, kinv


@lru_cache(maxsize=None)
def build_quantum_generators(n: int, d: int, convention: str | None = None) -> GeneratorSet:
    """E_i, F_i, K_i^{+-1} on V^{(x)d}, self-validated against (Q1)-(Q7).

    Without an explicit ``convention`` the right-twisted comultiplication is
    tried first and the mirrored one only if the relation suite fails.
    """
    from .relations import quantum_relations  # local: relations imports this module

    _check_nd(n, d)
    tried = []
    for conv in ([convention] if convention else CONVENTIONS):
        e, f, k, kinv = _quantum_ops(n, d, conv)
        gs = GeneratorSet(n, d, QUANTUM, e, f, k=k, kinv=kinv,
                          metadata={"ring": "quantum", "coproduct": conv})
        failures = [r for r in quantum_relations(gs) if not r.passed]
        if not failures:
            gs.metadata["fallback_used"] = conv != CONVENTIONS[0]
            gs.metadata["validated"] = "Q1-Q7"
            return gs
        tried.append((conv, [r.relation for r in failures]))
    raise ConventionFailure(f"no comultiplication passed Q1-Q7: {tried}")


def build_generators(n: int, d: int, ring) -> GeneratorSet:
    ring = ring_by_name(ring)
    return build_quantum_generators(n, d) if ring.quantum else build_classical_generators(n, d)


# -- rank and minimal polynomials ---------------------------------------------

def span_rank(ops) -> int:
    ops = list(ops)
    if not ops:
        raise ValueError("span_rank needs at least one operator")
    dim, ring = ops[0].dim, ops[0].ring
    ech = Echelon(ring)
    for op in ops:
        if op.dim != dim:
            raise DimensionMismatch("operators of different dimension")
        ech.add(op.to_vector())
    return ech.rank


def minimal_polynomial(a: ExactOperator, degree_bound: int) -> tuple:
    """Monic minimal polynomial, coefficients listed from X^0 upward."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    ring = a.ring
    ech = Echelon(ring, track=True)
    power = ExactOperator.identity(a.dim, ring)
    for k in range(degree_bound + 1):
        vec = power.to_vector()
        if ech.contains(vec):
            coeffs = ech.solve(vec)
            return tuple([-coeffs.get(j, ring.zero) for j in range(k)] + [ring.one])
        ech.add(vec, k)
        power = power.compose(a)
    raise BoundExceeded(f"no annihilating polynomial of degree <= {degree_bound}")


def poly_from_roots(roots, ring) -> tuple:
    """Coefficients (X^0 first) of prod (X - r)."""
    out = [ring.one]
    for r in roots:
        r = ring.coerce(r)
        nxt = [ring.zero] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - r * c
        out = nxt
    return tuple(out)
