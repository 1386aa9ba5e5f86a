"""Relation suites checked as operator identities on tensor space.

Each check returns :class:`RelationResult` records; a record fails with a
witness naming the generator indices and one offending matrix entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import enumerate_compositions
from .tensorrep import ExactOperator, GeneratorSet


@dataclass
class RelationResult:
    relation: str
    passed: bool
    params: dict = field(default_factory=dict)
    witness: str | None = None

    def to_json(self):
        out = {"relation": self.relation, "passed": self.passed, "params": self.params}
        if self.witness:
            out["witness"] = self.witness
        return out


def _diff_witness(lhs: ExactOperator, rhs: ExactOperator):
    diff = lhs - rhs
    if diff.is_zero():
        return None
    r, c, x = next(diff.entries())
    return f"lhs-rhs has entry {x!r} at (row {r}, col {c})"


def _record(out, rel, lhs, rhs, **params):
    w = _diff_witness(lhs, rhs)
    out.append(RelationResult(rel, w is None, params, w))


def _pair(i, j):
    """(e_i, alpha_j) for alpha_j = e_j - e_{j+1}."""
    return (i == j) - (i == j + 1)


def _serre(out, rel, gens, coeff, n):
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            a, b = gens[i], gens[j]
            if abs(i - j) == 1:
                lhs = a @ a @ b - (a @ b @ a).scale(coeff) + b @ a @ a
                _record(out, rel, lhs, lhs.zero(lhs.dim, lhs.ring), i=i, j=j)
            else:
                _record(out, rel, a @ b, b @ a, i=i, j=j)


def classical_relations(gs: GeneratorSet) -> list:
    n, d = gs.n, gs.d
    e, f, h = gs.e, gs.f, gs.h
    one = gs.identity()
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            _record(out, "R1", h[i] @ h[j], h[j] @ h[i], i=i, j=j)
    for i in range(1, n):
        for j in range(1, n):
            rhs = (h[j] - h[j + 1]) if i == j else gs.zero()
            _record(out, "R2", e[i] @ f[j] - f[j] @ e[i], rhs, i=i, j=j)
    for i in range(1, n + 1):
        for j in range(1, n):
            c = _pair(i, j)
            _record(out, "R3", h[i] @ e[j] - e[j] @ h[i], e[j].scale(c), i=i, j=j, gen="e")
            _record(out, "R3", h[i] @ f[j] - f[j] @ h[i], f[j].scale(-c), i=i, j=j, gen="f")
    _serre(out, "R4", e, 2, n)
    _serre(out, "R5", f, 2, n)
    total = gs.zero()
    for i in range(1, n + 1):
        total = total + h[i]
    _record(out, "R6", total, one.scale(d))
    for i in range(1, n + 1):
        prod = one
        for k in range(d + 1):
            prod = prod @ (h[i] - one.scale(k))
        _record(out, "R7", prod, gs.zero(), i=i)
    return out


def quantum_relations(gs: GeneratorSet) -> list:
    n, d, ring = gs.n, gs.d, gs.ring
    e, f, k, kinv = gs.e, gs.f, gs.k, gs.kinv
    v = ring.v_pow
    one = gs.identity()
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            _record(out, "Q1", k[i] @ k[j], k[j] @ k[i], i=i, j=j)
        _record(out, "Q1", k[i] @ kinv[i], one, i=i, j=i, kind="inverse")
        _record(out, "Q1", kinv[i] @ k[i], one, i=i, j=i, kind="inverse")
    denom = v(1) - v(-1)
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                rhs = (k[j] @ kinv[j + 1] - kinv[j] @ k[j + 1]).scale(1 / denom)
            else:
                rhs = gs.zero()
            _record(out, "Q2", e[i] @ f[j] - f[j] @ e[i], rhs, i=i, j=j)
    for i in range(1, n + 1):
        for j in range(1, n):
            c = _pair(i, j)
            _record(out, "Q3", k[i] @ e[j], (e[j] @ k[i]).scale(v(c)), i=i, j=j, gen="E")
            _record(out, "Q3", k[i] @ f[j], (f[j] @ k[i]).scale(v(-c)), i=i, j=j, gen="F")
    qq = v(1) + v(-1)
    _serre(out, "Q4", e, qq, n)
    _serre(out, "Q5", f, qq, n)
    prod = one
    for i in range(1, n + 1):
        prod = prod @ k[i]
    _record(out, "Q6", prod, one.scale(v(d)))
    for i in range(1, n + 1):
        prod = one
        for t in range(d + 1):
            prod = prod @ (k[i] - one.scale(v(t)))
        _record(out, "Q7", prod, gs.zero(), i=i)
    return out


def idempotent_relations(gs: GeneratorSet, idem) -> list:
    """(R1')-(R3') or (Q1')-(Q3') plus the (q-)Serre relations.

    ``idem`` maps a composition to its idempotent operator.
    """
    n, d, ring = gs.n, gs.d, gs.ring
    q = gs.quantum
    tag = "Q" if q else "R"
    e, f = gs.e, gs.f
    lams = enumerate_compositions(n, d)
    lamset = set(lams)
    ones = {lam: idem(lam) for lam in lams}
    out = []
    total = gs.zero()
    for lam in lams:
        total = total + ones[lam]
        for mu in lams:
            rhs = ones[lam] if lam == mu else gs.zero()
            _record(out, f"{tag}1'", ones[lam] @ ones[mu], rhs, lam=list(lam), mu=list(mu))
    _record(out, f"{tag}1'", total, gs.identity(), kind="sum")

    def shifted(lam, i, sign):
        m = list(lam)
        m[i - 1] += sign
        m[i] -= sign
        m = tuple(m)
        return m if m in lamset else None

    for i in range(1, n):
        for lam in lams:
            up, down = shifted(lam, i, 1), shifted(lam, i, -1)
            z = gs.zero()
            _record(out, f"{tag}2'", e[i] @ ones[lam], ones[up] @ e[i] if up else z,
                    i=i, lam=list(lam), form="e1")
            _record(out, f"{tag}2'", f[i] @ ones[lam], ones[down] @ f[i] if down else z,
                    i=i, lam=list(lam), form="f1")
            _record(out, f"{tag}2'", ones[lam] @ e[i], e[i] @ ones[down] if down else z,
                    i=i, lam=list(lam), form="1e")
            _record(out, f"{tag}2'", ones[lam] @ f[i], f[i] @ ones[up] if up else z,
                    i=i, lam=list(lam), form="1f")
    for i in range(1, n):
        for j in range(1, n):
            rhs = gs.zero()
            if i == j:
                for lam in lams:
                    c = lam[j - 1] - lam[j]
                    rhs = rhs + ones[lam].scale(ring.qint(c))
            _record(out, f"{tag}3'", e[i] @ f[j] - f[j] @ e[i], rhs, i=i, j=j)
    coeff = (ring.v_pow(1) + ring.v_pow(-1)) if q else 2
    _serre(out, "Q4" if q else "R4", e, coeff, n)
    _serre(out, "Q5" if q else "R5", f, coeff, n)
    return out
