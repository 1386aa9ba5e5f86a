"""Verification suites, structure constants and conjecture reports.

Everything here returns plain report objects with ``to_json``; files
written by :func:`dump_json` carry an {n, d, ring, schema-version} header.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .algebra import CartanBinomial, RootPower, get_algebra
from .basisgen import (CONJECTURE_KINDS, SchurBasis, _monomials_upto, enumerate_conjecture_sets,
                       express_in_basis, get_basis, schur_dimension, verify_basis)
from .errors import BoundExceeded, IntegralityFailure
from .linalg import Echelon
from .relations import RelationResult, classical_relations, idempotent_relations, quantum_relations
from .rootdata import componentwise_leq, content, enumerate_compositions, positive_roots, simple_root
from .scalars import CLASSICAL, ring_by_name
from .tensorrep import GeneratorSet, build_generators, minimal_polynomial

SCHEMA_VERSION = 1


def header(n, d, ring) -> dict:
    name = ring if ring == "both" else ring_by_name(ring).name
    return {"n": n, "d": d, "ring": name, "schema-version": SCHEMA_VERSION}


def dump_json(path, payload: dict, n, d, ring):
    doc = dict(header(n, d, ring))
    doc.update(payload)
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
    return doc


@dataclass
class VerificationReport:
    suite: str
    n: int
    d: int
    ring: str
    results: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def relation_ids(self):
        return sorted({r.relation for r in self.results})

    def to_json(self):
        out = header(self.n, self.d, self.ring)
        out.update({"suite": self.suite, "passed": self.passed, "seconds": round(self.seconds, 3),
                    "results": [r.to_json() for r in self.results]})
        return out


# -- presentations ----------------------------------------------------------

def _minpoly_results(gs: GeneratorSet):
    out = []
    d = gs.d
    tag = "K" if gs.quantum else "H"
    for i in range(1, gs.n + 1):
        try:
            poly = minimal_polynomial(gs.cartan(i), d + 1)
            deg = len(poly) - 1
        except BoundExceeded:
            deg = None
        ok = deg == d + 1
        out.append(RelationResult("minpoly", ok, {"generator": f"{tag}{i}", "degree": deg},
                                  None if ok else f"{tag}{i} has minimal polynomial degree {deg}, expected {d + 1}"))
    return out


def _dimension_results(n, d, ring):
    alg = get_algebra(n, d, ring)
    out = []
    for side in ("plus", "minus"):
        rep = verify_basis(get_basis(n, d, side).elements, alg)
        out.append(RelationResult("dimension", rep["passed"],
                                  {"side": side, "count": rep["count"], "rank": rep["rank"],
                                   "expected": rep["expected"]},
                                  None if rep["passed"] else f"{side}: count {rep['count']} rank {rep['rank']}"))
    return out


def verify_presentation(n: int, d: int, ring="classical", gens: GeneratorSet | None = None,
                        dimension: bool = True) -> VerificationReport:
    """(R1)-(R7) or (Q1)-(Q7), minimal-polynomial degrees, and the dimension."""
    t0 = time.perf_counter()
    ring = ring_by_name(ring)
    gs = gens if gens is not None else build_generators(n, d, ring)
    results = quantum_relations(gs) if gs.quantum else classical_relations(gs)
    results += _minpoly_results(gs)
    if dimension and gens is None:
        results += _dimension_results(n, d, ring)
    return VerificationReport("presentation", n, d, ring.name, results, time.perf_counter() - t0)


def perturbed_generators(gs: GeneratorSet) -> GeneratorSet:
    """H_1 -> H_1 + 1 (resp. K_1 -> v K_1): a generator set that must fail."""
    if gs.quantum:
        v = gs.ring.v_pow
        return gs.replace(k={1: gs.k[1].scale(v(1))}, kinv={1: gs.kinv[1].scale(v(-1))})
    return gs.replace(h={1: gs.h[1] + gs.identity()})


def mutation_control(n: int, d: int, ring="classical") -> dict:
    """Negative control: the perturbed set must fail (R2)/(Q2) with a witness."""
    gs = build_generators(n, d, ring)
    rep = verify_presentation(n, d, ring, gens=perturbed_generators(gs), dimension=False)
    target = "Q2" if gs.quantum else "R2"
    hits = [r for r in rep.failures() if r.relation == target]
    return {"check": "mutation-control", "relation": target, "detected": bool(hits),
            "witness": hits[0].witness if hits else None,
            "failed_relations": sorted({r.relation for r in rep.failures()})}


def verify_idempotent_presentation(n: int, d: int, ring="classical") -> VerificationReport:
    """(R1')-(R3') / (Q1')-(Q3') with (q-)Serre, plus H_j = sum lam_j 1_lam."""
    t0 = time.perf_counter()
    alg = get_algebra(n, d, ring)
    gs = alg.gens
    results = idempotent_relations(gs, alg.idempotent)
    for j in range(1, n + 1):
        rebuilt = alg.reconstruct_cartan(j)
        ok = rebuilt == gs.cartan(j)
        results.append(RelationResult("cartan-reconstruction", ok, {"j": j},
                                      None if ok else f"sum over lam differs from the Cartan generator {j}"))
    return VerificationReport("idempotent", n, d, alg.ring.name, results, time.perf_counter() - t0)


# -- structure constants ------------------------------------------------------

@dataclass
class StructureConstants:
    basis: SchurBasis
    ring: object
    table: dict  # (i, j) -> {k: c}

    def __len__(self):
        return len(self.basis)

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        zero = self.ring.zero
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.table.get((i, j), {}).items():
                    s = out.get(k, zero) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def is_integral(self) -> bool:
        return all(self.ring.is_integral(c) for row in self.table.values() for c in row.values())

    def associativity(self, trials: int = 100, seed: int = 0):
        """Spot-check (b_i b_j) b_k = b_i (b_j b_k) on composable triples
        (right weight of each factor = left weight of the next); returns
        the failing triples."""
        rng = random.Random(seed)
        by_left: dict = {}
        for k, b in enumerate(self.basis):
            by_left.setdefault(b.lam_at("left"), []).append(k)
        one = self.ring.one
        bad = []
        for _ in range(trials):
            i = rng.randrange(len(self.basis))
            j = rng.choice(by_left[self.basis[i].lam])
            k = rng.choice(by_left[self.basis[j].lam])
            left = self.product(self.product({i: one}, {j: one}), {k: one})
            right = self.product({i: one}, self.product({j: one}, {k: one}))
            if left != right:
                bad.append((i, j, k))
        return bad

    def identity_coordinates(self) -> dict:
        return {k: self.ring.one for k, b in enumerate(self.basis)
                if not b.word()}

    def specialize(self) -> "StructureConstants":
        """The v = 1 image (a classical-ring table)."""
        out = {}
        for key, row in self.table.items():
            srow = {k: self.ring.specialize(c) for k, c in row.items()}
            srow = {k: c for k, c in srow.items() if c}
            if srow:
                out[key] = srow
        return StructureConstants(self.basis, CLASSICAL, out)

    def to_json(self):
        entries = [[i, j, k, self.ring.to_json(c)]
                   for (i, j), row in sorted(self.table.items()) for k, c in sorted(row.items())]
        return {"basis": self.basis.to_json(), "constants": entries}


def structure_constants(n: int, d: int, ring="classical", side="plus", orders=None,
                        check_integral: bool = True) -> StructureConstants:
    """All products b_i b_j expanded in the basis.

    b_i b_j vanishes unless the right weight of b_i is the left weight of
    b_j, so only those pairs are multiplied out.
    """
    alg = get_algebra(n, d, ring)
    basis = get_basis(n, d, side, orders)
    ops = basis.operators(alg)
    rights = [b.lam for b in basis]
    lefts = [b.lam_at("left") for b in basis]
    table = {}
    for i, a in enumerate(ops):
        for j, b in enumerate(ops):
            if rights[i] != lefts[j]:
                continue
            cv = express_in_basis(a @ b, basis, alg)
            if check_integral and not cv.integral:
                raise IntegralityFailure(f"b_{i} b_{j} = {basis[i]} * {basis[j]} has non-integral coordinates")
            if cv.coords:
                table[(i, j)] = dict(cv.coords)
    return StructureConstants(basis, alg.ring, table)


def compare_specialization(n: int, d: int, side="plus") -> dict:
    q = structure_constants(n, d, "quantum", side).specialize()
    c = structure_constants(n, d, "classical", side)
    keys = set(q.table) | set(c.table)
    diffs = [k for k in sorted(keys) if q.table.get(k, {}) != c.table.get(k, {})]
    return {"check": "specialization", "n": n, "d": d, "passed": not diffs,
            "entries": sum(len(r) for r in c.table.values()),
            "witness": f"product {diffs[0]} differs" if diffs else None}


# -- conjectures ----------------------------------------------------------------

def _span_rank(ops, ring):
    ech = Echelon(ring)
    for k, op in enumerate(ops):
        ech.add(op.to_vector(), k)
    return ech.rank


def divided_power_closure(alg):
    """Greedy basis of the span of all products of E_i^(m), F_i^(m).

    Every kept element is itself such a product (a word), so integral
    coordinates against it prove membership in the integral subring.
    """
    n, d = alg.n, alg.d
    gens = []
    for i in range(1, n):
        for m in range(1, d + 1):
            gens.append(RootPower(simple_root(i), m))
            gens.append(RootPower(-simple_root(i), m))
    ech = Echelon(alg.ring, track=True)
    words = [()]
    ops = {(): alg.identity()}
    ech.add(ops[()].to_vector(), ())
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                w2 = (g,) + w
                op = alg.factor(g) @ ops[w]
                if ech.add(op.to_vector(), w2):
                    ops[w2] = op
                    words.append(w2)
                    nxt.append(w2)
        frontier = nxt
    return ech, words


def cartan_subring_report(n: int, d: int, ring="quantum") -> dict:
    alg = get_algebra(n, d, ring)
    ech, words = divided_power_closure(alg)
    rows = []
    for i in range(1, n + 1):
        for m in range(1, d + 1):
            vec = alg.cartan_binomial(i, 0, m).to_vector()
            inside = ech.contains(vec)
            integral = False
            if inside:
                integral = all(alg.ring.is_integral(c) for c in ech.solve(vec).values())
            rows.append({"element": str(CartanBinomial(i, 0, m)), "in_span": inside,
                         "integral_witness": integral})
    return {"kind": "cartan-subring", "n": n, "d": d, "ring": alg.ring.name,
            "span_rank": len(words), "dimension": schur_dimension(n, d), "members": rows,
            "all_in_span": all(r["in_span"] for r in rows),
            "all_integral": all(r["integral_witness"] for r in rows)}


def _borel_dimension(n, d):
    return sum(1 for _ in _borel_keys(n, d))


def _borel_keys(n, d):
    k = len(positive_roots(n))
    for exps in _monomials_upto(k, d):
        chi = content(tuple(RootPower(r, m) for r, m in zip(positive_roots(n), exps) if m), n)
        for lam in enumerate_compositions(n, d):
            if componentwise_leq(chi, lam):
                yield exps, lam


def conjecture_report(n: int, d: int, ring="classical", kind="eHf", i0: int = 1, orders=None) -> dict:
    """Rank of a conjectured spanning set; reported, never asserted."""
    if kind not in CONJECTURE_KINDS:
        raise ValueError(f"kind must be one of {CONJECTURE_KINDS}")
    if kind == "cartan-subring":
        return cartan_subring_report(n, d, ring)
    ring = ring_by_name("quantum" if kind in ("EKF", "FKE") else ring)
    alg = get_algebra(n, d, ring)
    cands = enumerate_conjecture_sets(n, d, i0, kind, alg.quantum, orders)
    rank = _span_rank([alg.evaluate(m) for m in cands], alg.ring)
    target = _borel_dimension(n, d) if kind == "borel" else schur_dimension(n, d)
    return {"kind": kind, "n": n, "d": d, "ring": alg.ring.name, "i0": i0, "count": len(cands),
            "rank": rank, "target_dimension": target, "independent": rank == len(cands),
            "spans": rank == target, "basis": rank == len(cands) == target}
