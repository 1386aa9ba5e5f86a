"""Acceptance checks, one test per criterion.

Each test prints a single ``AC<k> PASS|FAIL ...`` line (outside pytest's
capture) and then asserts. All comparisons are structural equality of
exact scalars.
"""

import random
import time
from math import comb, factorial

import pytest

from schurpres.algebra import KostantMonomial, RootPower, get_algebra
from schurpres.basisgen import enumerate_piece, express_in_basis, get_basis, verify_basis
from schurpres.harness import (compare_specialization, conjecture_report, verify_idempotent_presentation,
                               verify_presentation)
from schurpres.rootdata import positive_roots, roots
from schurpres.rules import INTERVAL_RELATIONS, SIGN_PATTERNS, interval_relation, rule_table
from schurpres.straighten import Straightener, random_monomial
from schurpres.subalg import (borel_idempotent_basis, borel_plus_basis, borel_vanishing_check, hecke_basis,
                              hecke_build, hecke_symmetry_check, relations_passed)

from reference_data import EXPECTED_HECKE, EXPECTED_PIECES, listing_order, word_text

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]
RINGS = ("classical", "quantum")
SAMPLES = 200
BUDGET = 120.0


@pytest.fixture
def verdict(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nAC{k} {'PASS' if ok else 'FAIL'} {detail}")
        return ok
    return emit


def test_ac1_dimension(verdict):
    bad, dims = [], {}
    for n, d in GRID:
        want = comb(n * n + d - 1, d)
        for ring in RINGS:
            alg = get_algebra(n, d, ring)
            for side in ("plus", "minus"):
                rep = verify_basis(get_basis(n, d, side).elements, alg)
                dims[(n, d)] = rep["rank"]
                if not rep["count"] == rep["rank"] == want:
                    bad.append((n, d, ring, side, rep["count"], rep["rank"]))
    ok = not bad and [dims[nd] for nd in GRID] == [10, 20, 45, 165]
    assert verdict(1, ok, f"ranks {[dims[nd] for nd in GRID]} {bad or ''}")


def test_ac2_example_lists(verdict):
    bad = []
    for lam, text in EXPECTED_PIECES.items():
        n = len(lam)
        got = [word_text(b) for b in enumerate_piece(n, lam, "plus", listing_order(n))]
        want = text.split(", ")
        if len(got) != len(want) or sorted(got) != sorted(want):
            bad.append(lam)
    for d, want in EXPECTED_HECKE.items():
        piece = enumerate_piece(d, (1,) * d, "plus", listing_order(d))
        if {word_text(b) for b in piece if b.is_hecke((1,) * d)} != want:
            bad.append(("hecke", d))
    sizes = {lam: len(t.split(", ")) for lam, t in EXPECTED_PIECES.items()}
    assert verdict(2, not bad, f"piece sizes {list(sizes.values())} {bad or ''}")


def test_ac3_presentations(verdict):
    bad = []
    for n, d in GRID:
        for ring in RINGS:
            for rep in (verify_presentation(n, d, ring), verify_idempotent_presentation(n, d, ring)):
                bad += [(n, d, ring, r.relation, r.witness) for r in rep.failures()]
            degs = {r.params["degree"] for r in verify_presentation(n, d, ring, dimension=False).results
                    if r.relation == "minpoly"}
            if degs != {d + 1}:
                bad.append((n, d, ring, "minpoly", degs))
    assert verdict(3, not bad, f"{len(GRID) * len(RINGS)} instances {bad[:3] or ''}")


@pytest.mark.parametrize("n,d", GRID)
@pytest.mark.parametrize("ring", RINGS)
def test_ac4_straightening_oracle(verdict, n, d, ring):
    alg = get_algebra(n, d, ring)
    rng = random.Random(1000 * n + d)
    t0 = time.perf_counter()
    s = Straightener(n, d, ring)
    mismatches, nonintegral = 0, 0
    for _ in range(SAMPLES):
        m = random_monomial(n, d, alg.quantum, rng, min_factors=3)
        cv = s.straighten(m)
        nonintegral += not cv.integral
        mismatches += cv != express_in_basis(alg.evaluate(m), s.basis, alg)
    secs = time.perf_counter() - t0
    ok = mismatches == 0 and nonintegral == 0 and secs < BUDGET
    assert verdict(4, ok, f"({n},{d}) {ring}: {SAMPLES} monomials, {mismatches} mismatches, "
                          f"{nonintegral} non-integral, {secs:.1f}s")


def test_ac5_rule_table(verdict):
    bad, variants = [], 0
    for ring in RINGS:
        alg = get_algebra(3, 3, ring)
        table = rule_table(alg.ring)
        for a in roots(3):
            for b in roots(3):
                for M in range(1, 4):
                    for N in range(1, 4):
                        P, Q = RootPower(a, M), RootPower(b, N)
                        lhs = alg.evaluate(KostantMonomial((P, Q)))
                        for rule in table.all_matching(a, b):
                            variants += 1
                            if lhs != alg.evaluate(rule(P, Q, alg.ring)):
                                bad.append((ring, rule.name, P, Q))
        seen = set()
        for n in (4, 5):
            for a in roots(n):
                for b in roots(n):
                    table.find(a, b)
                    seen.add((interval_relation(a, b), (1 if a.positive else -1, 1 if b.positive else -1)))
        missing = {(r, p) for r in INTERVAL_RELATIONS for p in SIGN_PATTERNS} - seen
        if missing:
            bad.append((ring, "uncovered", sorted(missing)))
    assert verdict(5, not bad, f"{variants} rule instances checked at (3,3) {bad[:3] or ''}")


def test_ac6_hecke(verdict):
    bad = []
    for d in (2, 3):
        for ring in RINGS:
            _, results = hecke_build(d, ring)
            if not relations_passed(results):
                bad.append((d, ring, "relations"))
            chosen, rep = hecke_basis(d, ring)
            if not (rep.passed and len(chosen) == factorial(d)):
                bad.append((d, ring, "basis", rep.witness))
            if not hecke_symmetry_check(d, ring).passed:
                bad.append((d, ring, "symmetry"))
    assert verdict(6, not bad, f"d = 2, 3 {bad or ''}")


def test_ac7_borel(verdict):
    bad = []
    for n, d in GRID:
        if not borel_vanishing_check(n, d, "quantum", extra=2).passed:
            bad.append((n, d, "vanishing"))
        for sign in (1, -1):
            elems, rep = borel_plus_basis(n, d, "quantum", sign=sign)
            if not (rep.passed and len(elems) == comb(len(positive_roots(n)) + d, d)):
                bad.append((n, d, sign, "plus-part"))
            _, rep = borel_idempotent_basis(n, d, "quantum", sign=sign)
            if not rep.passed:
                bad.append((n, d, sign, "idempotent", rep.witness))
    assert verdict(7, not bad, f"grid {bad or ''}")


def test_ac8_specialization(verdict):
    bad, entries = [], 0
    for n, d in GRID:
        for side in ("plus", "minus"):
            rep = compare_specialization(n, d, side)
            entries += rep["entries"]
            if not rep["passed"]:
                bad.append((n, d, side, rep["witness"]))
    assert verdict(8, not bad, f"{entries} structure constants compared {bad or ''}")


def test_ac9_conjectures(verdict):
    kinds = ("pbw", "eHf", "fHe", "EKF", "FKE", "borel", "cartan-subring")
    reports, bad = [], []
    for n, d in GRID:
        for kind in kinds:
            rep = conjecture_report(n, d, "classical", kind)
            reports.append(rep)
            if n == 2 and kind != "cartan-subring" and rep["rank"] != rep["count"]:
                bad.append((n, d, kind, rep["count"], rep["rank"]))
    assert verdict(9, not bad and len(reports) == len(GRID) * len(kinds),
                   f"{len(reports)} reports, n = 2 rank = count {bad or ''}")
