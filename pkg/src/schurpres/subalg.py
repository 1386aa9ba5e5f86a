"""Borel subalgebras and the Hecke algebra inside the (q-)Schur algebra."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algebra import Idempotent, KostantMonomial, SchurAlgebra, get_algebra
from .basisgen import _monomials_upto, _root_word, default_orders, get_basis
from .linalg import Echelon
from .relations import _record
from .rootdata import componentwise_leq, content, enumerate_compositions, positive_roots, simple_root
from .tensorrep import ExactOperator


@dataclass
class SubalgebraReport:
    check: str
    params: dict
    passed: bool
    witness: str | None = None
    details: dict = field(default_factory=dict)

    def to_json(self):
        out = {"check": self.check, "params": self.params, "passed": self.passed}
        if self.witness:
            out["witness"] = self.witness
        out.update(self.details)
        return out


def _rank(ops, ring) -> int:
    ech = Echelon(ring)
    for k, op in enumerate(ops):
        ech.add(op.to_vector(), k)
    return ech.rank


# -- Borel ------------------------------------------------------------------

def borel_vanishing_check(n: int, d: int, ring="quantum", orders=None, extra: int = 2) -> SubalgebraReport:
    """E_A = 0 and F_C = 0 whenever d < |A| <= d + extra; some |A| = d survives."""
    alg = get_algebra(n, d, ring)
    orderE, orderF = orders or default_orders(n)
    k = len(positive_roots(n))
    checked = 0
    witness = None
    nonzero_at_d = False
    for exps in _monomials_upto(k, d + extra):
        size = sum(exps)
        if size < d:
            continue
        for sign, order in ((1, orderE), (-1, orderF)):
            op = alg.evaluate(_root_word(exps, order, sign, n))
            if size == d:
                nonzero_at_d = nonzero_at_d or not op.is_zero()
                continue
            checked += 1
            if not op.is_zero() and witness is None:
                witness = f"{KostantMonomial(_root_word(exps, order, sign, n))} is nonzero"
    if not nonzero_at_d:
        witness = witness or f"every product of size {d} vanished"
    return SubalgebraReport("borel-vanishing", {"n": n, "d": d, "ring": alg.ring.name},
                            witness is None, witness,
                            {"checked": checked, "nonzero_at_d": nonzero_at_d})


def borel_plus_basis(n: int, d: int, ring="quantum", order=None, sign: int = 1):
    """The products E_A (or F_A for sign -1) with |A| <= d, and a rank report."""
    alg = get_algebra(n, d, ring)
    if order is None:
        order = default_orders(n)[0 if sign > 0 else 1]
    k = len(positive_roots(n))
    elems = [KostantMonomial(_root_word(e, order, sign, n)) for e in _monomials_upto(k, d)]
    rank = _rank([alg.evaluate(m) for m in elems], alg.ring)
    expected = math.comb(k + d, d)
    rep = SubalgebraReport("borel-plus-basis",
                           {"n": n, "d": d, "ring": alg.ring.name, "sign": sign, "order": order.to_json()},
                           rank == len(elems) == expected, None,
                           {"count": len(elems), "rank": rank, "expected": expected})
    if not rep.passed:
        rep.witness = f"count {len(elems)}, rank {rank}, expected {expected}"
    return elems, rep


def borel_idempotent_basis(n: int, d: int, ring="quantum", sign: int = 1, orders=None):
    """{E_A 1_lam : chi(E_A) <= lam} (sign +1) or {1_lam F_C : chi(F_C) <= lam}.

    Built from scratch and then matched against the C = 0 (resp. A = 0)
    slice of the plus-side basis.
    """
    alg = get_algebra(n, d, ring)
    orderE, orderF = orders or default_orders(n)
    k = len(positive_roots(n))
    elems = []
    for exps in _monomials_upto(k, d):
        word = _root_word(exps, orderE if sign > 0 else orderF, sign, n)
        chi = content(word, n)
        for lam in enumerate_compositions(n, d):
            if componentwise_leq(chi, lam):
                idem = (Idempotent(lam),)
                elems.append((exps, lam, KostantMonomial(word + idem if sign > 0 else idem + word)))
    full = get_basis(n, d, "plus", (orderE, orderF))
    zero = (0,) * k
    if sign > 0:
        keys = {(b.A, b.lam) for b in full if b.C == zero}
        missing = [m for exps, lam, m in elems if (exps, lam) not in keys]
    else:
        keys = {(b.C, b.lam_at("middle")) for b in full if b.A == zero}
        missing = [m for exps, lam, m in elems if (exps, lam) not in keys]
    monos = [m for _, _, m in elems]
    rank = _rank([alg.evaluate(m) for m in monos], alg.ring)
    passed = rank == len(monos) and not missing and len(keys) == len(monos)
    rep = SubalgebraReport("borel-idempotent-basis", {"n": n, "d": d, "ring": alg.ring.name, "sign": sign},
                           passed, f"{missing[0]} not in the full basis" if missing else None,
                           {"count": len(monos), "rank": rank, "subset": not missing})
    return monos, rep


# -- Hecke --------------------------------------------------------------------

@dataclass
class HeckeGenerator:
    i: int
    operator: ExactOperator
    form: str  # "t" for 1_w E_i F_i 1_w, "T" for v^2 1_w - v t_i


def omega_weight(n: int, d: int) -> tuple:
    if n < d:
        raise ValueError("the Hecke algebra needs n >= d")
    return (1,) * d + (0,) * (n - d)


def _hecke_ops(alg: SchurAlgebra):
    om = alg.idempotent(omega_weight(alg.n, alg.d))
    v = alg.ring.v_pow
    t, T = {}, {}
    # s_i with i >= d does not preserve w = (1^d, 0^(n-d))
    for i in range(1, alg.d):
        e = alg.root_vector(simple_root(i))
        f = alg.root_vector(-simple_root(i))
        t[i] = om @ e @ f @ om
        T[i] = om.scale(v(2)) - t[i].scale(v(1))
    return om, t, T


def hecke_build(d: int, ring="quantum", n: int | None = None):
    """Generators t_i, T_i of 1_w S(n,d) 1_w and their relation checks.

    Returns (generators, results); results cover (H1)-(H3), (H1')-(H3') and
    idempotency of e_i = t_i/[2].
    """
    n = d if n is None else n
    alg = get_algebra(n, d, ring)
    ring = alg.ring
    om, t, T = _hecke_ops(alg)
    two = ring.qint(2)
    q = ring.v_pow(2)
    gens = [HeckeGenerator(i, t[i], "t") for i in t] + [HeckeGenerator(i, T[i], "T") for i in T]
    out = []
    idx = sorted(t)
    for i in idx:
        _record(out, "H1", t[i] @ t[i], t[i].scale(two), i=i)
        _record(out, "H1'", T[i] @ T[i], T[i].scale(q - 1) + om.scale(q), i=i)
        e = t[i].divide(two)
        _record(out, "wenzl-idempotent", e @ e, e, i=i)
    for i in idx:
        for j in idx:
            if abs(i - j) > 1:
                _record(out, "H2", t[i] @ t[j], t[j] @ t[i], i=i, j=j)
                _record(out, "H2'", T[i] @ T[j], T[j] @ T[i], i=i, j=j)
    for i in idx[:-1]:
        a, b = t[i], t[i + 1]
        _record(out, "H3", a @ b @ a - b @ a @ b, a - b, i=i)
        A, B = T[i], T[i + 1]
        _record(out, "H3'", A @ B @ A, B @ A @ B, i=i)
    return gens, out


def hecke_basis(d: int, ring="quantum", n: int | None = None, side: str = "plus"):
    """Elements of the full basis with both outer weights equal to w = (1^d).

    The report checks count = d!, full rank, 1_w b 1_w = b on the chosen
    elements and 1_w b 1_w = 0 on all the others.
    """
    n = d if n is None else n
    alg = get_algebra(n, d, ring)
    omega = omega_weight(n, d)
    om = alg.idempotent(omega)
    basis = get_basis(n, d, side)
    chosen, fixed_ok, killed_ok = [], True, True
    witness = None
    for b in basis:
        op = alg.evaluate(b.monomial())
        sandwiched = om @ op @ om
        if b.is_hecke(omega):
            chosen.append(b)
            if sandwiched != op:
                fixed_ok = False
                witness = witness or f"1_w ({b}) 1_w differs from {b}"
        elif not sandwiched.is_zero():
            killed_ok = False
            witness = witness or f"1_w ({b}) 1_w is nonzero"
    rank = _rank([alg.evaluate(b.monomial()) for b in chosen], alg.ring)
    expected = math.factorial(d)
    passed = len(chosen) == rank == expected and fixed_ok and killed_ok
    if not passed and witness is None:
        witness = f"count {len(chosen)}, rank {rank}, expected {expected}"
    rep = SubalgebraReport("hecke-basis", {"n": n, "d": d, "ring": alg.ring.name, "side": side},
                           passed, witness, {"count": len(chosen), "rank": rank, "expected": expected})
    return chosen, rep


def hecke_symmetry_check(d: int, ring="quantum", n: int | None = None) -> SubalgebraReport:
    """1_w E_i F_i 1_w = 1_w F_i E_i 1_w for every i."""
    n = d if n is None else n
    alg = get_algebra(n, d, ring)
    om = alg.idempotent(omega_weight(n, d))
    results = []
    for i in range(1, d):
        e = alg.root_vector(simple_root(i))
        f = alg.root_vector(-simple_root(i))
        _record(results, "hecke-symmetry", om @ e @ f @ om, om @ f @ e @ om, i=i)
    bad = [r for r in results if not r.passed]
    return SubalgebraReport("hecke-symmetry", {"n": n, "d": d, "ring": alg.ring.name}, not bad,
                            bad[0].witness if bad else None, {"checked": len(results)})


def relations_passed(results) -> bool:
    return all(r.passed for r in results)
