"""Command line entry point: ``schurpres <command> ...``.

The exit status is 0 exactly when every asserted check passed.  Conjecture
reports are informational and never change the status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import get_algebra, parse_monomial
from .basisgen import PLACEMENTS, SIDES, express_in_basis, get_basis, verify_basis
from .harness import (conjecture_report, compare_specialization, dump_json, header, mutation_control,
                      structure_constants, verify_idempotent_presentation, verify_presentation)
from .rootdata import parse_order_spec
from .straighten import Straightener
from .subalg import hecke_basis, hecke_build, hecke_symmetry_check
from .tensorrep import build_generators

RINGS = ("classical", "quantum")


def _rings(arg):
    return RINGS if arg == "both" else (arg,)


def _ring_path(path, ring, multi):
    """One output file per ring when several rings are processed."""
    if not multi:
        return path
    head, tail = os.path.split(path)
    return os.path.join(head, f"{ring}-{tail}")


def _emit(doc, path=None, n=None, d=None, ring=None):
    if path:
        dump_json(path, doc, n, d, ring)
    print(json.dumps(doc, indent=1, default=str))


def _line(ok: bool, text: str):
    print(f"{'PASS' if ok else 'FAIL'}  {text}")


def cmd_build(a) -> bool:
    ok = True
    for ring in _rings(a.ring):
        gs = build_generators(a.n, a.d, ring)
        meta = dict(gs.metadata)
        good = meta.get("validated", True) if gs.quantum else True
        ok &= bool(good)
        _line(good, f"S({a.n},{a.d}) {ring}: tensor space of dimension {gs.dim}, "
                    f"{len(gs.e)} E/F pairs; {meta or 'classical action'}")
        if a.json:
            doc = {"generators": {
                "e": {str(i): op.to_json() for i, op in gs.e.items()},
                "f": {str(i): op.to_json() for i, op in gs.f.items()},
                "cartan": {str(i): gs.cartan(i).to_json() for i in range(1, a.n + 1)}},
                "metadata": {k: v for k, v in meta.items()}}
            dump_json(_ring_path(a.json, ring, a.ring == "both"), doc, a.n, a.d, ring)
    return ok


def cmd_basis(a) -> bool:
    orders = parse_order_spec(a.order, a.n)
    basis = get_basis(a.n, a.d, a.side, orders)
    ok = True
    for ring in _rings(a.ring):
        rep = verify_basis(basis.elements, get_algebra(a.n, a.d, ring))
        ok &= rep["passed"]
        _line(rep["passed"], f"{a.side} basis of S({a.n},{a.d}) {ring}: count {rep['count']}, "
                             f"rank {rep['rank']}, expected {rep['expected']}")
    if a.list:
        for k, b in enumerate(basis):
            print(f"{k:4d}  {b.monomial(a.placement)}")
    if a.json:
        doc = {"side": a.side, "placement": a.placement, "order": a.order,
               "elements": [b.to_json(a.placement) for b in basis]}
        dump_json(a.json, doc, a.n, a.d, a.ring)
    return ok


def cmd_verify(a) -> bool:
    ok = True
    reports = []
    for ring in _rings(a.ring):
        if a.suite in ("presentation", "all"):
            rep = verify_presentation(a.n, a.d, ring)
            reports.append(rep)
            mut = mutation_control(a.n, a.d, ring)
            ok &= mut["detected"]
            _line(mut["detected"], f"{ring} mutation control: perturbed generators fail {mut['relation']}")
        if a.suite in ("idempotent", "all"):
            reports.append(verify_idempotent_presentation(a.n, a.d, ring))
    for rep in reports:
        ok &= rep.passed
        _line(rep.passed, f"{rep.suite} {rep.ring} S({a.n},{a.d}): {len(rep.results)} checks "
                          f"({', '.join(rep.relation_ids())}) in {rep.seconds:.2f}s")
        for r in rep.failures()[:5]:
            print(f"      {r.relation} {r.params}: {r.witness}")
    if a.json:
        doc = {"reports": [r.to_json() for r in reports]}
        dump_json(a.json, doc, a.n, a.d, a.ring)
    return ok


def cmd_straighten(a) -> bool:
    if a.ring == "both":
        raise ValueError("straighten works in one ring at a time")
    orders = parse_order_spec(a.order, a.n) if a.order else None
    s = Straightener(a.n, a.d, a.ring, side=a.side, orders=orders)
    m = parse_monomial(a.expr)
    cv = s.straighten(m)
    doc = dict(header(a.n, a.d, a.ring))
    doc.update({"expr": a.expr, "coordinates": cv.to_json(),
                "terms": {str(k): str(s.basis[k]) for k, _ in cv.items()}, "integral": cv.integral})
    if a.check:
        alg = get_algebra(a.n, a.d, a.ring)
        doc["oracle_agrees"] = cv == express_in_basis(alg.evaluate(m), s.basis, alg)
    _emit(doc, a.json, a.n, a.d, a.ring)
    return cv.integral and doc.get("oracle_agrees", True)


def cmd_constants(a) -> bool:
    ok = True
    for ring in _rings(a.ring):
        sc = structure_constants(a.n, a.d, ring, a.side)
        bad = sc.associativity(a.trials)
        good = sc.is_integral() and not bad
        ok &= good
        _line(good, f"{ring} structure constants of S({a.n},{a.d}): {len(sc.table)} nonzero products, "
                    f"integral, associativity on {a.trials} triples"
              + (f", failures {bad[:3]}" if bad else ""))
        if a.json:
            dump_json(_ring_path(a.json, ring, a.ring == "both"), sc.to_json(), a.n, a.d, ring)
    if a.ring == "both":
        spec = compare_specialization(a.n, a.d, a.side)
        ok &= spec["passed"]
        _line(spec["passed"], f"quantum constants at v=1 equal classical ones ({spec['entries']} entries)")
    return ok


def cmd_hecke(a) -> bool:
    ok = True
    for ring in _rings(a.ring):
        _, results = hecke_build(a.d, ring)
        for rel in sorted({r.relation for r in results}):
            rs = [r for r in results if r.relation == rel]
            good = all(r.passed for r in rs)
            ok &= good
            _line(good, f"{ring} {rel} ({len(rs)} instances)")
        elems, rep = hecke_basis(a.d, ring)
        ok &= rep.passed
        _line(rep.passed, f"{ring} Hecke basis: count {rep.details['count']}, rank {rep.details['rank']}, "
                          f"expected {rep.details['expected']}")
        if a.list:
            for b in elems:
                print(f"      {b}")
        sym = hecke_symmetry_check(a.d, ring)
        ok &= sym.passed
        _line(sym.passed, f"{ring} 1_w E_i F_i 1_w = 1_w F_i E_i 1_w")
    return ok


def cmd_conjectures(a) -> bool:
    kinds = [a.kind] if a.kind != "all" else ["pbw", "eHf", "fHe", "EKF", "FKE", "borel", "cartan-subring"]
    docs = []
    for kind in kinds:
        rings = ("quantum",) if kind in ("EKF", "FKE") else _rings(a.ring)
        for ring in rings:
            rep = conjecture_report(a.n, a.d, ring, kind, a.i0)
            docs.append(rep)
            if kind == "cartan-subring":
                print(f"INFO  {kind} {ring}: in span {rep['all_in_span']}, "
                      f"integral witness {rep['all_integral']}")
            else:
                print(f"INFO  {kind} {ring}: count {rep['count']}, rank {rep['rank']}, "
                      f"target {rep['target_dimension']}, basis {rep['basis']}")
    if a.json:
        dump_json(a.json, {"reports": docs}, a.n, a.d, a.ring)
    return True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schurpres", description="Exact computations in (q-)Schur algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def nd(sp, ring_default="both"):
        sp.add_argument("n", type=int)
        sp.add_argument("d", type=int)
        sp.add_argument("--ring", choices=RINGS + ("both",), default=ring_default)
        sp.add_argument("--json", metavar="PATH")

    sp = sub.add_parser("build", help="build the generators on tensor space")
    nd(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("basis", help="enumerate and rank-check a basis")
    nd(sp)
    sp.add_argument("--side", choices=SIDES, default="plus")
    sp.add_argument("--placement", choices=PLACEMENTS, default="right")
    sp.add_argument("--order", default="box", help="box, revbox, lex or custom:12,13,...")
    sp.add_argument("--list", action="store_true", help="print the elements")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("verify", help="check the presentations")
    nd(sp)
    sp.add_argument("--suite", choices=("presentation", "idempotent", "all"), default="all")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("straighten", help="basis coordinates of a monomial")
    nd(sp, "classical")
    sp.add_argument("--expr", required=True, help='e.g. "F(1) E(1) 1[1,1]"')
    sp.add_argument("--side", choices=SIDES, default="plus")
    sp.add_argument("--order", default=None)
    sp.add_argument("--check", action="store_true", help="compare with direct evaluation")
    sp.set_defaults(func=cmd_straighten)

    sp = sub.add_parser("constants", help="structure constants of the basis")
    nd(sp)
    sp.add_argument("--side", choices=SIDES, default="plus")
    sp.add_argument("--trials", type=int, default=100)
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("hecke", help="Hecke algebra inside S(d,d)")
    sp.add_argument("d", type=int)
    sp.add_argument("--ring", choices=RINGS + ("both",), default="quantum")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_hecke)

    sp = sub.add_parser("conjectures", help="rank reports for the conjectured bases")
    nd(sp)
    sp.add_argument("--kind", default="all",
                    choices=("all", "pbw", "eHf", "fHe", "EKF", "FKE", "borel", "cartan-subring"))
    sp.add_argument("--i0", type=int, default=1)
    sp.set_defaults(func=cmd_conjectures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ok = args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
