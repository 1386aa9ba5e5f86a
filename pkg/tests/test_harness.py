import json

import pytest

from schurpres.harness import (SCHEMA_VERSION, compare_specialization, conjecture_report, dump_json, header,
                               mutation_control, structure_constants, verify_idempotent_presentation,
                               verify_presentation)

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]


@pytest.mark.parametrize("n,d", GRID)
@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_presentation_suite(n, d, ring):
    rep = verify_presentation(n, d, ring)
    assert rep.passed, [r.witness for r in rep.failures()]
    prefix = "Q" if ring == "quantum" else "R"
    # the relations coupling two different simple roots are vacuous for n = 2
    ids = (1, 2, 3, 6, 7) if n == 2 else range(1, 8)
    assert {f"{prefix}{k}" for k in ids} <= set(rep.relation_ids())
    assert {"minpoly", "dimension"} <= set(rep.relation_ids())


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_mutation_control(ring):
    out = mutation_control(2, 2, ring)
    assert out["detected"] and out["witness"]


@pytest.mark.parametrize("n,d", GRID)
@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_idempotent_suite(n, d, ring):
    rep = verify_idempotent_presentation(n, d, ring)
    assert rep.passed, [r.witness for r in rep.failures()]
    assert "cartan-reconstruction" in rep.relation_ids()


def test_report_json_has_header():
    doc = verify_presentation(2, 2, "quantum").to_json()
    assert doc["schema-version"] == SCHEMA_VERSION
    assert (doc["n"], doc["d"], doc["ring"]) == (2, 2, "quantum")


def test_dump_json(tmp_path):
    path = tmp_path / "out.json"
    dump_json(path, {"x": 1}, 3, 2, "both")
    doc = json.loads(path.read_text())
    assert doc == {"n": 3, "d": 2, "ring": "both", "schema-version": SCHEMA_VERSION, "x": 1}
    assert header(2, 2, "classical")["ring"] == "classical"


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_structure_constants(ring):
    sc = structure_constants(2, 3, ring)
    assert sc.is_integral()
    assert sc.associativity(trials=60) == []
    ident = sc.identity_coordinates()
    for k in range(len(sc)):
        assert sc.product(ident, {k: sc.ring.one}) == {k: sc.ring.one}


@pytest.mark.parametrize("side", ["plus", "minus"])
def test_specialization(side):
    assert compare_specialization(3, 2, side)["passed"]


def test_structure_constants_json():
    doc = structure_constants(2, 2, "quantum").to_json()
    assert len(doc["basis"]) == 10 and doc["constants"]


@pytest.mark.parametrize("kind", ["pbw", "eHf", "fHe", "EKF", "FKE", "borel"])
def test_conjecture_reports_n2(kind):
    rep = conjecture_report(2, 2, "classical", kind)
    assert rep["count"] == rep["rank"]
    assert rep["basis"]


def test_cartan_subring_report():
    rep = conjecture_report(2, 2, "quantum", "cartan-subring")
    assert rep["all_in_span"]
    assert rep["span_rank"] == rep["dimension"] == 10


def test_unknown_kind():
    with pytest.raises(ValueError):
        conjecture_report(2, 2, "classical", "nope")
