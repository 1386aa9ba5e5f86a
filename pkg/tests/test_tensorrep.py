import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurpres.errors import BoundExceeded
from schurpres.relations import classical_relations, idempotent_relations, quantum_relations
from schurpres.scalars import CLASSICAL, QUANTUM, LaurentPolynomial, RationalFunction
from schurpres.tensorrep import (ExactOperator, build_classical_generators, build_quantum_generators,
                                 minimal_polynomial, poly_from_roots, span_rank, tensor_space)

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]
v = RationalFunction.v()


def test_tensor_space_layout():
    ts = tensor_space(2, 3)
    assert len(ts) == 8
    assert ts.index((1, 1, 1)) == 0
    assert ts.index((2, 2, 2)) == 7


@pytest.mark.parametrize("n,d", GRID + [(4, 3)])
def test_classical_relations(n, d):
    bad = [r for r in classical_relations(build_classical_generators(n, d)) if not r.passed]
    assert not bad


@pytest.mark.parametrize("n,d", GRID + [(4, 3)])
def test_quantum_relations(n, d):
    gs = build_quantum_generators(n, d)
    assert gs.metadata["fallback_used"] is False
    bad = [r for r in quantum_relations(gs) if not r.passed]
    assert not bad


def test_mirror_convention_also_validates():
    gs = build_quantum_generators(3, 2, "left-twist")
    assert all(r.passed for r in quantum_relations(gs))


def test_minimal_polynomials():
    h = build_classical_generators(2, 2).h[1]
    assert minimal_polynomial(h, 3) == poly_from_roots([0, 1, 2], CLASSICAL)
    k = build_quantum_generators(2, 2).k[1]
    roots = [QUANTUM.v_pow(t) for t in range(3)]
    assert minimal_polynomial(k, 3) == poly_from_roots(roots, QUANTUM)
    with pytest.raises(BoundExceeded):
        minimal_polynomial(h, 2)


def test_idempotent_relations_classical_example():
    from schurpres.algebra import get_algebra
    alg = get_algebra(2, 2, "classical")
    res = idempotent_relations(alg.gens, alg.idempotent)
    assert all(r.passed for r in res)
    # e_1 f_1 - f_1 e_1 = sum (lam_1 - lam_2) 1_lam
    e, f = alg.gens.e[1], alg.gens.f[1]
    rhs = alg.idempotent((2, 0)).scale(2) - alg.idempotent((0, 2)).scale(2)
    assert e @ f - f @ e == rhs


def test_relation_failure_has_witness():
    gs = build_classical_generators(2, 2)
    bad = gs.replace(h={1: gs.h[1] + gs.identity()})
    fails = [r for r in classical_relations(bad) if not r.passed]
    assert any(r.relation == "R2" for r in fails)
    assert all(r.witness for r in fails)


small_ops = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)), max_size=6).map(
    lambda es: ExactOperator.from_entries(4, CLASSICAL, es))


@given(small_ops, small_ops, small_ops)
@settings(max_examples=50)
def test_operator_algebra(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert (a - a).is_zero()
    assert a @ ExactOperator.identity(4, CLASSICAL) == a


def test_span_rank():
    gs = build_classical_generators(2, 2)
    assert span_rank([gs.e[1], gs.f[1], gs.e[1] + gs.f[1]]) == 2


def test_quantum_divide_is_exact():
    gs = build_quantum_generators(2, 2)
    e2 = gs.e[1] @ gs.e[1]
    div = e2.divide(QUANTUM.qint(2))
    assert all(QUANTUM.is_integral(x) for _, _, x in div.entries())
    assert isinstance(QUANTUM.qint(2).num, LaurentPolynomial)
