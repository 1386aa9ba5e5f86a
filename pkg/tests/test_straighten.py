import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from schurpres.algebra import Idempotent, get_algebra, parse_monomial
from schurpres.basisgen import express_in_basis, get_basis
from schurpres.errors import NonTermination
from schurpres.straighten import Straightener, get_straightener, move_idempotents_right, random_monomial

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]


def test_move_idempotents_right_examples():
    lc = move_idempotents_right(parse_monomial("E(1) 1[0,2]"), 2, 2, "classical")
    assert list(lc.items()) == [(parse_monomial("E(1) 1[0,2]"), 1)]
    assert not move_idempotents_right(parse_monomial("E(1) 1[2,0]"), 2, 2, "classical")
    lc = move_idempotents_right(parse_monomial("H(1) 1[1,1]"), 2, 2, "classical")
    assert list(lc.items()) == [(parse_monomial("1[1,1]"), 1)]
    # idempotent moves to the right through E_1: 1[1,1] E_1 = E_1 1[0,2]
    lc = move_idempotents_right(parse_monomial("1[1,1] E(1)"), 2, 2, "quantum")
    assert list(lc.items()) == [(parse_monomial("E(1) 1[0,2]"), 1)]


def test_no_idempotent_sums_over_weights():
    lc = move_idempotents_right(parse_monomial("E(1)"), 2, 2, "classical")
    assert {k.factors[-1] for k, _ in lc.items()} == {Idempotent((1, 1)), Idempotent((0, 2))}


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_spec_examples(ring):
    s = get_straightener(2, 2, ring)
    cv = s.straighten(parse_monomial("F(1) E(1) 1[1,1]"))
    assert len(cv) == 1
    (k, c), = cv.items()
    assert str(s.basis[k]) == "X(1,2) X(2,1) 1[1,1]" and c == 1
    assert len(s.straighten(parse_monomial("E(1)^(3)"))) == 0
    for k, b in enumerate(s.basis):
        assert s.straighten(b.monomial()).coords == {k: s.ring.one}


@pytest.mark.parametrize("n,d", GRID)
@pytest.mark.parametrize("ring", ["classical", "quantum"])
@pytest.mark.parametrize("side", ["plus", "minus"])
def test_oracle_equivalence(n, d, ring, side):
    alg = get_algebra(n, d, ring)
    s = Straightener(n, d, ring, side=side, check_measure=True)
    rng = random.Random(n * 100 + d)
    for _ in range(60):
        m = random_monomial(n, d, alg.quantum, rng)
        cv = s.straighten(m)
        assert cv.integral
        assert cv == express_in_basis(alg.evaluate(m), s.basis, alg)
    # the termination measure drops at every rewrite on this grid
    assert s.measure_violations == []


@given(st.sampled_from(GRID), st.sampled_from(["classical", "quantum"]), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_straighten_then_evaluate(nd, ring, seed):
    n, d = nd
    alg = get_algebra(n, d, ring)
    m = random_monomial(n, d, alg.quantum, random.Random(seed))
    s = get_straightener(n, d, ring)
    cv = s.straighten(m)
    total = alg.zero()
    for k, c in cv.items():
        total = total + alg.evaluate(s.basis[k].monomial()).scale(c)
    assert total == alg.evaluate(m)


def test_custom_order_target():
    from schurpres.rootdata import parse_order_spec
    orders = parse_order_spec("custom:12,13,23,21,31,32", 3)
    alg = get_algebra(3, 3, "quantum")
    s = Straightener(3, 3, "quantum", orders=orders)
    rng = random.Random(5)
    for _ in range(30):
        m = random_monomial(3, 3, True, rng)
        assert s.straighten(m) == express_in_basis(alg.evaluate(m), s.basis, alg)


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_rank_four_terminates(ring):
    alg = get_algebra(4, 2, ring)
    s = Straightener(4, 2, ring)
    rng = random.Random(11)
    for _ in range(40):
        m = random_monomial(4, 2, alg.quantum, rng)
        assert s.straighten(m) == express_in_basis(alg.evaluate(m), s.basis, alg)


def test_step_budget():
    s = Straightener(3, 3, "classical", max_steps=2)
    with pytest.raises(NonTermination):
        s.straighten(parse_monomial("F(1) F(2) E(1) E(2) 1[1,1,1]"))


def test_linear_combination_input():
    from schurpres.algebra import LinearCombination
    s = get_straightener(2, 2, "classical")
    lc = LinearCombination(s.ring)
    lc.add(parse_monomial("E(1) F(1)"), 1)
    lc.add(parse_monomial("F(1) E(1)"), -1)
    got = s.straighten(lc)
    alg = get_algebra(2, 2, "classical")
    want = express_in_basis(alg.gens.h[1] - alg.gens.h[2], s.basis, alg)
    assert got == want
    assert get_basis(2, 2) is s.basis
