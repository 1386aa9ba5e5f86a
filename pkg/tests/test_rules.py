import pytest

from schurpres.algebra import KostantMonomial, RootPower, get_algebra
from schurpres.errors import NoRule
from schurpres.rootdata import Root, roots
from schurpres.rules import (INTERVAL_RELATIONS, SIGN_PATTERNS, RuleTable, commute_pair, interval_relation,
                             main_key, omega_image, rule_table)
from schurpres.scalars import CLASSICAL, QUANTUM


def rule_instances(n, d):
    for a in roots(n):
        for b in roots(n):
            for M in range(1, d + 1):
                for N in range(1, d + 1):
                    yield RootPower(a, M), RootPower(b, N)


def unsound(n, d, ring):
    alg = get_algebra(n, d, ring)
    table = rule_table(alg.ring)
    bad = []
    for P, Q in rule_instances(n, d):
        rule = table.find(P.root, Q.root)
        if alg.evaluate(KostantMonomial((P, Q))) != alg.evaluate(rule(P, Q, alg.ring)):
            bad.append((rule.name, P, Q))
    return bad


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_every_rule_instance_at_3_3(ring):
    assert unsound(3, 3, ring) == []


@pytest.mark.parametrize("n,d", [(4, 2), (4, 3)])
def test_four_index_cases(n, d):
    # the overlapping-interval formulas only occur from n = 4 on
    assert unsound(n, d, "quantum") == []
    assert unsound(n, d, "classical") == []


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_every_variant_is_exercised_and_sound(ring):
    alg = get_algebra(4, 2, ring)
    table = rule_table(alg.ring)
    used = set()
    for P, Q in rule_instances(4, 2):
        for rule in table.all_matching(P.root, Q.root):
            used.add(rule.name)
            lhs = alg.evaluate(KostantMonomial((P, Q)))
            assert lhs == alg.evaluate(rule(P, Q, alg.ring)), (rule.name, P, Q)
    names = {r.name for r in table.rules}
    assert used == names


@pytest.mark.parametrize("ring", [CLASSICAL, QUANTUM])
def test_exhaustive(ring):
    table = RuleTable(ring)
    seen = set()
    for n in (4, 5):
        for a in roots(n):
            for b in roots(n):
                rule = table.find(a, b)
                assert rule is not None
                seen.add((interval_relation(a, b), (1 if a.positive else -1, 1 if b.positive else -1)))
    for rel in INTERVAL_RELATIONS:
        for pat in SIGN_PATTERNS:
            assert (rel, pat) in seen


def test_interval_relations():
    assert interval_relation(Root(1, 2), Root(3, 4)) == "disjoint"
    assert interval_relation(Root(1, 2), Root(2, 3)) == "touching"
    assert interval_relation(Root(1, 4), Root(2, 3)) == "nested"
    assert interval_relation(Root(1, 3), Root(1, 2)) == "nested-shared"
    assert interval_relation(Root(1, 3), Root(2, 4)) == "overlap"
    assert interval_relation(Root(1, 3), Root(3, 1)) == "equal"


def test_missing_rule_raises():
    table = RuleTable(QUANTUM)
    table.rules = [r for r in table.rules if not r.name.startswith("pm-d")]
    with pytest.raises(NoRule):
        table.find(Root(1, 2), Root(2, 1))


def test_classical_opposite_rule():
    # e^(r) f^(s) = sum_j f^(s-j) binom(H - r - s + 2j, j) e^(r-j)
    lc = commute_pair(RootPower(Root(1, 2), 2), RootPower(Root(2, 1), 1), CLASSICAL)
    keys = {str(k) for k, _ in lc.items()}
    assert keys == {"X(2,1) X(1,2)^(2)", "K(1,2;-1|1) X(1,2)"}


def test_classical_commuting_case():
    lc = commute_pair(RootPower(Root(1, 2)), RootPower(Root(3, 4)), CLASSICAL)
    assert list(lc.items()) == [(KostantMonomial((RootPower(Root(3, 4)), RootPower(Root(1, 2)))), 1)]


def test_quantum_touching_case():
    # X_ij X_jl = v X_il + v X_jl X_ij for M = N = 1
    lc = commute_pair(RootPower(Root(1, 2)), RootPower(Root(2, 3)), QUANTUM)
    v = QUANTUM.v_pow(1)
    assert lc.get(KostantMonomial((RootPower(Root(1, 3)),))) == v
    assert lc.get(KostantMonomial((RootPower(Root(2, 3)), RootPower(Root(1, 2))))) == v
    assert len(lc) == 2


def test_leading_term_is_the_swap():
    for ring in (CLASSICAL, QUANTUM):
        for a in roots(4):
            for b in roots(4):
                if a == b:
                    continue
                P, Q = RootPower(a, 2), RootPower(b, 1)
                lc = commute_pair(P, Q, ring)
                c = lc.get(main_key(P, Q))
                assert c, (a, b)


def test_omega_image_of_classical_rule():
    # Omega(e^(2) f) = e f^(2) with roles of the roots swapped
    P, Q = RootPower(Root(1, 2), 2), RootPower(Root(2, 1), 1)
    img = omega_image(commute_pair(P, Q, CLASSICAL))
    direct = commute_pair(RootPower(Root(1, 2), 1), RootPower(Root(2, 1), 2), CLASSICAL)
    alg = get_algebra(2, 3, "classical")
    assert alg.evaluate(img) == alg.evaluate(direct)
