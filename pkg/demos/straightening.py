"""
Straightening words into the basis
==================================

Commutation rules rewrite any word in divided powers into an integral
combination of basis elements. Direct evaluation on tensor space is the
oracle.
"""

import random

from schurpres import get_algebra, parse_monomial
from schurpres.basisgen import express_in_basis
from schurpres.straighten import Straightener, random_monomial

s = Straightener(2, 2, "classical")
for text in ["F(1) E(1) 1[1,1]", "E(1)^(3)", "E(1) 1[2,0]", "H(1) 1[1,1]"]:
    print(f"{text:20s} -> {s.straighten(parse_monomial(text))}")

# quantum S(3,3): a few random words, straightened and checked
alg = get_algebra(3, 3, "quantum")
s = Straightener(3, 3, "quantum")
rng = random.Random(7)
for _ in range(5):
    m = random_monomial(3, 3, True, rng, min_factors=3)
    cv = s.straighten(m)
    same = cv == express_in_basis(alg.evaluate(m), s.basis, alg)
    print(f"\n{m}\n  = {cv}\n  agrees with evaluation: {same}")

print("\nrules used:", dict(sorted(s.rule_uses.items())))
