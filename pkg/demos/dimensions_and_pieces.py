"""
Counting bases of Schur algebras
================================

The integral basis splits into pieces indexed by compositions; each
piece is a set of root-vector words with an idempotent attached.
"""

from math import comb

from schurpres import get_algebra, get_basis
from schurpres.basisgen import enumerate_piece, verify_basis
from schurpres.rootdata import parse_order_spec

# rank of the evaluated basis against binomial(n^2 + d - 1, d)
for n, d in [(2, 2), (2, 3), (3, 2), (3, 3)]:
    rep = verify_basis(get_basis(n, d).elements, get_algebra(n, d, "quantum"))
    print(f"S({n},{d}): {rep['count']} elements, rank {rep['rank']}, expected {comb(n * n + d - 1, d)}")

# the pieces for dominant weights of S(3,3), ordered 12 < 13 < 23 < 21 < 31 < 32
order = parse_order_spec("custom:12,13,23,21,31,32", 3)
for lam in [(3, 0, 0), (2, 1, 0), (1, 1, 1)]:
    piece = enumerate_piece(3, lam, "plus", order)
    print(f"\nlambda = {lam}: {len(piece)} elements")
    for b in piece:
        print("  ", b)
