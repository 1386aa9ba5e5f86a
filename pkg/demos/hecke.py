"""
The Hecke algebra inside S(d,d)
===============================

With w = (1,...,1) the corner 1_w S(d,d) 1_w is the Hecke algebra of the
symmetric group; t_i = 1_w E_i F_i 1_w satisfies the quadratic relation
t_i^2 = [2] t_i.
"""

from schurpres.subalg import hecke_basis, hecke_build, hecke_symmetry_check

for d in (2, 3, 4):
    gens, results = hecke_build(d, "quantum")
    failed = [r for r in results if not r.passed]
    print(f"d = {d}: {len(results)} relation checks, {len(failed)} failures")

chosen, rep = hecke_basis(3, "quantum")
print(f"\nbasis of the corner in S(3,3) ({rep.details['count']} elements, rank {rep.details['rank']}):")
for b in chosen:
    print("  ", b)
print("1_w E_i F_i 1_w = 1_w F_i E_i 1_w:", hecke_symmetry_check(3).passed)
