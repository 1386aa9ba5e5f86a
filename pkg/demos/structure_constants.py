"""
Structure constants and the classical limit
===========================================
"""

from schurpres.harness import compare_specialization, structure_constants

sc = structure_constants(2, 2, "quantum")
print(f"S_v(2,2): {len(sc)} basis elements, {len(sc.table)} nonzero products, integral: {sc.is_integral()}")
for (i, j), row in list(sorted(sc.table.items()))[:8]:
    terms = " + ".join(f"({c}) b{k}" for k, c in sorted(row.items()))
    print(f"  b{i} b{j} = {terms}")

print("associativity failures on 200 triples:", len(sc.associativity(200)))

# setting v = 1 must give exactly the classical table
for n, d in [(2, 2), (2, 3), (3, 2), (3, 3)]:
    rep = compare_specialization(n, d)
    print(f"S({n},{d}): {rep['entries']} constants, v = 1 matches classical: {rep['passed']}")
