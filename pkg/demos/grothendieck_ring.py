"""Formal sums of isomorphism classes and the map to Z[eps, sigma]."""

from matroid_k0 import (
    contract,
    delete,
    eps_sigma,
    from_graph,
    gamma,
    k0_iso,
    nondegenerate_elements,
    relabel,
    rho,
    tutte,
    uniform,
)

u12 = uniform(1, 2)
moved = relabel(u12, {1: 7, 2: 9})

# isomorphic matroids give the same class
print("[U12] - [U12 relabelled] =", k0_iso(u12) - k0_iso(moved))

a = 2 * k0_iso(eps_sigma(1, 0)) - k0_iso(u12)
b = k0_iso(eps_sigma(0, 1)) + k0_iso(u12)
print("a =", a)
print("b =", b)
print("a*b =", a * b)
print("gamma(a*b) == gamma(a)*gamma(b):", gamma(a * b) == gamma(a) * gamma(b))

square = from_graph(4, [(0, 3, 1), (2, 3, 2), (1, 2, 3), (0, 1, 4), (1, 3, 5)])
print("gamma[square] =", gamma(k0_iso(square)))
print("rho(gamma[square]) == tutte:", rho(gamma(k0_iso(square))) == tutte(square))

# the relation [M] - [M/e] - [M\e] is non-zero in Z[M] but dies under gamma
for e in nondegenerate_elements(square):
    rel = k0_iso(square) - k0_iso(contract(square, e)) - k0_iso(delete(square, e))
    print(f"e={e}: relation has {len(rel.coeffs)} terms, gamma -> {gamma(rel)}")
