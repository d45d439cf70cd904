"""Checking families of maps against the two covering structures."""

from matroid_k0 import (
    Covering,
    CoveringStructure,
    build_indecomposable_tree,
    contract,
    delete,
    find_tutte_witness,
    is_covering,
    leaf_to_root,
    standard_inclusion,
    uniform,
    verify_covering_axioms,
)
from matroid_k0.corpus import exhaustive_matroids

S_ISO, S_TC = CoveringStructure.S_ISO, CoveringStructure.S_TC
u12 = uniform(1, 2)

split = Covering(u12, (standard_inclusion(contract(u12, 1), u12), standard_inclusion(delete(u12, 1), u12)))
print("U12 split at 1, S_TC:", is_covering(S_TC, split).verdict.name)
print("U12 split at 1, S_ISO:", is_covering(S_ISO, split).verdict.name)

half = Covering(u12, split.legs[:1])
print("contraction leg alone:", is_covering(S_TC, half).reason)

# a leaf-to-root family remembers nothing about its tree; the search finds one again
u24 = uniform(2, 4)
legs = leaf_to_root(build_indecomposable_tree(u24)).legs
for depth in (2, 4):
    check = find_tutte_witness(Covering(u24, legs), depth=depth)
    print(f"U24 with {len(legs)} legs, depth {depth}:", check.verdict.name)

for tag in CoveringStructure:
    print(verify_covering_axioms(tag, exhaustive_matroids(3)).summary())
