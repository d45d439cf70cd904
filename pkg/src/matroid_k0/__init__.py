"""Exact matroids, Tutte polynomials, deletion-contraction trees and K0 of matroids."""

from .basepoint import BASEPOINT, BASEPOINT_ID, BasePoint
from .errors import (
    ArityMismatch,
    AxiomViolation,
    DocumentError,
    DuplicateEdgeLabel,
    ElementNotInGroundSet,
    EmptyBasisFamily,
    InvalidElementId,
    InvalidMorphism,
    IsoLinkNotIsomorphism,
    IsthmusDeletion,
    LeafMatroidMismatch,
    LeafNotIndecomposable,
    LoopContraction,
    MatroidError,
    PathNotALeaf,
    RootIsBasePoint,
    SizeLimitExceeded,
    SplitChildMismatch,
    SplitElementDegenerate,
    TargetMismatch,
    TreeError,
    WitnessRootMismatch,
)
from .ktheory import (
    CoveringCheck,
    CoveringStructure,
    K0IsoElement,
    Verdict,
    basepoint_family,
    compose_coverings,
    find_tutte_witness,
    gamma,
    is_covering,
    k0_iso,
    k0_iso_product,
    rho,
    tg_invariant,
    verify_covering_axioms,
)
from .matroid import (
    EMPTY,
    Matroid,
    MatroidMorphism,
    bases,
    canonical_form,
    circuits,
    compose,
    contract,
    delete,
    direct_sum,
    dual,
    eps_sigma,
    from_bases,
    from_graph,
    from_independent_sets,
    identity,
    is_isomorphic,
    is_isthmus,
    is_loop,
    is_nondegenerate,
    isthmus,
    isthmuses,
    loop,
    loops,
    matroid_from_key,
    multiset_isomorphic,
    nondegenerate_elements,
    rank,
    relabel,
    standard_inclusion,
    uniform,
)
from .polynomial import EPS_SIGMA, XY, BivariatePolynomial
from .trees import (
    Covering,
    DCTree,
    IsoLink,
    Leaf,
    Split,
    attach,
    build_indecomposable_tree,
    covering_direct_sum,
    leaf_profile,
    leaf_to_root,
    priority_picker,
    random_picker,
    split_tree,
    to_dot,
    tree_direct_sum,
    validate_tree,
)
from .tutte import clear_tutte_cache, tutte, tutte_oracle

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "AxiomViolation",
    "BASEPOINT",
    "BASEPOINT_ID",
    "BasePoint",
    "BivariatePolynomial",
    "Covering",
    "CoveringCheck",
    "CoveringStructure",
    "DCTree",
    "DocumentError",
    "DuplicateEdgeLabel",
    "EMPTY",
    "EPS_SIGMA",
    "ElementNotInGroundSet",
    "EmptyBasisFamily",
    "InvalidElementId",
    "InvalidMorphism",
    "IsoLink",
    "IsoLinkNotIsomorphism",
    "IsthmusDeletion",
    "K0IsoElement",
    "Leaf",
    "LeafMatroidMismatch",
    "LeafNotIndecomposable",
    "LoopContraction",
    "Matroid",
    "MatroidError",
    "MatroidMorphism",
    "PathNotALeaf",
    "RootIsBasePoint",
    "SizeLimitExceeded",
    "Split",
    "SplitChildMismatch",
    "SplitElementDegenerate",
    "TargetMismatch",
    "TreeError",
    "Verdict",
    "WitnessRootMismatch",
    "XY",
    "attach",
    "basepoint_family",
    "bases",
    "build_indecomposable_tree",
    "canonical_form",
    "circuits",
    "clear_tutte_cache",
    "compose",
    "compose_coverings",
    "contract",
    "covering_direct_sum",
    "delete",
    "direct_sum",
    "dual",
    "eps_sigma",
    "find_tutte_witness",
    "from_bases",
    "from_graph",
    "from_independent_sets",
    "gamma",
    "identity",
    "is_covering",
    "is_isomorphic",
    "is_isthmus",
    "is_loop",
    "is_nondegenerate",
    "isthmus",
    "isthmuses",
    "k0_iso",
    "k0_iso_product",
    "leaf_profile",
    "leaf_to_root",
    "loop",
    "loops",
    "matroid_from_key",
    "multiset_isomorphic",
    "nondegenerate_elements",
    "priority_picker",
    "random_picker",
    "rank",
    "relabel",
    "rho",
    "split_tree",
    "standard_inclusion",
    "tg_invariant",
    "to_dot",
    "tree_direct_sum",
    "tutte",
    "tutte_oracle",
    "uniform",
    "validate_tree",
    "verify_covering_axioms",
]
