import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SQUARE_BASES, SQUARE_EDGES
from matroid_k0.corpus import exhaustive_matroids, graphical_matroids
from matroid_k0.errors import (
    AxiomViolation,
    DuplicateEdgeLabel,
    ElementNotInGroundSet,
    EmptyBasisFamily,
    InvalidElementId,
    InvalidMorphism,
    IsthmusDeletion,
    LoopContraction,
)
from matroid_k0.matroid import (
    EMPTY,
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
    loop,
    matroid_from_key,
    multiset_isomorphic,
    nondegenerate_elements,
    rank,
    relabel,
    standard_inclusion,
    uniform,
)

SMALL = exhaustive_matroids(5)
UP_TO_4 = exhaustive_matroids(4)
U12 = from_bases([1, 2], [[1], [2]])


@st.composite
def relabelled(draw, pool=SMALL):
    m = draw(st.sampled_from(pool))
    ids = draw(st.lists(st.integers(1, 40), min_size=len(m.ground), max_size=len(m.ground), unique=True))
    return relabel(m, dict(zip(m.ground, ids)))


# -- construction and validation ----------------------------------------------


def test_isthmus_and_loop_from_sets():
    eps = from_independent_sets([1], [[], [1]])
    assert eps == isthmus(1)
    assert from_bases([1], [[]]) == loop(1)
    assert from_bases([1], [[1]]) == eps


def test_empty_matroid():
    m = from_independent_sets([], [[]])
    assert m == EMPTY
    assert bases(m) == {frozenset()}
    assert rank(m) == 0


def test_single_loop_family_is_valid():
    m = from_independent_sets([1, 2], [[], [1]])
    assert is_loop(m, 2)
    assert is_isthmus(m, 1)


def test_missing_subset_reports_i2():
    with pytest.raises(AxiomViolation) as info:
        from_independent_sets([1, 2], [[], [1], [1, 2]])
    assert info.value.axiom == "I2"
    assert frozenset({2}) in info.value.witness


def test_missing_empty_set_reports_i1():
    with pytest.raises(AxiomViolation) as info:
        from_independent_sets([1], [[1]])
    assert info.value.axiom == "I1"


def test_augmentation_failure_reports_i3():
    # {1,2} and {3}: {3} cannot be augmented from {1,2}
    with pytest.raises(AxiomViolation) as info:
        from_independent_sets([1, 2, 3], [[], [1], [2], [3], [1, 2]])
    assert info.value.axiom == "I3"
    big, small = info.value.witness
    assert len(big) == len(small) + 1


def test_bad_inputs():
    with pytest.raises(InvalidElementId):
        from_independent_sets([0, 1], [[]])
    with pytest.raises(ElementNotInGroundSet):
        from_independent_sets([1], [[], [2]])
    with pytest.raises(EmptyBasisFamily):
        from_bases([1], [])
    with pytest.raises(DuplicateEdgeLabel):
        from_graph(2, [(0, 1, 1), (0, 1, 1)])


def test_bases_form_of_square(square):
    m = from_bases(range(1, 6), SQUARE_BASES)
    assert m == square
    assert rank(square) == 3
    assert bases(square) == SQUARE_BASES
    assert circuits(square) == {frozenset({1, 4, 5}), frozenset({2, 3, 5}), frozenset({1, 2, 3, 4})}
    assert nondegenerate_elements(square) == (1, 2, 3, 4, 5)


def test_square_minors_are_graph_minors(square):
    # contracting edge 5 merges its ends; deleting edge 1 drops it
    g1 = from_graph(3, [(0, 1, 1), (1, 2, 2), (2, 1, 3), (1, 0, 4)])
    g2 = from_graph(4, [e for e in SQUARE_EDGES if e[2] != 1])
    assert contract(square, 5) == g1
    assert delete(square, 1) == g2
    g3 = from_graph(3, [(1, 2, 2), (2, 1, 3), (1, 0, 4)])
    assert delete(contract(square, 5), 1) == g3 == contract(delete(square, 1), 5)


def test_small_graphs():
    assert from_graph(1, [(0, 0, 3)]) == loop(3)
    assert from_graph(2, [(0, 1, 3)]) == isthmus(3)


def test_rank_examples(square):
    assert rank(square, []) == 0
    assert rank(loop(), [1]) == 0
    assert rank(square, [1, 4, 5]) == 2
    with pytest.raises(ElementNotInGroundSet):
        rank(square, [9])


def test_bases_and_circuits_of_named_matroids():
    m, _ = direct_sum(isthmus(), loop())
    assert bases(m) == {frozenset({1})}
    assert circuits(eps_sigma(3, 0)) == frozenset()
    assert circuits(loop()) == {frozenset({1})}


def test_degeneracy_predicates(square):
    assert is_isthmus(isthmus(), 1)
    assert is_loop(loop(), 1)
    assert is_nondegenerate(square, 5)
    with pytest.raises(ElementNotInGroundSet):
        is_loop(square, 6)


def test_dual_examples():
    assert dual(isthmus()) == loop()
    assert dual(U12) == U12
    assert dual(EMPTY) == EMPTY


def test_minor_preconditions():
    with pytest.raises(IsthmusDeletion):
        delete(isthmus(), 1)
    with pytest.raises(LoopContraction):
        contract(loop(), 1)
    m = eps_sigma(1, 1)
    assert delete(m, 2) == isthmus(1)
    assert contract(m, 1) == loop(2)


def test_direct_sum_examples():
    m, shift = direct_sum(isthmus(), loop())
    assert shift == {1: 2}
    assert is_isthmus(m, 1) and is_loop(m, 2)
    s, _ = direct_sum(U12, U12)
    assert rank(s) == 2
    assert circuits(s) == {frozenset({1, 2}), frozenset({3, 4})}
    assert direct_sum(uniform(2, 3), EMPTY)[0] == uniform(2, 3)


# -- morphisms -------------------------------------------------------------------


def test_morphism_checks(square):
    with pytest.raises(InvalidMorphism):
        MatroidMorphism(U12, U12, {1: 1, 2: 1})
    with pytest.raises(InvalidMorphism):
        MatroidMorphism(isthmus(), loop(), {1: 1})
    inc = standard_inclusion(contract(square, 5), square)
    assert inc.image == {1, 2, 3, 4}
    assert compose(inc, identity(inc.source)) == inc
    assert not inc.is_isomorphism()
    assert identity(square).is_isomorphism()


# -- isomorphism and canonical forms ------------------------------------------------


def test_isomorphism_examples(tree_example_graphs):
    m, n = tree_example_graphs
    witness = is_isomorphic(contract(m, 1), n)
    assert witness is not None
    assert relabel(contract(m, 1), witness) == n
    assert canonical_form(contract(m, 1)) == canonical_form(n)
    assert is_isomorphic(isthmus(), loop()) is None
    assert canonical_form(isthmus(7)) == canonical_form(isthmus(1))
    assert canonical_form(isthmus()) != canonical_form(loop())
    assert is_isomorphic(U12, U12) is not None


@pytest.fixture
def tree_example_graphs():
    m = from_graph(4, [(1, 0, 1), (1, 0, 2), (0, 2, 3), (1, 2, 4), (2, 3, 5)])
    n = from_graph(3, [(0, 0, 12), (0, 1, 13), (0, 1, 14), (0, 2, 15)])
    return m, n


def test_isomorphism_witness_is_valid():
    for m in UP_TO_4:
        for other in UP_TO_4:
            f = is_isomorphic(m, other)
            if f is not None:
                assert relabel(m, f) == other


def test_canonical_form_agrees_with_isomorphism_up_to_6():
    pool = exhaustive_matroids(6)
    keys = [canonical_form(m) for m in pool]
    assert len(set(keys)) == len(pool)
    # equal keys must come with an isomorphism: check against shuffled copies
    for m in pool[::3]:
        perm = list(reversed(m.ground))
        moved = relabel(m, dict(zip(m.ground, perm)))
        assert is_isomorphic(m, moved) is not None
        assert canonical_form(moved) == canonical_form(m)
    # distinct keys never carry an isomorphism (pairs with matching coarse invariants)
    by_size = {}
    for m in pool:
        by_size.setdefault((len(m.ground), rank(m), len(m.masks)), []).append(m)
    for group in by_size.values():
        for a, b in itertools.combinations(group, 2):
            assert is_isomorphic(a, b) is None


def test_graphical_keys_agree_with_isomorphism():
    mats = [m for _, m in graphical_matroids(4)]
    for a, b in itertools.combinations(mats, 2):
        assert (canonical_form(a) == canonical_form(b)) == (is_isomorphic(a, b) is not None)


@settings(max_examples=150, deadline=None)
@given(relabelled())
def test_canonical_form_is_relabelling_invariant(m):
    key = canonical_form(m)
    rep = matroid_from_key(key)
    assert rep.ground == tuple(range(1, len(m.ground) + 1))
    assert canonical_form(rep) == key
    assert is_isomorphic(m, rep) is not None


def test_multiset_isomorphic():
    eps, sig = isthmus(), loop()
    assert multiset_isomorphic([eps, sig], [sig, eps])
    assert not multiset_isomorphic([eps, eps], [eps])
    types = [eps_sigma(0, 2), eps_sigma(1, 1), eps_sigma(1, 1), eps_sigma(2, 0),
             eps_sigma(0, 1), eps_sigma(1, 0), eps_sigma(2, 0), eps_sigma(3, 0)]
    shuffled = [relabel(t, {e: e + 10 for e in t.ground}) for t in reversed(types)]
    assert multiset_isomorphic(types, shuffled)


# -- structural invariants ---------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(relabelled())
def test_axiom_round_trip_and_equicardinal_bases(m):
    again = from_independent_sets(m.ground, m.independent_sets)
    assert again == m
    r = rank(m)
    assert all(len(b) == r for b in bases(m))


@settings(max_examples=200, deadline=None)
@given(relabelled())
def test_dual_involution_and_isthmus_loop_duality(m):
    d = dual(m)
    assert dual(d) == m
    assert {frozenset(m.ground) - b for b in bases(m)} == bases(d)
    for e in m.ground:
        assert is_isthmus(m, e) == is_loop(d, e)


@settings(max_examples=200, deadline=None)
@given(relabelled())
def test_duality_of_minors(m):
    d = dual(m)
    for e in nondegenerate_elements(m):
        assert dual(contract(m, e)) == delete(d, e)
        assert dual(delete(m, e)) == contract(d, e)


def _defined(f):
    try:
        return f()
    except (IsthmusDeletion, LoopContraction):
        return None


def test_minor_commutation_literal():
    checked = 0
    for m in SMALL:
        for e, f in itertools.permutations(m.ground, 2):
            pairs = [
                (lambda: delete(delete(m, e), f), lambda: delete(delete(m, f), e)),
                (lambda: contract(contract(m, e), f), lambda: contract(contract(m, f), e)),
                (lambda: contract(delete(m, e), f), lambda: delete(contract(m, f), e)),
            ]
            for lhs, rhs in pairs:
                a, b = _defined(lhs), _defined(rhs)
                if a is not None and b is not None:
                    assert a == b
                    checked += 1
    assert checked > 1000


@settings(max_examples=100, deadline=None)
@given(relabelled(UP_TO_4), relabelled(UP_TO_4))
def test_direct_sum_minors(m1, m2):
    s, shift = direct_sum(m1, m2)
    for e in m1.ground:
        if not is_isthmus(m1, e):
            assert delete(s, e) == direct_sum(delete(m1, e), m2, max(m1.ground))[0]
    for f in m2.ground:
        if not is_loop(m2, f):
            assert contract(s, shift[f]) == direct_sum(m1, contract(m2, f), max(m1.ground, default=0))[0]
    assert canonical_form(s) == canonical_form(direct_sum(m2, m1)[0])
