"""Deletion-contraction trees, their leaf-to-root coverings, and attachment.

A tree is built from three immutable node types:

* :class:`Leaf` -- a matroid with no children;
* :class:`Split` -- a matroid ``N`` split at a non-degenerate element ``e``
  into ``N/e`` and ``N\\e``, each mapped back into ``N`` by the standard
  inclusion;
* :class:`IsoLink` -- a single child related to its parent by an isomorphism
  ``child → parent``.

Nodes are addressed by paths: tuples of selectors ``"c"`` (contraction
child), ``"d"`` (deletion child) and ``"i"`` (iso-link child).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Union

from .basepoint import BASEPOINT, BasePoint
from .errors import (
    IsoLinkNotIsomorphism,
    LeafMatroidMismatch,
    LeafNotIndecomposable,
    PathNotALeaf,
    RootIsBasePoint,
    SplitChildMismatch,
    SplitElementDegenerate,
    TargetMismatch,
    TreeError,
)
from .matroid import (
    Matroid,
    MatroidMorphism,
    compose,
    contract,
    delete,
    direct_sum,
    identity,
    is_nondegenerate,
    isthmuses,
    loops,
    nondegenerate_elements,
    standard_inclusion,
)
from .tutte import Picker, smallest_element

__all__ = [
    "Leaf",
    "Split",
    "IsoLink",
    "DCNode",
    "DCTree",
    "Covering",
    "CONTRACTION_FIRST",
    "DELETION_FIRST",
    "validate_tree",
    "leaf_to_root",
    "attach",
    "build_indecomposable_tree",
    "leaf_profile",
    "split_tree",
    "random_picker",
    "priority_picker",
    "morphism_sum",
    "covering_direct_sum",
    "tree_direct_sum",
    "to_dot",
]

CONTRACTION_FIRST = "contraction-first"
DELETION_FIRST = "deletion-first"


@dataclass(frozen=True)
class Leaf:
    matroid: Matroid


@dataclass(frozen=True)
class Split:
    matroid: Matroid
    element: int
    contraction: "DCNode"
    deletion: "DCNode"
    display_order: str = CONTRACTION_FIRST

    def children(self):
        """``(selector, child)`` pairs in display order, left to right."""
        pair = [("c", self.contraction), ("d", self.deletion)]
        return pair if self.display_order == CONTRACTION_FIRST else pair[::-1]


@dataclass(frozen=True)
class IsoLink:
    matroid: Matroid
    morphism: MatroidMorphism
    child: "DCNode"


DCNode = Union[Leaf, Split, IsoLink]


def _children(node: DCNode):
    if isinstance(node, Split):
        return node.children()
    if isinstance(node, IsoLink):
        return [("i", node.child)]
    return []


class DCTree:
    """A validated deletion-contraction tree.

    Construction runs :func:`validate_tree`; pass ``validate=False`` only to
    build deliberately broken trees (e.g. to exercise the validator).
    """

    __slots__ = ("root",)

    def __init__(self, root: DCNode, validate: bool = True):
        self.root = root
        if validate:
            validate_tree(self)

    @property
    def root_matroid(self) -> Matroid:
        return self.root.matroid

    def __eq__(self, other):
        return isinstance(other, DCTree) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"DCTree(root={self.root_matroid!r}, nodes={len(list(self.nodes()))})"

    def nodes(self) -> Iterator[tuple[tuple[str, ...], DCNode]]:
        """Pre-order ``(path, node)`` pairs, children in display order."""
        stack = [((), self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for sel, child in reversed(_children(node)):
                stack.append((path + (sel,), child))

    def leaves(self) -> list[tuple[tuple[str, ...], Leaf]]:
        return [(p, n) for p, n in self.nodes() if isinstance(n, Leaf)]

    def node_at(self, path) -> DCNode:
        node = self.root
        for sel in path:
            lookup = dict(_children(node))
            if sel not in lookup:
                raise TreeError(f"no child {sel!r}", path)
            node = lookup[sel]
        return node

    def depth(self) -> int:
        return max(len(p) for p, _ in self.nodes())


def _validate_node(node, path):
    m = node.matroid
    if not isinstance(m, Matroid):
        raise TreeError(f"node carries {m!r}, not a matroid", path)
    if isinstance(node, Leaf):
        return
    if isinstance(node, Split):
        e = node.element
        if e not in m.position or not is_nondegenerate(m, e):
            raise SplitElementDegenerate(f"split element {e} is not non-degenerate", path)
        if node.contraction.matroid != contract(m, e):
            raise SplitChildMismatch(f"contraction child is not N/{e}", path + ("c",))
        if node.deletion.matroid != delete(m, e):
            raise SplitChildMismatch(f"deletion child is not N\\{e}", path + ("d",))
        if node.display_order not in (CONTRACTION_FIRST, DELETION_FIRST):
            raise TreeError(f"unknown display order {node.display_order!r}", path)
        _validate_node(node.contraction, path + ("c",))
        _validate_node(node.deletion, path + ("d",))
        return
    if isinstance(node, IsoLink):
        f = node.morphism
        if f.source != node.child.matroid or f.target != m or not f.is_isomorphism():
            raise IsoLinkNotIsomorphism("iso-link is not an isomorphism child → parent", path)
        _validate_node(node.child, path + ("i",))
        return
    raise TreeError(f"unknown node type {type(node).__name__}", path)


def validate_tree(t: DCTree) -> None:
    """Raise a :class:`TreeError` subclass naming the first bad node; return ``None`` if valid."""
    if isinstance(t.root.matroid, BasePoint):
        raise RootIsBasePoint("the root of a deletion-contraction tree cannot be the base-point")
    _validate_node(t.root, ())


# -- coverings ----------------------------------------------------------------


@dataclass(frozen=True)
class Covering:
    """A multi-morphism: finitely many morphisms sharing ``target``.

    Targets may be the base-point, in which case every leg is ``Id_∗``.
    ``witness`` optionally records a tree realizing the legs; it takes no part
    in equality.
    """

    target: Union[Matroid, BasePoint]
    legs: tuple
    witness: DCTree | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        for leg in self.legs:
            if leg.target != self.target:
                raise TargetMismatch("all legs of a covering must share its target")

    @property
    def sources(self) -> list:
        return [leg.source for leg in self.legs]

    def same_legs(self, other: "Covering") -> bool:
        """Equality as multi-sets of morphisms (leg order ignored)."""
        return self.target == other.target and Counter(self.legs) == Counter(other.legs)

    def is_basepoint_family(self) -> bool:
        return self.target is BASEPOINT

    def __len__(self):
        return len(self.legs)


def _legs(node: DCNode) -> list[MatroidMorphism]:
    if isinstance(node, Leaf):
        return [identity(node.matroid)]
    out = []
    for _, child in _children(node):
        if isinstance(node, Split):
            up = standard_inclusion(child.matroid, node.matroid)
        else:
            up = node.morphism
        out.extend(compose(up, f) for f in _legs(child))
    return out


def leaf_to_root(t: DCTree) -> Covering:
    """Leaf-to-root morphisms in display order, with ``t`` attached as witness."""
    return Covering(t.root_matroid, tuple(_legs(t.root)), witness=t)


def _replace(node: DCNode, path, new: DCNode) -> DCNode:
    if not path:
        return new
    sel, rest = path[0], path[1:]
    if isinstance(node, Split):
        if sel == "c":
            return Split(node.matroid, node.element, _replace(node.contraction, rest, new),
                         node.deletion, node.display_order)
        if sel == "d":
            return Split(node.matroid, node.element, node.contraction,
                         _replace(node.deletion, rest, new), node.display_order)
    if isinstance(node, IsoLink) and sel == "i":
        return IsoLink(node.matroid, node.morphism, _replace(node.child, rest, new))
    raise TreeError(f"no child {sel!r}", path)


def attach(base: DCTree, leaf_path, sub: DCTree) -> DCTree:
    """Glue ``sub`` onto ``base`` at the leaf addressed by ``leaf_path``."""
    leaf_path = tuple(leaf_path)
    target = base.node_at(leaf_path)
    if not isinstance(target, Leaf):
        raise PathNotALeaf("attachment point is not a leaf", leaf_path)
    if target.matroid != sub.root_matroid:
        raise LeafMatroidMismatch("leaf matroid differs from the root of the attached tree", leaf_path)
    return DCTree(_replace(base.root, leaf_path, sub.root))


# -- building trees -----------------------------------------------------------


def split_tree(m: Matroid, e: int, display_order: str = CONTRACTION_FIRST) -> DCTree:
    """One split at ``e`` with two leaves."""
    return DCTree(Split(m, e, Leaf(contract(m, e)), Leaf(delete(m, e)), display_order))


def random_picker(seed) -> Picker:
    rng = random.Random(seed)
    return lambda m, candidates: rng.choice(candidates)


def priority_picker(order) -> Picker:
    """Choose the first element of ``order`` among the candidates."""
    order = list(order)

    def pick(m, candidates):
        for e in order:
            if e in candidates:
                return e
        return candidates[0]

    return pick


def build_indecomposable_tree(m: Matroid, picker: Picker | None = None,
                              display_order: str = CONTRACTION_FIRST) -> DCTree:
    """Split at picked non-degenerate elements until no leaf has any."""
    if isinstance(m, BasePoint):
        raise RootIsBasePoint("cannot build a tree on the base-point")
    picker = picker or smallest_element

    def grow(n: Matroid) -> DCNode:
        cands = nondegenerate_elements(n)
        if not cands:
            return Leaf(n)
        e = picker(n, cands)
        return Split(n, e, grow(contract(n, e)), grow(delete(n, e)), display_order)

    return DCTree(grow(m))


def leaf_profile(t: DCTree) -> dict[tuple[int, int], int]:
    """Multiplicity of each ``(isthmus count, loop count)`` among the leaves."""
    out: Counter = Counter()
    for path, leaf in t.leaves():
        m = leaf.matroid
        if nondegenerate_elements(m):
            raise LeafNotIndecomposable("leaf has non-degenerate elements", path)
        out[(len(isthmuses(m)), len(loops(m)))] += 1
    return dict(out)


# -- direct sums of trees -----------------------------------------------------


def morphism_sum(f: MatroidMorphism, g: MatroidMorphism, offset: int) -> MatroidMorphism:
    """``f ⊕ g`` with both second summands shifted by ``offset``."""
    src, _ = direct_sum(f.source, g.source, offset)
    dst, _ = direct_sum(f.target, g.target, offset)
    pairs = list(f.mapping) + [(a + offset, b + offset) for a, b in g.mapping]
    return MatroidMorphism(src, dst, tuple(pairs))


def _max_id(t: DCTree) -> int:
    return max((n.matroid.ground[-1] for _, n in t.nodes() if n.matroid.ground), default=0)


def _sum_right(node: DCNode, right: Matroid, offset: int) -> DCNode:
    """Apply ``- ⊕ right`` to every node."""
    m, _ = direct_sum(node.matroid, right, offset)
    if isinstance(node, Leaf):
        return Leaf(m)
    if isinstance(node, Split):
        return Split(m, node.element, _sum_right(node.contraction, right, offset),
                     _sum_right(node.deletion, right, offset), node.display_order)
    return IsoLink(m, morphism_sum(node.morphism, identity(right), offset),
                   _sum_right(node.child, right, offset))


def _sum_left(left: Matroid, node: DCNode, offset: int) -> DCNode:
    """Apply ``left ⊕ -`` to every node."""
    m, _ = direct_sum(left, node.matroid, offset)
    if isinstance(node, Leaf):
        return Leaf(m)
    if isinstance(node, Split):
        return Split(m, node.element + offset, _sum_left(left, node.contraction, offset),
                     _sum_left(left, node.deletion, offset), node.display_order)
    return IsoLink(m, morphism_sum(identity(left), node.morphism, offset),
                   _sum_left(left, node.child, offset))


def tree_direct_sum(t1: DCTree, t2: DCTree, offset: int | None = None) -> tuple[DCTree, int]:
    """Tree rooted at ``M ⊕ M'`` whose legs are all ``f_i ⊕ g_j``.

    Apply ``- ⊕ M'`` to ``t1``, then attach ``N_i ⊕ t2`` at each leaf
    ``N_i ⊕ M'``. One shift ``offset`` (at least every element id used in
    ``t1``) is used throughout so the standard inclusions line up literally.
    """
    floor = _max_id(t1)
    if offset is None:
        offset = floor
    if offset < floor:
        raise ValueError(f"offset must be at least {floor}")
    right = t2.root_matroid
    tree = DCTree(_sum_right(t1.root, right, offset), validate=False)
    for path, leaf in DCTree(t1.root, validate=False).leaves():
        sub = DCTree(_sum_left(leaf.matroid, t2.root, offset), validate=False)
        tree = attach(tree, path, sub)
    return tree, offset


def covering_direct_sum(c1: Covering, c2: Covering, offset: int) -> Covering:
    """The multi-morphism ``{f_i ⊕ g_j}`` over all pairs of legs."""
    target, _ = direct_sum(c1.target, c2.target, offset)
    legs = tuple(morphism_sum(f, g, offset) for f in c1.legs for g in c2.legs)
    return Covering(target, legs)


# -- rendering ----------------------------------------------------------------


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(t: DCTree, name: str = "DCTree") -> str:
    """Graphviz digraph, edges pointing from parent to child.

    Node labels carry the ground-set size and elements; split edges are
    labelled ``/e`` and ``\\e`` and iso-links ``≅``.
    """
    ids = {}
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for path, node in t.nodes():
        ids[path] = f"n{len(ids)}"
        m = node.matroid
        elems = ",".join(map(str, m.ground))
        kind = "leaf" if isinstance(node, Leaf) else "split" if isinstance(node, Split) else "iso"
        label = f"|E|={len(m.ground)}\\n{{{elems}}}"
        lines.append(f'  {ids[path]} [label="{label}", kind="{kind}"];')
    for path, node in t.nodes():
        for sel, _ in _children(node):
            if sel == "c":
                lab = f"/{node.element}"
            elif sel == "d":
                lab = f"\\{node.element}"
            else:
                lab = "≅"
            lines.append(f'  {ids[path]} -> {ids[path + (sel,)]} [label="{_dot_escape(lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
