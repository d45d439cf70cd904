"""Exact finite matroids stored by their full independence family.

A :class:`Matroid` keeps its ground set as a strictly ascending tuple of
positive integers and its independent sets as bitmasks, where bit ``i``
stands for ``ground[i]``. Everything is exponential in the ground-set size,
which is intended: the package targets ground sets of at most ten elements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .errors import (
    AxiomViolation,
    DuplicateEdgeLabel,
    ElementNotInGroundSet,
    EmptyBasisFamily,
    InvalidElementId,
    InvalidMorphism,
    IsthmusDeletion,
    LoopContraction,
    MatroidError,
)

__all__ = [
    "Matroid",
    "MatroidMorphism",
    "from_independent_sets",
    "from_bases",
    "from_graph",
    "rank",
    "bases",
    "circuits",
    "is_loop",
    "is_isthmus",
    "is_nondegenerate",
    "loops",
    "isthmuses",
    "nondegenerate_elements",
    "dual",
    "delete",
    "contract",
    "direct_sum",
    "relabel",
    "standard_inclusion",
    "identity",
    "compose",
    "is_isomorphic",
    "canonical_form",
    "canonical_labeling",
    "matroid_from_key",
    "multiset_isomorphic",
    "EMPTY",
    "isthmus",
    "loop",
    "uniform",
    "eps_sigma",
]


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _drop_bit(mask: int, pos: int) -> int:
    low = mask & ((1 << pos) - 1)
    return low | ((mask >> (pos + 1)) << pos)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, eq=False)
class Matroid:
    """A matroid ``(E, I)`` with ``E`` a finite set of positive integers.

    Instances are immutable. Equality is literal: same ground set and same
    independent sets. Use :func:`is_isomorphic` or :func:`canonical_form` for
    equality up to relabeling.

    The constructor does not validate; go through :func:`from_independent_sets`
    or :func:`from_bases` for untrusted input.
    """

    ground: tuple[int, ...]
    masks: frozenset[int]

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.masks == other.masks

    def __hash__(self):
        return hash((self.ground, self.masks))

    def __repr__(self):
        fam = sorted(sorted(s) for s in self.independent_sets)
        fam.sort(key=lambda s: (len(s), s))
        if len(fam) > 8:
            return f"Matroid(ground={list(self.ground)}, rank={rank(self)}, |I|={len(fam)})"
        return f"Matroid(ground={list(self.ground)}, independent={fam})"

    def __len__(self):
        return len(self.ground)

    @cached_property
    def position(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.ground)}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def to_mask(self, subset: Iterable[int]) -> int:
        mask = 0
        pos = self.position
        for e in subset:
            if e not in pos:
                raise ElementNotInGroundSet(f"element {e} is not in ground set {list(self.ground)}")
            mask |= 1 << pos[e]
        return mask

    def to_set(self, mask: int) -> frozenset[int]:
        return frozenset(e for i, e in enumerate(self.ground) if mask >> i & 1)

    @cached_property
    def independent_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.to_set(m) for m in self.masks)

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.to_mask(subset) in self.masks

    @cached_property
    def rank_table(self) -> tuple[int, ...]:
        n = len(self.ground)
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            if mask in self.masks:
                table[mask] = _popcount(mask)
            else:
                best = 0
                rest = mask
                while rest:
                    low = rest & -rest
                    best = max(best, table[mask ^ low])
                    rest ^= low
                table[mask] = best
        return tuple(table)

    @cached_property
    def basis_masks(self) -> tuple[int, ...]:
        n = len(self.ground)
        out = []
        for m in self.masks:
            if all((m | (1 << i)) not in self.masks for i in range(n) if not m >> i & 1):
                out.append(m)
        return tuple(sorted(out))

    @cached_property
    def element_profile(self) -> dict[int, tuple[int, ...]]:
        """For each element, the number of independent sets of each size containing it."""
        n = len(self.ground)
        counts = [[0] * (n + 1) for _ in range(n)]
        for m in self.masks:
            k = _popcount(m)
            rest = m
            while rest:
                low = rest & -rest
                counts[low.bit_length() - 1][k] += 1
                rest ^= low
        return {e: tuple(counts[i]) for i, e in enumerate(self.ground)}


def _check_element_ids(ground):
    for e in ground:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise InvalidElementId(f"element ids must be positive integers, got {e!r}")


def _check_axioms(m: Matroid) -> None:
    if 0 not in m.masks:
        raise AxiomViolation("I1", (frozenset(),), "the empty set is not independent")
    for mask in sorted(m.masks):
        rest = mask
        while rest:
            low = rest & -rest
            if mask ^ low not in m.masks:
                raise AxiomViolation(
                    "I2",
                    (m.to_set(mask ^ low), m.to_set(mask)),
                    f"{sorted(m.to_set(mask ^ low))} is a subset of independent "
                    f"{sorted(m.to_set(mask))} but is missing",
                )
            rest ^= low
    # Under I2, augmentation for |I| = |J| + 1 implies it for all size gaps.
    by_size: dict[int, list[int]] = {}
    for mask in m.masks:
        by_size.setdefault(_popcount(mask), []).append(mask)
    for k in sorted(by_size):
        larger = by_size.get(k + 1, ())
        for j in sorted(by_size[k]):
            for i in sorted(larger):
                diff = i & ~j
                ok = False
                while diff:
                    low = diff & -diff
                    if j | low in m.masks:
                        ok = True
                        break
                    diff ^= low
                if not ok:
                    raise AxiomViolation(
                        "I3",
                        (m.to_set(i), m.to_set(j)),
                        f"cannot augment J={sorted(m.to_set(j))} from I={sorted(m.to_set(i))}",
                    )


def from_independent_sets(ground: Iterable[int], indep: Iterable[Iterable[int]]) -> Matroid:
    """Build and validate a matroid from its ground set and independent sets."""
    ground_t = tuple(sorted(set(ground)))
    _check_element_ids(ground_t)
    m = Matroid(ground_t, frozenset())
    masks = set()
    for s in indep:
        s = list(s)
        if len(set(s)) != len(s):
            raise MatroidError(f"independent set {s} has repeated elements")
        masks.add(m.to_mask(s))
    m = Matroid(ground_t, frozenset(masks))
    _check_axioms(m)
    return m


def _downward_closure(bases_masks: Iterable[int]) -> frozenset[int]:
    out = set()
    for b in bases_masks:
        if b in out:
            continue
        out.update(_submasks(b))
    return frozenset(out)


def from_bases(ground: Iterable[int], bases_family: Iterable[Iterable[int]]) -> Matroid:
    """Build a matroid from its bases; the independent sets are all subsets of bases."""
    ground_t = tuple(sorted(set(ground)))
    _check_element_ids(ground_t)
    probe = Matroid(ground_t, frozenset())
    bmasks = [probe.to_mask(b) for b in bases_family]
    if not bmasks:
        raise EmptyBasisFamily("a matroid needs at least one basis")
    m = Matroid(ground_t, _downward_closure(bmasks))
    _check_axioms(m)
    return m


def from_graph(vertices: int, edges: Iterable[tuple[int, int, int]]) -> Matroid:
    """Cycle matroid of a multigraph on vertices ``0..vertices-1``.

    ``edges`` holds ``(u, v, label)`` triples; the labels become the ground
    set. Self-loops are loops of the matroid and parallel edges are parallel
    elements.
    """
    edges = [tuple(e) for e in edges]
    labels = [lab for _, _, lab in edges]
    dupes = [lab for lab, c in Counter(labels).items() if c > 1]
    if dupes:
        raise DuplicateEdgeLabel(f"edge labels {sorted(dupes)} occur more than once")
    _check_element_ids(labels)
    for u, v, lab in edges:
        for w in (u, v):
            if not isinstance(w, int) or not 0 <= w < vertices:
                raise MatroidError(f"edge {lab}: vertex {w!r} out of range 0..{vertices - 1}")
    order = sorted(range(len(edges)), key=lambda k: edges[k][2])
    ends = [(edges[k][0], edges[k][1]) for k in order]
    ground = tuple(edges[k][2] for k in order)
    n = len(ground)

    def is_forest(mask):
        parent = list(range(vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(n):
            if mask >> i & 1:
                ra, rb = find(ends[i][0]), find(ends[i][1])
                if ra == rb:
                    return False
                parent[ra] = rb
        return True

    # Forests are closed under subsets, so grow them from smaller ones.
    masks = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            top = mask.bit_length()
            for i in range(top, n):
                cand = mask | (1 << i)
                if is_forest(cand):
                    masks.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return Matroid(ground, frozenset(masks))


# -- basic invariants ---------------------------------------------------------


def rank(m: Matroid, subset: Iterable[int] | None = None) -> int:
    """Size of a largest independent subset of ``subset`` (default: the ground set)."""
    mask = m.full_mask if subset is None else m.to_mask(subset)
    return m.rank_table[mask]


def bases(m: Matroid) -> frozenset[frozenset[int]]:
    return frozenset(m.to_set(b) for b in m.basis_masks)


def _circuit_masks(m: Matroid) -> list[int]:
    out = []
    for mask in range(1 << len(m.ground)):
        if mask in m.masks:
            continue
        rest = mask
        minimal = True
        while rest:
            low = rest & -rest
            if mask ^ low not in m.masks:
                minimal = False
                break
            rest ^= low
        if minimal:
            out.append(mask)
    return out


def circuits(m: Matroid) -> frozenset[frozenset[int]]:
    """All minimal dependent subsets."""
    return frozenset(m.to_set(c) for c in _circuit_masks(m))


def _bit(m: Matroid, e: int) -> int:
    try:
        return 1 << m.position[e]
    except KeyError:
        raise ElementNotInGroundSet(f"element {e} is not in ground set {list(m.ground)}") from None


def is_loop(m: Matroid, e: int) -> bool:
    return _bit(m, e) not in m.masks


def is_isthmus(m: Matroid, e: int) -> bool:
    bit = _bit(m, e)
    return all(b & bit for b in m.basis_masks)


def is_nondegenerate(m: Matroid, e: int) -> bool:
    return not is_loop(m, e) and not is_isthmus(m, e)


def loops(m: Matroid) -> tuple[int, ...]:
    return tuple(e for e in m.ground if is_loop(m, e))


def isthmuses(m: Matroid) -> tuple[int, ...]:
    return tuple(e for e in m.ground if is_isthmus(m, e))


def nondegenerate_elements(m: Matroid) -> tuple[int, ...]:
    return tuple(e for e in m.ground if is_nondegenerate(m, e))


# -- operations ---------------------------------------------------------------


def dual(m: Matroid) -> Matroid:
    full = m.full_mask
    return Matroid(m.ground, _downward_closure(full ^ b for b in m.basis_masks))


def delete(m: Matroid, e: int) -> Matroid:
    """``M \\ e``; deleting an isthmus is rejected."""
    bit = _bit(m, e)
    if is_isthmus(m, e):
        raise IsthmusDeletion(f"element {e} is an isthmus and cannot be deleted")
    pos = m.position[e]
    ground = m.ground[:pos] + m.ground[pos + 1:]
    return Matroid(ground, frozenset(_drop_bit(s, pos) for s in m.masks if not s & bit))


def contract(m: Matroid, e: int) -> Matroid:
    """``M / e``; contracting a loop is rejected."""
    bit = _bit(m, e)
    if is_loop(m, e):
        raise LoopContraction(f"element {e} is a loop and cannot be contracted")
    pos = m.position[e]
    ground = m.ground[:pos] + m.ground[pos + 1:]
    return Matroid(ground, frozenset(_drop_bit(s, pos) for s in m.masks if s & bit))


def direct_sum(m1: Matroid, m2: Matroid, offset: int | None = None) -> tuple[Matroid, dict[int, int]]:
    """Direct sum with ``m2`` relabeled by adding ``offset`` to every element.

    ``offset`` defaults to ``max(m1.ground)`` (0 for the empty matroid) and
    must be at least that. Returns the sum and the relabeling applied to ``m2``.
    """
    floor = m1.ground[-1] if m1.ground else 0
    if offset is None:
        offset = floor
    if offset < floor:
        raise ValueError(f"offset {offset} would collide with elements of the first summand")
    n1 = len(m1.ground)
    ground = m1.ground + tuple(e + offset for e in m2.ground)
    masks = frozenset(a | (b << n1) for a in m1.masks for b in m2.masks)
    return Matroid(ground, masks), {e: e + offset for e in m2.ground}


def relabel(m: Matroid, mapping: Mapping[int, int]) -> Matroid:
    """Image of ``m`` under an injective relabeling of its ground set."""
    images = [mapping[e] for e in m.ground]
    if len(set(images)) != len(images):
        raise InvalidMorphism("relabeling is not injective")
    _check_element_ids(images)
    ground = tuple(sorted(images))
    newpos = {x: i for i, x in enumerate(ground)}
    perm = [newpos[x] for x in images]
    masks = set()
    for s in m.masks:
        t = 0
        for i, p in enumerate(perm):
            if s >> i & 1:
                t |= 1 << p
        masks.add(t)
    return Matroid(ground, frozenset(masks))


# -- morphisms ----------------------------------------------------------------


@dataclass(frozen=True)
class MatroidMorphism:
    """An injective, independence-preserving map of ground sets.

    ``mapping`` is stored as a sorted tuple of ``(source, target)`` pairs so
    morphisms hash and compare by value.
    """

    source: Matroid
    target: Matroid
    mapping: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if isinstance(self.mapping, Mapping):
            object.__setattr__(self, "mapping", tuple(sorted(self.mapping.items())))
        else:
            object.__setattr__(self, "mapping", tuple(sorted(tuple(p) for p in self.mapping)))
        dom = tuple(a for a, _ in self.mapping)
        if dom != self.source.ground:
            raise InvalidMorphism(f"map domain {list(dom)} differs from source ground set")
        img = [b for _, b in self.mapping]
        if len(set(img)) != len(img):
            raise InvalidMorphism("map is not injective")
        tpos = self.target.position
        if any(b not in tpos for b in img):
            raise InvalidMorphism("map leaves the target ground set")
        for s in self.source.masks:
            if self._image_mask(s) not in self.target.masks:
                raise InvalidMorphism(
                    f"independent set {sorted(self.source.to_set(s))} maps to a dependent set"
                )

    def _image_mask(self, s: int) -> int:
        tpos = self.target.position
        t = 0
        for i, (_, b) in enumerate(self.mapping):
            if s >> i & 1:
                t |= 1 << tpos[b]
        return t

    @property
    def map(self) -> dict[int, int]:
        return dict(self.mapping)

    def __call__(self, e: int) -> int:
        return self.map[e]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(b for _, b in self.mapping)

    def is_isomorphism(self) -> bool:
        if len(self.source.ground) != len(self.target.ground):
            return False
        return len(self.source.masks) == len(self.target.masks)

    def __repr__(self):
        return f"MatroidMorphism({dict(self.mapping)})"


def identity(m: Matroid) -> MatroidMorphism:
    return MatroidMorphism(m, m, tuple((e, e) for e in m.ground))


def standard_inclusion(minor: Matroid, m: Matroid) -> MatroidMorphism:
    """The morphism induced by ``minor.ground ⊆ m.ground``."""
    return MatroidMorphism(minor, m, tuple((e, e) for e in minor.ground))


def compose(g: MatroidMorphism, f: MatroidMorphism) -> MatroidMorphism:
    """``g ∘ f``; ``f.target`` must equal ``g.source``."""
    if f.target != g.source:
        raise InvalidMorphism("cannot compose: target of f differs from source of g")
    gm = g.map
    return MatroidMorphism(f.source, g.target, tuple((a, gm[b]) for a, b in f.mapping))


# -- isomorphism --------------------------------------------------------------


def _iso_invariants(m: Matroid):
    sizes = Counter(_popcount(c) for c in _circuit_masks(m))
    return (
        len(m.ground),
        len(m.masks),
        m.rank_table[m.full_mask],
        len(loops(m)),
        len(isthmuses(m)),
        tuple(sorted(sizes.items())),
        tuple(sorted(m.element_profile.values())),
    )


def is_isomorphic(m1: Matroid, m2: Matroid) -> dict[int, int] | None:
    """A bijection ``f`` with ``I ∈ I1 ⇔ f(I) ∈ I2``, or ``None`` if there is none.

    Backtracking over element assignments, restricted to elements with equal
    per-element profiles, with every newly completed subset checked at once.
    """
    if _iso_invariants(m1) != _iso_invariants(m2):
        return None
    n = len(m1.ground)
    p1, p2 = m1.element_profile, m2.element_profile
    rarity = Counter(p1.values())
    order = sorted(range(n), key=lambda i: (rarity[p1[m1.ground[i]]], i))
    assign: list[int] = []
    used = [False] * n
    # Both tables are indexed by masks over the first k assigned elements.
    src_tab = [0]
    dst_tab = [0]

    def extend(k):
        if k == n:
            return True
        bit_i = 1 << order[k]
        want = p1[m1.ground[order[k]]]
        src_new = [s | bit_i for s in src_tab]
        src_ind = [s in m1.masks for s in src_new]
        for j in range(n):
            if used[j] or p2[m2.ground[j]] != want:
                continue
            bit_j = 1 << j
            dst_new = [d | bit_j for d in dst_tab]
            if any((d in m2.masks) != ind for d, ind in zip(dst_new, src_ind)):
                continue
            used[j] = True
            assign.append(j)
            src_tab.extend(src_new)
            dst_tab.extend(dst_new)
            if extend(k + 1):
                return True
            del src_tab[len(src_new):]
            del dst_tab[len(dst_new):]
            assign.pop()
            used[j] = False
        return False

    if not extend(0):
        return None
    return {m1.ground[order[k]]: m2.ground[j] for k, j in enumerate(assign)}


def _twin_classes(m: Matroid) -> list[int]:
    """Class index per position; positions are twins when swapping them is an automorphism."""
    n = len(m.ground)
    cls = list(range(n))
    for a in range(n):
        if cls[a] != a:
            continue
        for b in range(a + 1, n):
            if cls[b] != b:
                continue
            ba, bb = 1 << a, 1 << b
            swap_ok = True
            for s in m.masks:
                if bool(s & ba) != bool(s & bb):
                    t = s ^ ba ^ bb
                    if t not in m.masks:
                        swap_ok = False
                        break
            if swap_ok:
                cls[b] = a
    return cls


def canonical_labeling(m: Matroid) -> tuple[int, ...]:
    """Elements of ``m`` listed in the order that receives labels ``1..n``.

    The canonical encoding is the characteristic bit string of the relabeled
    independence family, indexed by subset bitmask. Labels are handed out one
    at a time; after label ``k`` the bits for every subset of ``{1..k}`` are
    fixed, so partial labelings are compared on that prefix and only the
    lexicographically smallest survive. Labels follow the per-element profile
    order, and interchangeable (twin) elements are branched on once.
    """
    n = len(m.ground)
    if n == 0:
        return ()
    profile = [m.element_profile[e] for e in m.ground]
    twin = _twin_classes(m)
    masks = m.masks
    # frontier entries: (labelled positions, image table over label masks)
    frontier = [((), (0,))]
    for k in range(n):
        best = None
        nxt = []
        for placed, table in frontier:
            rest = [i for i in range(n) if i not in placed]
            low = min(profile[i] for i in rest)
            seen = set()
            for i in rest:
                if profile[i] != low or twin[i] in seen:
                    continue
                seen.add(twin[i])
                bit = 1 << i
                chunk = 0
                ext = []
                for img in table:
                    t = img | bit
                    ext.append(t)
                    chunk = (chunk << 1) | (t in masks)
                if best is None or chunk < best:
                    best = chunk
                    nxt = []
                if chunk == best:
                    nxt.append((placed + (i,), table + tuple(ext)))
        frontier = nxt
    return tuple(m.ground[i] for i in frontier[0][0])


@lru_cache(maxsize=65536)
def canonical_form(m: Matroid) -> bytes:
    """Byte key that agrees exactly on isomorphic matroids.

    Layout: one byte holding ``n``, then the ``2**n`` characteristic bits of
    the canonically relabeled independence family, most significant first.
    """
    order = canonical_labeling(m)
    n = len(order)
    relabeled = relabel(m, {e: k + 1 for k, e in enumerate(order)})
    bits = 0
    for lmask in range(1 << n):
        bits = (bits << 1) | (lmask in relabeled.masks)
    nbytes = ((1 << n) + 7) // 8
    bits <<= nbytes * 8 - (1 << n)
    return bytes([n]) + bits.to_bytes(nbytes, "big")


def matroid_from_key(key: bytes) -> Matroid:
    """Decode a canonical key to the canonical representative on ``{1..n}``."""
    n = key[0]
    nbytes = ((1 << n) + 7) // 8
    bits = int.from_bytes(key[1:1 + nbytes], "big") >> (nbytes * 8 - (1 << n))
    total = 1 << n
    masks = frozenset(l for l in range(total) if bits >> (total - 1 - l) & 1)
    return Matroid(tuple(range(1, n + 1)), masks)


def multiset_isomorphic(a: Iterable[Matroid], b: Iterable[Matroid]) -> bool:
    return Counter(map(canonical_form, a)) == Counter(map(canonical_form, b))


# -- named matroids -----------------------------------------------------------

EMPTY = Matroid((), frozenset({0}))


def isthmus(e: int = 1) -> Matroid:
    """The one-element matroid whose element is an isthmus (``ε``)."""
    return Matroid((e,), frozenset({0, 1}))


def loop(e: int = 1) -> Matroid:
    """The one-element matroid whose element is a loop (``σ``)."""
    return Matroid((e,), frozenset({0}))


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return Matroid(
        tuple(range(1, n + 1)),
        frozenset(s for s in range(1 << n) if _popcount(s) <= r),
    )


def eps_sigma(m: int, n: int) -> Matroid:
    """``ε^m ⊕ σ^n`` on ``{1..m+n}``: isthmuses first, then loops."""
    return Matroid(tuple(range(1, m + n + 1)), frozenset(_submasks((1 << m) - 1)))

