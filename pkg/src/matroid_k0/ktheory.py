"""K₀ of matroids with isomorphism coverings and with Tutte coverings.

``K0IsoElement`` is a formal integer combination of isomorphism classes,
keyed by canonical forms. The Tutte-covering group is kept in normal form as
polynomials in ``ε, σ`` (see :func:`gamma`), so no relation-chasing happens
in the data model.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .basepoint import BASEPOINT, BASEPOINT_ID, BasePoint
from .errors import ArityMismatch, TargetMismatch, TreeError, WitnessRootMismatch
from .matroid import (
    EMPTY,
    Matroid,
    MatroidMorphism,
    canonical_form,
    compose,
    contract,
    delete,
    direct_sum,
    identity,
    matroid_from_key,
    nondegenerate_elements,
    relabel,
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
    leaf_to_root,
    random_picker,
    split_tree,
    validate_tree,
)
from .tutte import tutte

__all__ = [
    "BASEPOINT",
    "BASEPOINT_ID",
    "BasePoint",
    "PointedObject",
    "K0IsoElement",
    "K0TcElement",
    "CoveringStructure",
    "Verdict",
    "CoveringCheck",
    "is_covering",
    "find_tutte_witness",
    "compose_coverings",
    "basepoint_family",
    "k0_iso",
    "k0_iso_product",
    "gamma",
    "rho",
    "tg_invariant",
    "elementary_trees",
    "verify_covering_axioms",
    "CoveringAxiomReport",
]

PointedObject = Union[Matroid, BasePoint]
K0TcElement = BivariatePolynomial  # always with names ("ε", "σ")


class K0IsoElement:
    """Element of ``Z[M]``: ``{canonical key: nonzero coefficient}``.

    Each key keeps the canonical representative on ``{1..n}``. Supports
    ``+``, ``-``, unary ``-``, integer scaling and the ring product
    ``[M]·[N] = [M ⊕ N]`` via ``*``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[bytes, int] | None = None):
        self._coeffs = {k: int(c) for k, c in (coeffs or {}).items() if c}

    @classmethod
    def of(cls, m: PointedObject, coeff: int = 1) -> "K0IsoElement":
        if isinstance(m, BasePoint):
            return cls()
        return cls({canonical_form(m): coeff})

    @property
    def coeffs(self) -> dict[bytes, int]:
        return dict(self._coeffs)

    def items(self) -> Iterator[tuple[Matroid, int]]:
        """``(representative, coefficient)`` pairs in key order."""
        for k in sorted(self._coeffs):
            yield matroid_from_key(k), self._coeffs[k]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        if not isinstance(other, K0IsoElement):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return K0IsoElement(out)

    def __neg__(self):
        return K0IsoElement({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, K0IsoElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return K0IsoElement({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, K0IsoElement):
            return NotImplemented
        out: dict[bytes, int] = {}
        for k1, c1 in self._coeffs.items():
            m1 = matroid_from_key(k1)
            for k2, c2 in other._coeffs.items():
                summed, _ = direct_sum(m1, matroid_from_key(k2))
                key = canonical_form(summed)
                out[key] = out.get(key, 0) + c1 * c2
        return K0IsoElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, K0IsoElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs):
            c = self._coeffs[k]
            body = f"[{k.hex()}]" if abs(c) == 1 else f"{abs(c)}*[{k.hex()}]"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"K0IsoElement({str(self)!r})"


def k0_iso(m: PointedObject) -> K0IsoElement:
    """The class ``[M]``; the base-point maps to zero."""
    return K0IsoElement.of(m)


def k0_iso_product(a: K0IsoElement, b: K0IsoElement) -> K0IsoElement:
    return a * b


def gamma(a: K0IsoElement) -> K0TcElement:
    """Linear extension of ``[M] ↦ T(M; ε, σ)``."""
    total = BivariatePolynomial({}, EPS_SIGMA)
    for rep, c in a.items():
        total = total + c * tutte(rep).rename(EPS_SIGMA)
    return total


def rho(a: K0TcElement) -> BivariatePolynomial:
    """``ε ↦ x``, ``σ ↦ y``."""
    if a.names != EPS_SIGMA:
        raise ValueError(f"expected a polynomial in {EPS_SIGMA}, got {a.names}")
    return a.rename(XY)


def tg_invariant(m: Matroid, eps_value: int, sigma_value: int) -> int:
    """The Tutte-Grothendieck invariant with ``f(ε), f(σ)`` given, i.e. ``T(M; a, b)``."""
    return tutte(m).evaluate(eps_value, sigma_value)


# -- covering families --------------------------------------------------------


class CoveringStructure(enum.Enum):
    S_ISO = "iso"
    S_TC = "tc"


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CoveringCheck:
    verdict: Verdict
    reason: str
    witness: DCTree | None = field(default=None, compare=False)

    def __bool__(self):
        return self.verdict is Verdict.ACCEPTED


def basepoint_family(k: int) -> Covering:
    """``{∗ → ∗}`` repeated ``k`` times (``k = 0`` allowed)."""
    return Covering(BASEPOINT, (BASEPOINT_ID,) * k)


def _leaf_for(n: Matroid, leg: MatroidMorphism):
    """A leaf (possibly under an iso-link) realizing ``leg`` at node ``n``."""
    if leg.image != frozenset(n.ground):
        return None
    try:
        phi = MatroidMorphism(leg.source, n, leg.mapping)
    except Exception:
        return None
    if not phi.is_isomorphism():
        return None
    if leg.source == n and all(a == b for a, b in leg.mapping):
        return Leaf(n)
    return IsoLink(n, phi, Leaf(leg.source))


def find_tutte_witness(c: Covering, depth: int = 3) -> CoveringCheck:
    """Search for a tree whose leaf-to-root morphisms are exactly the legs of ``c``.

    Iso-links can always be pushed down to sit directly above leaves, so the
    search only enumerates splits, up to ``depth`` levels, and places leaves
    where a leg's image is the whole ground set of the node. Every split
    shrinks the ground set, so once ``depth`` reaches ``|E|`` the search is
    exhaustive and a miss is a proof of non-membership.
    """
    target = c.target
    legs = list(c.legs)
    if not legs:
        return CoveringCheck(Verdict.REJECTED, "every tree has at least one leaf")
    cut = [False]

    def realize(n: Matroid, idx: tuple[int, ...], budget: int):
        if len(idx) == 1:
            return _leaf_for(n, legs[idx[0]])
        cands = nondegenerate_elements(n)
        if not cands:
            return None
        if budget == 0:
            cut[0] = True
            return None
        for e in cands:
            if any(e in legs[i].image for i in idx):
                continue
            con, dele = contract(n, e), delete(n, e)
            rest = idx[1:]
            # fix idx[0] on the contraction side, or on the deletion side, to halve symmetric work
            for first_side in ("c", "d"):
                for r in range(len(rest) + 1):
                    for combo in itertools.combinations(rest, r):
                        side = (idx[0],) + combo
                        other = tuple(i for i in rest if i not in combo)
                        if not other:
                            continue
                        c_idx, d_idx = (side, other) if first_side == "c" else (other, side)
                        left = realize(con, c_idx, budget - 1)
                        if left is None:
                            continue
                        right = realize(dele, d_idx, budget - 1)
                        if right is not None:
                            return Split(n, e, left, right)
        return None

    node = realize(target, tuple(range(len(legs))), depth)
    if node is not None:
        tree = DCTree(node)
        return CoveringCheck(Verdict.ACCEPTED, f"found a witness tree of depth {tree.depth()}", tree)
    if cut[0] and depth < len(target.ground):
        return CoveringCheck(Verdict.INCONCLUSIVE, f"no witness tree of depth <= {depth}")
    return CoveringCheck(Verdict.REJECTED, "exhaustive search found no witness tree")


def is_covering(tag: CoveringStructure, c: Covering, witness: DCTree | None = None,
                depth: int = 3) -> CoveringCheck:
    """Decide membership of ``c`` in the given covering structure.

    For ``S_TC`` a supplied witness (or ``c.witness``) is checked first; if it
    does not realize ``c``, a bounded witness search follows.
    """
    if c.target is BASEPOINT:
        if all(leg is BASEPOINT_ID for leg in c.legs):
            return CoveringCheck(Verdict.ACCEPTED, f"family of {len(c.legs)} identities on ∗")
        return CoveringCheck(Verdict.REJECTED, "only identities can map to ∗")
    if tag is CoveringStructure.S_ISO:
        if len(c.legs) == 1 and c.legs[0].is_isomorphism():
            return CoveringCheck(Verdict.ACCEPTED, "singleton isomorphism")
        return CoveringCheck(Verdict.REJECTED, "not a singleton isomorphism")

    witness = witness if witness is not None else c.witness
    notes = []
    if witness is not None:
        if witness.root_matroid != c.target:
            raise WitnessRootMismatch("witness tree is rooted at a different matroid than the covering target")
        try:
            validate_tree(witness)
        except TreeError as exc:
            notes.append(f"supplied witness invalid: {exc}")
        else:
            if leaf_to_root(witness).same_legs(c):
                return CoveringCheck(Verdict.ACCEPTED, "witness realizes the covering", witness)
            notes.append("supplied witness has different leaf-to-root morphisms")
    found = find_tutte_witness(c, depth)
    if notes:
        found = CoveringCheck(found.verdict, "; ".join(notes + [found.reason]), found.witness)
    return found


def compose_coverings(outer: Covering, inners: list[Covering]) -> Covering:
    """All composites ``g_j ∘ f_ij``, with an attached witness when every input has one."""
    inners = list(inners)
    if len(inners) != len(outer.legs):
        raise ArityMismatch(f"{len(outer.legs)} outer legs but {len(inners)} inner coverings")
    legs = []
    for g, inner in zip(outer.legs, inners):
        if inner.target != g.source:
            raise TargetMismatch("inner covering target differs from the outer leg's source")
        for f in inner.legs:
            legs.append(BASEPOINT_ID if g is BASEPOINT_ID else compose(g, f))
    witness = None
    if outer.witness is not None and all(i.witness is not None for i in inners):
        witness = _attach_all(outer, inners)
    return Covering(outer.target, tuple(legs), witness=witness)


def _attach_all(outer: Covering, inners: list[Covering]) -> DCTree | None:
    tree = outer.witness
    pending = list(zip(tree.leaves(), leaf_to_root(tree).legs))
    plan = []
    for g, inner in zip(outer.legs, inners):
        for k, ((path, _), leg) in enumerate(pending):
            if leg == g:
                plan.append((path, inner.witness))
                del pending[k]
                break
        else:
            return None
    for path, sub in plan:
        tree = attach(tree, path, sub)
    return tree


# -- enumeration and axiom checks ---------------------------------------------


def elementary_trees(m: Matroid, depth: int) -> Iterator[DCTree]:
    """Every split-only tree on ``m`` with at most ``depth`` levels of splits."""

    def grow(n: Matroid, budget: int):
        yield Leaf(n)
        if budget == 0:
            return
        for e in nondegenerate_elements(n):
            lefts = list(grow(contract(n, e), budget - 1))
            rights = list(grow(delete(n, e), budget - 1))
            for a in lefts:
                for b in rights:
                    yield Split(n, e, a, b)

    for node in grow(m, depth):
        yield DCTree(node, validate=False)


@dataclass
class CoveringAxiomReport:
    tag: CoveringStructure
    checks: dict[str, int] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.counterexamples.append(f"{name}: {detail}")

    def summary(self) -> str:
        counts = ", ".join(f"{k}={v}" for k, v in self.checks.items())
        status = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.tag.name}: {status} [{counts}]"


def _fresh_relabel(m: Matroid, rng: random.Random) -> MatroidMorphism:
    """A random isomorphism ``m' → m`` from a shifted, shuffled copy."""
    base = (m.ground[-1] if m.ground else 0) + 1
    targets = list(m.ground)
    rng.shuffle(targets)
    fresh = {t: base + k for k, t in enumerate(targets)}
    copy = relabel(m, fresh)
    return MatroidMorphism(copy, m, tuple((v, k) for k, v in fresh.items()))


def _accepted_tc(m: Matroid, rng: random.Random) -> list[Covering]:
    out = [leaf_to_root(DCTree(Leaf(m)))]
    for e in nondegenerate_elements(m):
        out.append(leaf_to_root(split_tree(m, e)))
    out.append(leaf_to_root(build_indecomposable_tree(m)))
    out.append(leaf_to_root(build_indecomposable_tree(m, random_picker(rng.random()))))
    iso = _fresh_relabel(m, rng)
    out.append(leaf_to_root(DCTree(IsoLink(m, iso, Leaf(iso.source)))))
    return out


def verify_covering_axioms(tag: CoveringStructure, sample: Iterable[Matroid], depth: int = 3,
                           seed: int = 0) -> CoveringAxiomReport:
    """Machine-check the covering-family axioms on a finite sample.

    (i) families of ``k ≤ depth`` identities on ``∗`` are accepted, (ii) every
    identity singleton is accepted, (iii) composites of accepted coverings are
    accepted. For ``S_TC`` composites are checked through their attached
    witness trees, and isomorphism singletons must be accepted as well.
    """
    rng = random.Random(seed)
    report = CoveringAxiomReport(tag)
    sample = list(sample)

    for k in range(depth + 1):
        ok = bool(is_covering(tag, basepoint_family(k), depth=depth))
        report.record("basepoint_family", ok, f"size {k} rejected")
    for k in range(depth + 1):
        inner = [basepoint_family(rng.randint(0, depth)) for _ in range(k)]
        comp = compose_coverings(basepoint_family(k), inner)
        report.record("basepoint_composition", bool(is_covering(tag, comp, depth=depth)),
                      f"composite of {k} base-point families rejected")

    for m in sample:
        ident = Covering(m, (identity(m),))
        check = is_covering(tag, ident, depth=depth)
        report.record("identity", bool(check), f"{m!r}: {check.reason}")

        if tag is CoveringStructure.S_ISO:
            f = _fresh_relabel(m, rng)
            g = _fresh_relabel(f.source, rng)
            outer, inner = Covering(m, (f,)), Covering(f.source, (g,))
            for o, i in ((outer, inner), (ident, outer), (outer, Covering(f.source, (identity(f.source),)))):
                comp = compose_coverings(o, [i])
                check = is_covering(tag, comp, depth=depth)
                report.record("composition", bool(check), f"{m!r}: {check.reason}")
            continue

        iso = _fresh_relabel(m, rng)
        check = is_covering(tag, Covering(m, (iso,)), depth=depth)
        report.record("isomorphism_singleton", bool(check), f"{m!r}: {check.reason}")
        for outer in _accepted_tc(m, rng):
            check = is_covering(tag, outer, depth=depth)
            report.record("generator", bool(check), f"{m!r}: {check.reason}")
            inners = []
            for src in outer.sources:
                options = _accepted_tc(src, rng)
                inners.append(options[rng.randrange(len(options))])
            comp = compose_coverings(outer, inners)
            if comp.witness is None:
                report.record("composition", False, f"{m!r}: no composite witness")
                continue
            check = is_covering(tag, comp, depth=depth)
            ok = bool(check) and check.witness is comp.witness
            report.record("composition", ok, f"{m!r}: {check.reason}")
    return report


def _empty_unit() -> K0IsoElement:
    return k0_iso(EMPTY)
