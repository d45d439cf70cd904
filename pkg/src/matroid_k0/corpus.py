"""Test corpora: every matroid up to isomorphism on few elements, plus named families.

Exhaustive enumeration grows matroids one element at a time. Every matroid on
``n + 1`` elements is a single-element extension of its deletion, and an
extension is fixed by the upward-closed set of flats whose closure absorbs
the new element. Candidates from every upward-closed set are validated
against the axioms and deduplicated by canonical form, so only genuine
modular cuts survive.
"""

from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path

from .errors import AxiomViolation, SizeLimitExceeded
from .io import document_from_graph, document_from_matroid, serialize
from .matroid import (
    EMPTY,
    Matroid,
    _check_axioms,
    canonical_form,
    eps_sigma,
    from_graph,
    matroid_from_key,
    relabel,
    uniform,
)

__all__ = [
    "FAMILIES",
    "MAX_EXHAUSTIVE",
    "exhaustive_matroids",
    "single_element_extensions",
    "connected_graphs",
    "graphical_matroids",
    "uniform_matroids",
    "eps_sigma_matroids",
    "corpus",
    "write_corpus",
]

MAX_EXHAUSTIVE = 10
MAX_GRAPH_EDGES = 7
FAMILIES = ("exhaustive", "uniform", "graphical", "eps-sigma")


def _flats(m: Matroid) -> tuple[list[int], list[int]]:
    """Flats as masks, and the closure of every mask as an index into them."""
    n = len(m.ground)
    r = m.rank_table
    closure = []
    for mask in range(1 << n):
        cl = mask
        for i in range(n):
            if not mask >> i & 1 and r[mask | 1 << i] == r[mask]:
                cl |= 1 << i
        closure.append(cl)
    flats = sorted(set(closure))
    index = {f: k for k, f in enumerate(flats)}
    return flats, [index[c] for c in closure]


def _upsets(flats: list[int]):
    k = len(flats)
    up = [sum(1 << j for j in range(k) if flats[j] & flats[i] == flats[i]) for i in range(k)]
    down = [sum(1 << j for j in range(k) if flats[j] & flats[i] == flats[j]) for i in range(k)]

    def walk(i, inc, exc):
        if i == k:
            yield inc
            return
        if (inc | exc) >> i & 1:
            yield from walk(i + 1, inc, exc)
            return
        if not up[i] & exc:
            yield from walk(i + 1, inc | up[i], exc)
        if not down[i] & inc:
            yield from walk(i + 1, inc, exc | down[i])

    yield from walk(0, 0, 0)


def single_element_extensions(m: Matroid) -> list[Matroid]:
    """All valid extensions of ``m`` by element ``max(E) + 1``, not deduplicated."""
    n = len(m.ground)
    new = (m.ground[-1] if m.ground else 0) + 1
    ground = m.ground + (new,)
    flats, cl_index = _flats(m)
    bit = 1 << n
    out = []
    for cut in _upsets(flats):
        masks = set(m.masks)
        masks.update(j | bit for j in m.masks if not cut >> cl_index[j] & 1)
        candidate = Matroid(ground, frozenset(masks))
        try:
            _check_axioms(candidate)
        except AxiomViolation:
            continue
        out.append(candidate)
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[bytes, ...]:
    if n == 0:
        return (canonical_form(EMPTY),)
    seen = set()
    for key in _level(n - 1):
        for ext in single_element_extensions(matroid_from_key(key)):
            seen.add(canonical_form(ext))
    return tuple(sorted(seen))


def exhaustive_matroids(max_n: int, min_n: int = 0) -> list[Matroid]:
    """One canonical representative per isomorphism class, ``min_n ≤ |E| ≤ max_n``.

    Class counts for ``n = 0..6`` are 1, 2, 4, 8, 17, 38, 98. Sizes above 7
    are permitted up to :data:`MAX_EXHAUSTIVE` but take a long time.
    """
    if max_n > MAX_EXHAUSTIVE:
        raise SizeLimitExceeded(f"exhaustive enumeration is capped at {MAX_EXHAUSTIVE} elements, got {max_n}")
    return [matroid_from_key(k) for n in range(min_n, max_n + 1) for k in _level(n)]


# -- graphs --------------------------------------------------------------------


def _canonical_graph(vertices: int, edges) -> tuple:
    from itertools import permutations

    best = None
    for perm in permutations(range(vertices)):
        relabelled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or relabelled < best:
            best = relabelled
    return (vertices, best)


@lru_cache(maxsize=None)
def connected_graphs(max_edges: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Connected multigraphs (self-loops allowed) with at most ``max_edges`` edges, up to isomorphism.

    Each entry is ``(vertex count, sorted edge pairs)``. Every connected graph
    with ``k`` edges arises from one with ``k - 1`` edges by adding a loop, an
    edge between existing vertices, or a pendant edge to a new vertex.
    """
    if max_edges > MAX_GRAPH_EDGES:
        raise SizeLimitExceeded(f"graph enumeration is capped at {MAX_GRAPH_EDGES} edges, got {max_edges}")
    level = {(1, ())}
    found = set(level)
    for _ in range(max_edges):
        nxt = set()
        for v, edges in level:
            for a in range(v):
                for b in range(a, v + 1):
                    nv = v + 1 if b == v else v
                    nxt.add(_canonical_graph(nv, edges + ((a, b),)))
        found |= nxt
        level = nxt
    return tuple(sorted(found, key=lambda g: (len(g[1]), g[0], g[1])))


def graphical_matroids(max_edges: int) -> list[tuple[tuple[int, tuple], Matroid]]:
    """``(graph, matroid)`` pairs; edges are labelled ``1..k`` in sorted order."""
    out = []
    for v, edges in connected_graphs(max_edges):
        out.append(((v, edges), from_graph(v, [(a, b, i + 1) for i, (a, b) in enumerate(edges)])))
    return out


def uniform_matroids(max_n: int) -> list[Matroid]:
    return [uniform(r, n) for n in range(max_n + 1) for r in range(n + 1)]


def eps_sigma_matroids(max_n: int) -> list[Matroid]:
    return [eps_sigma(a, n - a) for n in range(max_n + 1) for a in range(n + 1)]


def corpus(max_n: int, families=FAMILIES) -> list[Matroid]:
    """Concatenated family members, duplicates across families kept."""
    out: list[Matroid] = []
    for fam in families:
        if fam == "exhaustive":
            out.extend(exhaustive_matroids(max_n))
        elif fam == "uniform":
            out.extend(uniform_matroids(max_n))
        elif fam == "graphical":
            out.extend(m for _, m in graphical_matroids(max_n))
        elif fam == "eps-sigma":
            out.extend(eps_sigma_matroids(max_n))
        else:
            raise ValueError(f"unknown corpus family {fam!r}; choose from {', '.join(FAMILIES)}")
    return out


def _scatter(m: Matroid, rng: random.Random) -> Matroid:
    # spread the ids over 1..2n so files do not all use the canonical labels
    n = len(m.ground)
    ids = sorted(rng.sample(range(1, 2 * n + 1), n)) if n else []
    rng.shuffle(ids)
    return relabel(m, dict(zip(m.ground, ids)))


def write_corpus(out_dir, max_elements: int, families=("exhaustive",), seed: int = 0) -> list[str]:
    """Write one document per corpus member plus ``manifest.tsv``.

    Output depends only on the arguments. Returns the manifest lines
    ``path<TAB>canonical-key-hex`` with paths relative to ``out_dir``.
    """
    if "exhaustive" in families and max_elements > MAX_EXHAUSTIVE:
        raise SizeLimitExceeded(f"exhaustive corpus is capped at {MAX_EXHAUSTIVE} elements, got {max_elements}")
    rng = random.Random(seed)
    out = Path(out_dir)
    lines = []
    for fam in families:
        (out / fam).mkdir(parents=True, exist_ok=True)
        if fam == "graphical":
            members = [(document_from_graph(v, [(a, b, i + 1) for i, (a, b) in enumerate(es)]), m)
                       for (v, es), m in graphical_matroids(max_elements)]
        else:
            form = "independent_sets" if fam == "exhaustive" else "bases"
            members = []
            for m in corpus(max_elements, (fam,)):
                moved = _scatter(m, rng)
                members.append((document_from_matroid(moved, form), moved))
        for k, (doc, m) in enumerate(members):
            rel = f"{fam}/{fam}-{k:04d}.json"
            (out / rel).write_text(serialize(doc), encoding="utf-8")
            lines.append(f"{rel}\t{canonical_form(m).hex()}")
    lines.sort()
    (out / "manifest.tsv").write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return lines
