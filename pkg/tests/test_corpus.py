import itertools

import pytest

from matroid_k0.corpus import (
    connected_graphs,
    exhaustive_matroids,
    single_element_extensions,
    write_corpus,
)
from matroid_k0.errors import SizeLimitExceeded
from matroid_k0.matroid import canonical_form, direct_sum, from_graph, isthmus, loop, uniform


def _brute_force_classes(n):
    """Isomorphism classes of matroids on {0..n-1}: every downward-closed family passing I3."""
    subsets = list(range(1 << n))
    perms = list(itertools.permutations(range(n)))

    def apply(perm, mask):
        return sum(1 << perm[i] for i in range(n) if mask >> i & 1)

    def augmentable(fam):
        for a in fam:
            for b in fam:
                if bin(b).count("1") < bin(a).count("1"):
                    if not any((b | 1 << i) in fam for i in range(n) if a >> i & 1 and not b >> i & 1):
                        return False
        return True

    classes = set()
    # a downward-closed family is determined by its maximal members: walk all families of subsets
    for choice in range(1 << len(subsets)) if n <= 3 else ():
        fam = frozenset(s for k, s in enumerate(subsets) if choice >> k & 1)
        if 0 in fam and all(s & ~(1 << i) in fam for s in fam for i in range(n) if s >> i & 1):
            if augmentable(fam):
                classes.add(min(tuple(sorted(apply(p, s) for s in fam)) for p in perms))
    if n == 4:
        # antichains of maximal sets
        def walk(k, chosen):
            if k == len(subsets):
                yield chosen
                return
            s = subsets[k]
            yield from walk(k + 1, chosen)
            if all(not (s & c == s or s & c == c) for c in chosen):
                yield from walk(k + 1, chosen + [s])

        for maxima in walk(0, []):
            if not maxima:
                continue
            fam = frozenset(t for c in maxima for t in range(c + 1) if t & c == t)
            if augmentable(fam):
                classes.add(min(tuple(sorted(apply(p, s) for s in fam)) for p in perms))
    return classes


@pytest.mark.parametrize("n, count", [(0, 1), (1, 2), (2, 4), (3, 8), (4, 17)])
def test_exhaustive_counts_match_brute_force(n, count):
    assert len(_brute_force_classes(n)) == count
    assert len(exhaustive_matroids(n, n)) == count


def test_known_counts():
    assert [len(exhaustive_matroids(n, n)) for n in range(7)] == [1, 2, 4, 8, 17, 38, 98]
    assert len(exhaustive_matroids(2)) == 7


def test_keys_are_distinct_and_canonical():
    pool = exhaustive_matroids(5)
    keys = [canonical_form(m) for m in pool]
    assert len(set(keys)) == len(keys)
    assert all(m.ground == tuple(range(1, len(m.ground) + 1)) for m in pool)


def test_extensions_include_loop_and_isthmus():
    u12 = uniform(1, 2)
    exts = {canonical_form(e) for e in single_element_extensions(u12)}
    want = {uniform(1, 3), direct_sum(u12, loop())[0], direct_sum(u12, isthmus())[0]}
    assert exts == {canonical_form(m) for m in want}


def test_graph_counts():
    graphs = connected_graphs(5)
    assert [sum(1 for _, e in graphs if len(e) == k) for k in range(6)] == [1, 2, 4, 11, 30, 95]
    for v, edges in graphs:
        from_graph(v, [(a, b, i + 1) for i, (a, b) in enumerate(edges)])


def test_size_limits(tmp_path):
    with pytest.raises(SizeLimitExceeded):
        exhaustive_matroids(11)
    with pytest.raises(SizeLimitExceeded):
        write_corpus(tmp_path, 11, ("exhaustive",))


def test_manifest_is_deterministic(tmp_path):
    a = write_corpus(tmp_path / "a", 4, ("exhaustive", "uniform", "eps-sigma", "graphical"), seed=3)
    b = write_corpus(tmp_path / "b", 4, ("exhaustive", "uniform", "eps-sigma", "graphical"), seed=3)
    assert (tmp_path / "a" / "manifest.tsv").read_bytes() == (tmp_path / "b" / "manifest.tsv").read_bytes()
    assert a == b
    for line in a:
        path, key = line.split("\t")
        assert (tmp_path / "a" / path).read_bytes() == (tmp_path / "b" / path).read_bytes()
    c = write_corpus(tmp_path / "c", 4, ("exhaustive",), seed=4)
    exhaustive = [line for line in a if line.startswith("exhaustive/")]
    # a different seed moves labels but not classes
    assert sorted(k for _, k in (l.split("\t") for l in c)) == sorted(k for _, k in (l.split("\t") for l in exhaustive))


def test_manifest_keys_match_files(tmp_path):
    from matroid_k0.io import load_matroid

    for line in write_corpus(tmp_path, 3, ("exhaustive", "graphical"), seed=1):
        path, key = line.split("\t")
        assert canonical_form(load_matroid(tmp_path / path)).hex() == key
