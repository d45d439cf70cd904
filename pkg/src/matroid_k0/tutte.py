"""Tutte polynomial by deletion-contraction and by subset enumeration.

The two routes are deliberately disjoint: :func:`tutte` only uses loop and
isthmus tests plus minors, while :func:`tutte_oracle` only uses ranks of
subsets. Neither consults the other's cache.
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from typing import Callable

from .matroid import Matroid, canonical_form, contract, delete, is_isthmus, is_loop
from .polynomial import XY, BivariatePolynomial

__all__ = ["tutte", "tutte_oracle", "clear_tutte_cache", "Picker", "smallest_element"]

Picker = Callable[[Matroid, tuple[int, ...]], int]

_ONE = BivariatePolynomial.constant(1)
_X = BivariatePolynomial.monomial(1, 0)
_Y = BivariatePolynomial.monomial(0, 1)

_memo: dict[bytes, BivariatePolynomial] = {}
_memo_lock = threading.Lock()


def _memo_limit() -> int | None:
    raw = os.environ.get("MATROID_K0_MEMO_LIMIT")
    return int(raw) if raw else None


def clear_tutte_cache() -> None:
    with _memo_lock:
        _memo.clear()


def smallest_element(m: Matroid, candidates: tuple[int, ...]) -> int:
    return candidates[0]


def _store(key, value):
    limit = _memo_limit()
    with _memo_lock:
        if limit is not None and len(_memo) >= limit:
            _memo.clear()
        _memo.setdefault(key, value)


def tutte(m: Matroid, picker: Picker | None = None) -> BivariatePolynomial:
    """``T(M; x, y)`` from the four recursive rules, memoized on canonical forms.

    ``picker`` chooses which non-degenerate element to split on; the answer
    does not depend on it. Matroids without non-degenerate elements peel off
    their first element as an isthmus (factor ``x``) or a loop (factor ``y``).
    """
    picker = picker or smallest_element
    if not m.ground:
        return _ONE
    key = canonical_form(m)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    split = tuple(e for e in m.ground if not is_loop(m, e) and not is_isthmus(m, e))
    if split:
        e = picker(m, split)
        result = tutte(delete(m, e), picker) + tutte(contract(m, e), picker)
    else:
        e = m.ground[0]
        if is_isthmus(m, e):
            result = _X * tutte(contract(m, e), picker)
        else:
            result = _Y * tutte(delete(m, e), picker)
    _store(key, result)
    return result


def _subset_ranks(m: Matroid) -> list[int]:
    # r(A) = max |I| over independent I ⊆ A, pushed upward through supersets
    n = len(m.ground)
    r = [0] * (1 << n)
    for mask in range(1 << n):
        best = bin(mask).count("1") if mask in m.masks else 0
        rest = mask
        while rest:
            low = rest & -rest
            if r[mask ^ low] > best:
                best = r[mask ^ low]
            rest ^= low
        r[mask] = best
    return r


def tutte_oracle(m: Matroid) -> BivariatePolynomial:
    """``Σ_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`` over every subset ``A`` of ``E``."""
    n = len(m.ground)
    r = _subset_ranks(m)
    full = r[(1 << n) - 1]
    tally = Counter()
    for mask in range(1 << n):
        tally[(full - r[mask], bin(mask).count("1") - r[mask])] += 1
    xm1 = BivariatePolynomial({(1, 0): 1, (0, 0): -1}, XY)
    ym1 = BivariatePolynomial({(0, 1): 1, (0, 0): -1}, XY)
    total = BivariatePolynomial({}, XY)
    for (i, j), count in sorted(tally.items()):
        total = total + count * (xm1**i) * (ym1**j)
    return total
