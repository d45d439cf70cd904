"""Sparse integer polynomials in two commuting variables."""

from __future__ import annotations

from typing import Mapping

XY = ("x", "y")
EPS_SIGMA = ("ε", "σ")


class BivariatePolynomial:
    """Element of ``Z[u, v]`` stored as ``{(i, j): coeff}`` with no zero coefficients.

    ``names`` only matters for display and for equality: a polynomial in
    ``x, y`` never compares equal to one in ``ε, σ``; use :meth:`rename`.
    Integers are accepted on either side of ``+``, ``-``, ``*`` and ``==``.
    """

    __slots__ = ("_terms", "names", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None, names=XY):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            c = int(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self.names = tuple(names)
        self._hash = None

    @classmethod
    def constant(cls, c: int, names=XY):
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1, names=XY):
        return cls({(i, j): coeff}, names)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _lift(self, other):
        if isinstance(other, BivariatePolynomial):
            if other.names != self.names:
                raise ValueError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self._terms.items()}, self.names)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            for (p, q), d in other._terms.items():
                key = (a + p, b + q)
                out[key] = out.get(key, 0) + c * d
        return BivariatePolynomial(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePolynomial.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other, self.names)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.names == other.names and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, x: int, y: int) -> int:
        return self.evaluate(x, y)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def rename(self, names) -> BivariatePolynomial:
        return BivariatePolynomial(self._terms, names)

    def swap(self) -> BivariatePolynomial:
        """``p(y, x)``: exchange the exponents of the two variables."""
        return BivariatePolynomial({(j, i): c for (i, j), c in self._terms.items()}, self.names)

    def sorted_terms(self):
        # x-degree descending, then y-degree descending
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self):
        if not self._terms:
            return "0"
        u, v = self.names
        parts = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if i:
                factors.append(u if i == 1 else f"{u}^{i}")
            if j:
                factors.append(v if j == 1 else f"{v}^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"BivariatePolynomial({str(self)!r}, names={self.names})"


def x(names=XY) -> BivariatePolynomial:
    return BivariatePolynomial.monomial(1, 0, names=names)


def y(names=XY) -> BivariatePolynomial:
    return BivariatePolynomial.monomial(0, 1, names=names)
