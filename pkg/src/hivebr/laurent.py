"""Exact multivariate Laurent polynomials with integer coefficients."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import permutations, product

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """A finite map exponent-vector -> nonzero int. Immutable by convention."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                clean[tuple(e)] = int(c)
        self.terms = clean

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "LaurentPolynomial":
        e = tuple(exponent)
        return cls(len(e), {e: coeff})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.nvars, out)

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def coeff(self, e: Iterable[int]) -> int:
        return self.terms.get(tuple(e), 0)

    def evaluate(self, point) -> object:
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                t = t * x ** k
            total += t
        return total

    def __repr__(self):
        items = sorted(self.terms.items(), reverse=True)
        return f"LaurentPolynomial({self.nvars}, {dict(items)})"


def symplectic_alternant(exps: Iterable[int]) -> LaurentPolynomial:
    """det(x_j^{a_i} - x_j^{-a_i}) for i, j = 1..n, expanded.

    The sum over the hyperoctahedral group of sign times monomial; its
    lexicographically largest term is x^a with coefficient 1 when ``a`` is
    strictly decreasing and positive.
    """
    a = tuple(exps)
    n = len(a)
    out: dict[Exponent, int] = {}
    for perm in permutations(range(n)):
        sgn = _perm_sign(perm)
        for signs in product((1, -1), repeat=n):
            # column j takes row perm[j] with sign signs[j]
            e = tuple(signs[j] * a[perm[j]] for j in range(n))
            c = sgn
            for s in signs:
                if s < 0:
                    c = -c
            out[e] = out.get(e, 0) + c
    return LaurentPolynomial(n, out)


def _perm_sign(perm) -> int:
    sgn = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn
