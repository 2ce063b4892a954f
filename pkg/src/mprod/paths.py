"""Closed-form M-polynomials of products of two paths P_m and P_n (m, n >= 3).

These are evaluated numerically at given orders and used as golden values.
Paths are numbered end to end, vertex k adjacent to k + 1. The constant
Sierpinski map sends every vertex to the endpoint 0; the identity map sends
k to k and needs m <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bipoly import BiPoly
from .products import ProductKind, SierpinskiMap


class PathSpecError(ValueError):
    pass


@dataclass(frozen=True)
class PathProductSpec:
    kind: ProductKind
    m: int
    n: int
    map_kind: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ProductKind.parse(self.kind))
        if self.m < 3 or self.n < 3:
            raise PathSpecError(f"path orders must be at least 3, got m={self.m}, n={self.n}")
        if self.kind is ProductKind.SIERPINSKI:
            if self.map_kind not in ("constant", "identity"):
                raise PathSpecError(f"Sierpinski spec needs map_kind constant|identity, got {self.map_kind!r}")
            if self.map_kind == "identity" and self.m > self.n:
                raise PathSpecError(f"identity map needs m <= n, got m={self.m}, n={self.n}")
        elif self.map_kind is not None:
            raise PathSpecError(f"map_kind only applies to the Sierpinski product")

    def sierpinski_map(self) -> Optional[SierpinskiMap]:
        if self.kind is not ProductKind.SIERPINSKI:
            return None
        if self.map_kind == "constant":
            return SierpinskiMap.constant(self.m, 0)
        return SierpinskiMap.identity(self.m)


def _assemble(terms) -> BiPoly:
    """Sum (coeff, a, b) triples, ordering each exponent pair as min/max."""
    acc: dict[tuple[int, int], int] = {}
    for c, a, b in terms:
        k = (a, b) if a <= b else (b, a)
        acc[k] = acc.get(k, 0) + c
    return BiPoly(acc)


def _cartesian(m, n):
    def dpath_xy(k):  # D_{P_k}(xy)
        return BiPoly({(1, 1): 2, (2, 2): k - 2})

    def mpath(k):
        return BiPoly({(1, 2): 2, (2, 2): k - 3})

    return (dpath_xy(m) * mpath(n) + dpath_xy(n) * mpath(m)).canonical()


def _direct(m, n):
    return _assemble([
        (4, 1, 4),
        (4, 2, 2),
        (4 * (m + n - 6), 2, 4),
        (2 * (m - 3) * (n - 3), 4, 4),
    ])


def _strong(m, n):
    return _assemble([
        (8, 3, 5),
        (4, 3, 8),
        (2 * (m + n - 4), 5, 5),
        (6 * m + 6 * n - 32, 5, 8),
        (4 * m * n - 11 * m - 11 * n + 30, 8, 8),
    ])


def _lexicographic(m, n):
    return _assemble([
        (4, n + 1, n + 2),
        (2 * (m - 2), 2 * n + 1, 2 * n + 2),
        (2 * (n - 3), n + 2, n + 2),
        ((n - 3) * (m - 2), 2 * n + 2, 2 * n + 2),
        (8, n + 1, 2 * n + 1),
        (4 * (n - 2), n + 1, 2 * n + 2),
        (4 * (n - 2), n + 2, 2 * n + 1),
        (2 * (n - 2) ** 2, n + 2, 2 * n + 2),
        (4 * (m - 3), 2 * n + 1, 2 * n + 1),
        (2 * (m - 3) * (n - 2), 2 * n + 1, 2 * n + 2),
        (2 * (m - 3) * (n - 2), 2 * n + 2, 2 * n + 1),
        ((m - 3) * (n - 2) ** 2, 2 * n + 2, 2 * n + 2),
    ])


def _xor(m, n):
    A, B, C, D = m + n - 2, n + 2 * m - 4, m + 2 * n - 4, 2 * m + 2 * n - 8
    return _assemble([
        (8, A, B),
        (8, A, C),
        (4 * (m + n - 6), A, D),
        (4 * (m + n - 6), B, C),
        (2 * n * n - 12 * n + 20 + 4 * (m - 3) * (n - 3), B, D),
        (2 * m * m - 12 * m + 20 + 4 * (m - 3) * (n - 3), C, D),
        (4 * (m - 3), C, C),
        (4 * (n - 3), B, B),
        ((m - 3) * (n * n - 6 * n + 10) + (n - 3) * (m * m - 6 * m + 10), D, D),
    ])


def _or(m, n):
    A, B, C, D = m + n - 1, 2 * m + n - 2, m + 2 * n - 2, 2 * m + 2 * n - 4
    return _assemble([
        (8, A, B),
        (8, A, C),
        (4 * (m + n - 5), A, D),
        (4 * (m + n - 5), B, C),
        (4 * m * n - 12 * m + 2 * n * n - 20 * n + 44, B, D),
        (2 * m * m + 4 * m * n - 20 * m - 12 * n + 44, C, D),
        (4 * (n - 3), B, B),
        (4 * (m - 3), C, C),
        (m * m * n + m * n * n - 10 * m * n - 3 * m * m - 3 * n * n + 22 * m + 22 * n - 42, D, D),
    ])


def _sierpinski_constant(m, n):
    return _assemble([
        (m, 1, 2),
        (m * (n - 3) + 2, 2, 2),
        (m, 2, 3),
        (m - 3, 3, 3),
    ])


def _sierpinski_identity(m, n):
    if n == m:
        a = (2 * m - 6, 4, m * m - 7 * m + 14, 4 * m - 10, m - 3)
    elif n == m + 1:
        a = (2 * m - 4, 3, m * m - 6 * m + 10, 4 * m - 8, m - 2)
    else:
        a = (2 * m - 3, 2, m * n - 7 * m + 9, 4 * m - 7, m - 2)
    exps = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 3))
    return _assemble([(c, i, j) for c, (i, j) in zip(a, exps)])


_DISPLAYS = {
    ProductKind.CARTESIAN: _cartesian,
    ProductKind.DIRECT: _direct,
    ProductKind.STRONG: _strong,
    ProductKind.LEXICOGRAPHIC: _lexicographic,
    ProductKind.XOR: _xor,
    ProductKind.OR: _or,
}


def golden_mpoly(spec: PathProductSpec) -> BiPoly:
    if spec.kind is ProductKind.SIERPINSKI:
        if spec.map_kind == "constant":
            return _sierpinski_constant(spec.m, spec.n)
        return _sierpinski_identity(spec.m, spec.n)
    return _DISPLAYS[spec.kind](spec.m, spec.n)
