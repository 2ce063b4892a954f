"""Closed-form M-polynomials of graph products.

Every routine here works from factor-level data only: vertex counts, degree
counts n_i, edge-type counts m_{i,j}, ordered non-adjacency counts and the
factor M/D polynomials. No product graph is ever built. The Sierpinski
product is the exception in spirit: its formula sums over actual factor
vertices and edges because the degrees depend on the map f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .bipoly import BiPoly, UniPoly
from .counts import (
    edge_type_counts,
    nonadjacent_ordered_counts,
    nonadjacent_via_complement,
    vertex_degree_counts,
)
from .graph import Graph
from .products import ProductKind, SierpinskiMap, _check_map, connecting_count


class FormulaMismatch(AssertionError):
    """Two derivations of the same polynomial disagreed."""


@dataclass(frozen=True)
class Factor:
    """Everything the formulas read from one factor."""

    n: int
    n_deg: dict[int, int]                 # n_i
    m_type: dict[tuple[int, int], int]    # m_{i,j}, i <= j

    @classmethod
    def of(cls, g: Graph) -> Factor:
        return cls(g.n, vertex_degree_counts(g), edge_type_counts(g))

    @property
    def mpoly(self) -> BiPoly:
        return BiPoly(self.m_type)

    @property
    def dpoly(self) -> UniPoly:
        return UniPoly(self.n_deg)


class _Acc:
    """Accumulates c * x^min(a,b) y^max(a,b)."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms: dict[tuple[int, int], int] = {}

    def add(self, c: int, a: int, b: int) -> None:
        if not c:
            return
        k = (a, b) if a <= b else (b, a)
        self.terms[k] = self.terms.get(k, 0) + c

    def poly(self) -> BiPoly:
        return BiPoly(self.terms)


def _mono(c: int, a: int, b: int) -> BiPoly:
    return BiPoly({(a, b): c})


# --- Cartesian -------------------------------------------------------------


def m_cartesian(g: Graph, h: Graph) -> BiPoly:
    G, H = Factor.of(g), Factor.of(h)
    return (G.dpoly.lift_diagonal(1) * H.mpoly + H.dpoly.lift_diagonal(1) * G.mpoly).canonical()


def m_cartesian_via_strong(g: Graph, h: Graph) -> BiPoly:
    """Layer sums with additive degrees; the strong-product sums minus the cross class."""
    G, H = Factor.of(g), Factor.of(h)
    acc = _Acc()
    for j, nj in H.n_deg.items():
        for (i1, i2), m in G.m_type.items():
            acc.add(nj * m, i1 + j, i2 + j)
    for i, ni in G.n_deg.items():
        for (j1, j2), m in H.m_type.items():
            acc.add(ni * m, j1 + i, j2 + i)
    return acc.poly()


# --- direct ----------------------------------------------------------------


def m_direct(g: Graph, h: Graph) -> BiPoly:
    G, H = Factor.of(g), Factor.of(h)
    MH = H.mpoly
    total = BiPoly()
    for (i1, i2), mg in G.m_type.items():
        acc = _Acc()
        for (j1, j2), mh in H.m_type.items():
            acc.add(mh, i1 * j2, i2 * j1)
        total = total + mg * (MH.substitute_powers(i1, i2) + acc.poly())
    return total.canonical()


def m_direct_sum(g: Graph, h: Graph) -> BiPoly:
    """The plain double sum over edge-type pairs, both pairings with min/max."""
    G, H = Factor.of(g), Factor.of(h)
    acc = _Acc()
    for (i1, i2), mg in G.m_type.items():
        for (j1, j2), mh in H.m_type.items():
            acc.add(mg * mh, i1 * j1, i2 * j2)
            acc.add(mg * mh, i1 * j2, i2 * j1)
    return acc.poly()


# --- strong ----------------------------------------------------------------


class StrongParts(NamedTuple):
    m_g: BiPoly
    m_h: BiPoly
    m_cross: BiPoly


def _strong_compact(G: Factor, H: Factor) -> StrongParts:
    MG, MH = G.mpoly, H.mpoly
    m_g = BiPoly()
    for j, nj in H.n_deg.items():
        m_g = m_g + _mono(nj, j, j) * MG.substitute_powers(1 + j, 1 + j)
    m_h = BiPoly()
    for i, ni in G.n_deg.items():
        m_h = m_h + _mono(ni, i, i) * MH.substitute_powers(1 + i, 1 + i)
    m_cross = BiPoly()
    for (i1, i2), mg in G.m_type.items():
        acc = _Acc()
        for (j1, j2), mh in H.m_type.items():
            acc.add(mh, i1 + j2 + i1 * j2, i2 + j1 + i2 * j1)
        inner = _mono(1, i1, i2) * MH.substitute_powers(1 + i1, 1 + i2) + acc.poly()
        m_cross = m_cross + mg * inner
    return StrongParts(m_g.canonical(), m_h.canonical(), m_cross.canonical())


def _strong_raw(G: Factor, H: Factor) -> StrongParts:
    def sdeg(i, j):
        return i + j + i * j

    pg, ph, px = _Acc(), _Acc(), _Acc()
    for j, nj in H.n_deg.items():
        for (i1, i2), m in G.m_type.items():
            pg.add(nj * m, sdeg(i1, j), sdeg(i2, j))
    for i, ni in G.n_deg.items():
        for (j1, j2), m in H.m_type.items():
            ph.add(ni * m, sdeg(i, j1), sdeg(i, j2))
    for (i1, i2), mg in G.m_type.items():
        for (j1, j2), mh in H.m_type.items():
            px.add(mg * mh, sdeg(i1, j1), sdeg(i2, j2))
            px.add(mg * mh, sdeg(i1, j2), sdeg(i2, j1))
    return StrongParts(pg.poly(), ph.poly(), px.poly())


def m_strong(g: Graph, h: Graph, verify: bool = False) -> tuple[BiPoly, StrongParts]:
    """Return the total and its (G-layer, H-layer, cross) parts.

    With ``verify`` the per-class sums are also evaluated term by term and
    compared with the compact rewrites.
    """
    G, H = Factor.of(g), Factor.of(h)
    parts = _strong_compact(G, H)
    if verify:
        raw = _strong_raw(G, H)
        for name, a, b in zip(StrongParts._fields, parts, raw):
            if a != b:
                raise FormulaMismatch(f"strong {name}: compact {a} != raw {b}")
    return (parts.m_g + parts.m_h + parts.m_cross).canonical(), parts


# --- lexicographic ---------------------------------------------------------


def m_lexicographic(g: Graph, h: Graph) -> BiPoly:
    G, H = Factor.of(g), Factor.of(h)
    nh = H.n
    first = H.mpoly * G.dpoly.lift_diagonal(nh)
    second = G.mpoly.substitute_powers(nh, nh) * H.dpoly.split("x") * H.dpoly.split("y")
    return (first + second).canonical()


def m_lexicographic_sum(g: Graph, h: Graph) -> BiPoly:
    """Double-sum form: H-layer edges plus every (g1 g2 edge, h1, h2) pair.

    The second sum runs over all ordered degree pairs (j1, j2) of H, since
    h1 and h2 are arbitrary vertices.
    """
    G, H = Factor.of(g), Factor.of(h)
    nh = H.n
    acc = _Acc()
    for i, ni in G.n_deg.items():
        for (j1, j2), m in H.m_type.items():
            acc.add(ni * m, j1 + i * nh, j2 + i * nh)
    for (i1, i2), m in G.m_type.items():
        for j1, n1 in H.n_deg.items():
            for j2, n2 in H.n_deg.items():
                acc.add(m * n1 * n2, j1 + i1 * nh, j2 + i2 * nh)
    return acc.poly()


# --- symmetric difference and disjunction ---------------------------------


def delta_xor(i: int, j: int, n_g: int, n_h: int) -> int:
    return i * n_h + j * n_g - 2 * i * j


def delta_or(i: int, j: int, n_g: int, n_h: int) -> int:
    return i * n_h + j * n_g - i * j


def m_xor(g: Graph, h: Graph, nonadjacent: str = "direct") -> BiPoly:
    """``nonadjacent`` picks how the ordered non-adjacency tables are obtained:
    ``"direct"`` counts vertex pairs, ``"complement"`` reads the complement's
    edge types."""
    if nonadjacent == "direct":
        hat = nonadjacent_ordered_counts
    elif nonadjacent == "complement":
        hat = nonadjacent_via_complement
    else:
        raise ValueError(f"nonadjacent must be 'direct' or 'complement', got {nonadjacent!r}")
    G, H = Factor.of(g), Factor.of(h)
    hat_g, hat_h = hat(g), hat(h)
    ng, nh = G.n, H.n

    def d(i, j):
        return delta_xor(i, j, ng, nh)

    acc = _Acc()
    for (i, i2), mg in G.m_type.items():
        for (j, j2), mh in hat_h.items():
            acc.add(mg * mh, d(i, j), d(i2, j2))
    for (j, j2), mh in H.m_type.items():
        for (i, i2), mg in hat_g.items():
            acc.add(mh * mg, d(i, j), d(i2, j2))
    return acc.poly()


def m_or(g: Graph, h: Graph) -> BiPoly:
    G, H = Factor.of(g), Factor.of(h)
    ng, nh = G.n, H.n

    def d(i, j):
        return delta_or(i, j, ng, nh)

    union = _Acc()
    for (i, i2), mg in G.m_type.items():
        for j, nj in H.n_deg.items():
            for j2, nj2 in H.n_deg.items():
                union.add(mg * nj * nj2, d(i, j), d(i2, j2))
    for (j, j2), mh in H.m_type.items():
        for i, ni in G.n_deg.items():
            for i2, ni2 in G.n_deg.items():
                union.add(mh * ni * ni2, d(i, j), d(i2, j2))
    both = _Acc()
    for (i, i2), mg in G.m_type.items():
        for (j, j2), mh in H.m_type.items():
            both.add(mg * mh, d(i, j), d(i2, j2))
            both.add(mg * mh, d(i, j2), d(i2, j))
    return union.poly() - both.poly()


# --- Sierpinski ------------------------------------------------------------


class SierpinskiParts(NamedTuple):
    inner: BiPoly
    connecting: BiPoly


def m_sierpinski(g: Graph, h: Graph, f: SierpinskiMap) -> tuple[BiPoly, SierpinskiParts]:
    _check_map(ProductKind.SIERPINSKI, g, h, f)
    hdeg = h.degrees()

    def d(gv, hv):
        return hdeg[hv] + connecting_count(g, f, gv, hv)

    inner, conn = _Acc(), _Acc()
    h_edges = list(h.edges())
    for gv in range(g.n):
        for a, b in h_edges:
            inner.add(1, d(gv, a), d(gv, b))
    for a, b in g.edges():
        conn.add(1, d(a, f[b]), d(b, f[a]))
    parts = SierpinskiParts(inner.poly(), conn.poly())
    return parts.inner + parts.connecting, parts


# --- dispatch --------------------------------------------------------------


def formula_mpoly(kind, g: Graph, h: Graph, f: Optional[SierpinskiMap] = None) -> BiPoly:
    kind = ProductKind.parse(kind)
    _check_map(kind, g, h, f)
    if kind is ProductKind.CARTESIAN:
        return m_cartesian(g, h)
    if kind is ProductKind.DIRECT:
        return m_direct(g, h)
    if kind is ProductKind.STRONG:
        return m_strong(g, h)[0]
    if kind is ProductKind.LEXICOGRAPHIC:
        return m_lexicographic(g, h)
    if kind is ProductKind.XOR:
        return m_xor(g, h)
    if kind is ProductKind.OR:
        return m_or(g, h)
    return m_sierpinski(g, h, f)[0]
