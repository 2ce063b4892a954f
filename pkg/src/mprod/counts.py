"""Degree-based counting data read straight off a concrete graph.

These are the brute-force routines: everything the product formulas are
checked against ultimately reduces to :func:`m_polynomial` on a built graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bipoly import BiPoly, UniPoly
from .graph import Graph, complement


def edge_type_counts(g: Graph) -> dict[tuple[int, int], int]:
    """m_{i,j}: edges keyed by endpoint degrees (i, j) with i <= j."""
    deg = g.degrees()
    counts: Counter = Counter()
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        counts[(a, b) if a <= b else (b, a)] += 1
    return dict(counts)


def vertex_degree_counts(g: Graph) -> dict[int, int]:
    """n_i: number of vertices of each degree."""
    return dict(Counter(g.degrees()))


def m_polynomial(g: Graph) -> BiPoly:
    return BiPoly(edge_type_counts(g))


def degree_polynomial(g: Graph) -> UniPoly:
    return UniPoly(vertex_degree_counts(g))


def nonadjacent_ordered_counts(g: Graph) -> dict[tuple[int, int], int]:
    """Ordered pairs (u, v), u == v allowed, with uv not an edge, by degree pair."""
    deg = g.degrees()
    counts: Counter = Counter()
    for u in range(g.n):
        nb = g.neighbors(u)
        du = deg[u]
        for v in range(g.n):
            if v not in nb:
                counts[(du, deg[v])] += 1
    return dict(counts)


def nonadjacent_via_complement(g: Graph) -> dict[tuple[int, int], int]:
    """Same table as :func:`nonadjacent_ordered_counts`, via edge types of the complement.

    A complement edge of degree type {n-1-i, n-1-j} yields two ordered pairs.
    When i != j only one of them has degrees (i, j) in that order, so the
    factor 2 applies on the diagonal only. The diagonal also picks up the n_i
    pairs (v, v).
    """
    top = g.n - 1
    comp = edge_type_counts(complement(g))
    n_i = vertex_degree_counts(g)
    out: dict[tuple[int, int], int] = {}
    for i in n_i:
        for j in n_i:
            a, b = top - i, top - j
            m = comp.get((a, b) if a <= b else (b, a), 0)
            val = 2 * m + n_i[i] if i == j else m
            if val:
                out[(i, j)] = val
    return out


@dataclass(frozen=True)
class DegreeTypeTable:
    unordered: dict[tuple[int, int], int]
    ordered_nonadjacent: dict[tuple[int, int], int]


def degree_type_table(g: Graph) -> DegreeTypeTable:
    return DegreeTypeTable(edge_type_counts(g), nonadjacent_ordered_counts(g))
