"""Degree-based topological indices from the M-polynomial.

Each index is a fixed combination of operator chains applied to M(G; x, y)
and evaluated at x = y = 1:

    Dx, Dy   multiply a term by its x (resp. y) exponent
    Sx, Sy   divide a term by its x (resp. y) exponent
    J        substitute y := x
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .bipoly import BiPoly
from .graph import Graph


class OperatorError(ValueError):
    pass


class IndexKind(str, Enum):
    FIRST_ZAGREB = "first_zagreb"
    SECOND_ZAGREB = "second_zagreb"
    MODIFIED_SECOND_ZAGREB = "modified_second_zagreb"
    FORGOTTEN = "forgotten"
    SYMMETRIC_DIVISION = "symmetric_division"
    HARMONIC = "harmonic"
    INVERSE_SUM_INDEGREE = "inverse_sum_indegree"


def apply_operator(p: BiPoly, op: str) -> BiPoly:
    out: dict[tuple[int, int], object] = {}
    for (a, b), c in p.items():
        if op == "Dx":
            key, val = (a, b), c * a
        elif op == "Dy":
            key, val = (a, b), c * b
        elif op == "Sx":
            if a == 0:
                raise OperatorError(f"non-integrable term x^{a} y^{b} under Sx")
            key, val = (a, b), Fraction(c, a)
        elif op == "Sy":
            if b == 0:
                raise OperatorError(f"non-integrable term x^{a} y^{b} under Sy")
            key, val = (a, b), Fraction(c, b)
        elif op == "J":
            key, val = (a + b, 0), c
        else:
            raise OperatorError(f"unknown operator {op!r}")
        out[key] = out.get(key, 0) + val
    return BiPoly(out)


# kind -> (scale, chains); each chain lists operators in application order
OPERATOR_TABLE: dict[IndexKind, tuple[int, tuple[tuple[str, ...], ...]]] = {
    IndexKind.FIRST_ZAGREB: (1, (("Dx",), ("Dy",))),
    IndexKind.SECOND_ZAGREB: (1, (("Dy", "Dx"),)),
    IndexKind.MODIFIED_SECOND_ZAGREB: (1, (("Sy", "Sx"),)),
    IndexKind.FORGOTTEN: (1, (("Dx", "Dx"), ("Dy", "Dy"))),
    IndexKind.SYMMETRIC_DIVISION: (1, (("Sy", "Dx"), ("Dy", "Sx"))),
    IndexKind.HARMONIC: (2, (("J", "Sx"),)),
    IndexKind.INVERSE_SUM_INDEGREE: (1, (("Dy", "Dx", "J", "Sx"),)),
}


def index_value(p: BiPoly, kind) -> Fraction:
    kind = IndexKind(kind)
    scale, chains = OPERATOR_TABLE[kind]
    total = Fraction(0)
    for chain in chains:
        q = p
        for op in chain:
            q = apply_operator(q, op)
        total += q.evaluate(1, 1)
    return Fraction(scale * total)


def index_direct(g: Graph, kind) -> Fraction:
    """The same indices summed directly over vertex and edge degrees."""
    kind = IndexKind(kind)
    deg = g.degrees()
    F = Fraction
    if kind is IndexKind.FIRST_ZAGREB:
        return F(sum(d * d for d in deg))
    pairs = [(deg[u], deg[v]) for u, v in g.edges()]
    if kind is IndexKind.SECOND_ZAGREB:
        return F(sum(a * b for a, b in pairs))
    if kind is IndexKind.MODIFIED_SECOND_ZAGREB:
        return sum((F(1, a * b) for a, b in pairs), F(0))
    if kind is IndexKind.FORGOTTEN:
        return F(sum(a * a + b * b for a, b in pairs))
    if kind is IndexKind.SYMMETRIC_DIVISION:
        return sum((F(a, b) + F(b, a) for a, b in pairs), F(0))
    if kind is IndexKind.HARMONIC:
        return sum((F(2, a + b) for a, b in pairs), F(0))
    return sum((F(a * b, a + b) for a, b in pairs), F(0))
