"""M-polynomials of graphs and of seven graph products on V(G) x V(H)."""

from .bipoly import BiPoly, UniPoly
from .counts import (
    degree_polynomial,
    m_polynomial,
    nonadjacent_ordered_counts,
    nonadjacent_via_complement,
)
from .formulas import formula_mpoly
from .graph import Graph, complement, parse_graph6, emit_graph6
from .products import ProductKind, SierpinskiMap, build_product, predicted_degree

__all__ = [
    "BiPoly",
    "UniPoly",
    "Graph",
    "ProductKind",
    "SierpinskiMap",
    "build_product",
    "complement",
    "degree_polynomial",
    "emit_graph6",
    "formula_mpoly",
    "m_polynomial",
    "nonadjacent_ordered_counts",
    "nonadjacent_via_complement",
    "parse_graph6",
    "predicted_degree",
]
