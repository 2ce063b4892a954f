"""Explicit construction of the seven products on V(G) x V(H).

Product vertex (g, h) is stored at index ``g * n_H + h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

from .graph import Graph


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    XOR = "xor"
    OR = "or"
    SIERPINSKI = "sierpinski"

    @classmethod
    def parse(cls, name: str | ProductKind) -> ProductKind:
        if isinstance(name, ProductKind):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            known = ", ".join(k.value for k in cls)
            raise ProductError(f"unknown product kind {name!r} (expected one of {known})") from None


COMMUTATIVE = (ProductKind.CARTESIAN, ProductKind.DIRECT, ProductKind.STRONG,
               ProductKind.XOR, ProductKind.OR)


class ProductError(ValueError):
    pass


@dataclass(frozen=True)
class SierpinskiMap:
    """Total map f: V(G) -> V(H); ``assignments[g]`` is the image of g."""

    assignments: tuple[int, ...]

    def __init__(self, assignments: Sequence[int]):
        object.__setattr__(self, "assignments", tuple(int(a) for a in assignments))

    def __getitem__(self, g: int) -> int:
        return self.assignments[g]

    def __len__(self) -> int:
        return len(self.assignments)

    def validate(self, g: Graph, h: Graph) -> None:
        if len(self.assignments) != g.n:
            raise ProductError(
                f"map has {len(self.assignments)} entries but G has {g.n} vertices")
        for v, img in enumerate(self.assignments):
            if not 0 <= img < h.n:
                raise ProductError(f"map sends vertex {v} to {img}, outside [0, {h.n})")

    @classmethod
    def constant(cls, n_g: int, target: int = 0) -> SierpinskiMap:
        return cls([target] * n_g)

    @classmethod
    def identity(cls, n_g: int) -> SierpinskiMap:
        return cls(range(n_g))

    @classmethod
    def parse(cls, text: str) -> SierpinskiMap:
        vals = []
        for lineno, ln in enumerate(text.splitlines(), start=1):
            ln = ln.split("#", 1)[0].strip()
            if not ln:
                continue
            try:
                vals.append(int(ln))
            except ValueError:
                raise ProductError(f"map line {lineno}: expected an integer, got {ln!r}") from None
        return cls(vals)

    @classmethod
    def read(cls, path: str | Path) -> SierpinskiMap:
        return cls.parse(Path(path).read_text())

    def dumps(self) -> str:
        return "".join(f"{a}\n" for a in self.assignments)


def _check_map(kind: ProductKind, g: Graph, h: Graph, f: Optional[SierpinskiMap]) -> None:
    if kind is ProductKind.SIERPINSKI:
        if f is None:
            raise ProductError("the Sierpinski product needs a map f: V(G) -> V(H)")
        f.validate(g, h)
    elif f is not None:
        raise ProductError(f"a map is only meaningful for the Sierpinski product, not {kind.value}")


def build_product(kind, g: Graph, h: Graph, f: Optional[SierpinskiMap] = None) -> Graph:
    kind = ProductKind.parse(kind)
    _check_map(kind, g, h, f)
    builder = _BUILDERS[kind]
    nbrs = builder(g, h, f)
    return Graph(g.n * h.n, [frozenset(s) for s in nbrs])


def _cartesian(g, h, f):
    nh = h.n
    nbrs = []
    for a in range(g.n):
        ga = g.neighbors(a)
        for b in range(h.n):
            s = {a * nh + b2 for b2 in h.neighbors(b)}
            s.update(a2 * nh + b for a2 in ga)
            nbrs.append(s)
    return nbrs


def _direct(g, h, f):
    nh = h.n
    return [{a2 * nh + b2 for a2 in g.neighbors(a) for b2 in h.neighbors(b)}
            for a in range(g.n) for b in range(h.n)]


def _strong(g, h, f):
    nh = h.n
    nbrs = []
    for a in range(g.n):
        ga = g.neighbors(a)
        for b in range(h.n):
            hb = h.neighbors(b)
            s = {a * nh + b2 for b2 in hb}
            s.update(a2 * nh + b for a2 in ga)
            s.update(a2 * nh + b2 for a2 in ga for b2 in hb)
            nbrs.append(s)
    return nbrs


def _lexicographic(g, h, f):
    nh = h.n
    nbrs = []
    for a in range(g.n):
        block = {a2 * nh + b2 for a2 in g.neighbors(a) for b2 in range(nh)}
        for b in range(nh):
            nbrs.append(block | {a * nh + b2 for b2 in h.neighbors(b)})
    return nbrs


def _boolean(g, h, rule):
    # dense products: test the coordinate relations for every pair
    nh = h.n
    total = g.n * nh
    nbrs = [set() for _ in range(total)]
    for u in range(total):
        a, b = divmod(u, nh)
        for v in range(u + 1, total):
            a2, b2 = divmod(v, nh)
            if rule(g.has_edge(a, a2), h.has_edge(b, b2)):
                nbrs[u].add(v)
                nbrs[v].add(u)
    return nbrs


def _xor(g, h, f):
    return _boolean(g, h, lambda eg, eh: eg != eh)


def _or(g, h, f):
    return _boolean(g, h, lambda eg, eh: eg or eh)


def _sierpinski(g, h, f):
    nh = h.n
    nbrs = [set() for _ in range(g.n * nh)]
    for a in range(g.n):
        for b, b2 in h.edges():
            nbrs[a * nh + b].add(a * nh + b2)
            nbrs[a * nh + b2].add(a * nh + b)
    for a, a2 in g.edges():
        u, v = a * nh + f[a2], a2 * nh + f[a]
        # connecting edges join different H-copies, so never an inner edge
        assert v not in nbrs[u]
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


_BUILDERS = {
    ProductKind.CARTESIAN: _cartesian,
    ProductKind.DIRECT: _direct,
    ProductKind.STRONG: _strong,
    ProductKind.LEXICOGRAPHIC: _lexicographic,
    ProductKind.XOR: _xor,
    ProductKind.OR: _or,
    ProductKind.SIERPINSKI: _sierpinski,
}


def connecting_count(g: Graph, f: SierpinskiMap, gv: int, hv: int) -> int:
    """c(g, h): neighbours g' of g with f(g') = h."""
    return sum(1 for g2 in g.neighbors(gv) if f[g2] == hv)


def predicted_degree(kind, g: Graph, h: Graph, f: Optional[SierpinskiMap],
                     gv: int, hv: int) -> int:
    """Degree of (gv, hv) in the product, from factor degrees alone."""
    kind = ProductKind.parse(kind)
    _check_map(kind, g, h, f)
    if not 0 <= gv < g.n:
        raise ProductError(f"vertex {gv} not in G (n={g.n})")
    if not 0 <= hv < h.n:
        raise ProductError(f"vertex {hv} not in H (n={h.n})")
    i, j = g.degree(gv), h.degree(hv)
    if kind is ProductKind.CARTESIAN:
        return i + j
    if kind is ProductKind.DIRECT:
        return i * j
    if kind is ProductKind.STRONG:
        return i + j + i * j
    if kind is ProductKind.LEXICOGRAPHIC:
        return h.n * i + j
    if kind is ProductKind.XOR:
        return h.n * i + g.n * j - 2 * i * j
    if kind is ProductKind.OR:
        return h.n * i + g.n * j - i * j
    return j + connecting_count(g, f, gv, hv)


def predicted_edge_count(kind, g: Graph, h: Graph, f: Optional[SierpinskiMap] = None) -> int:
    """Closed-form |E| of the product."""
    kind = ProductKind.parse(kind)
    eg, eh, ng, nh = g.num_edges, h.num_edges, g.n, h.n
    if kind is ProductKind.CARTESIAN:
        return eg * nh + eh * ng
    if kind is ProductKind.DIRECT:
        return 2 * eg * eh
    if kind is ProductKind.STRONG:
        return eg * nh + eh * ng + 2 * eg * eh
    if kind is ProductKind.LEXICOGRAPHIC:
        return eg * nh * nh + ng * eh
    if kind is ProductKind.SIERPINSKI:
        return ng * eh + eg
    total = sum(predicted_degree(kind, g, h, None, a, b) for a in range(ng) for b in range(nh))
    return total // 2
