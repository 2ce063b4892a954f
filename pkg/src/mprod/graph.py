"""Finite simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph.

    Adjacency is kept as one frozenset of neighbours per vertex, which gives
    O(1) membership tests and O(deg) neighbour iteration.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[frozenset[int]]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        self.n = n
        self._adj = tuple(adj)
        self._m = sum(len(a) for a in self._adj) // 2

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [frozenset(s) for s in nbrs])

    # --- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, nb in enumerate(self._adj):
            for v in sorted(nb):
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    return Graph(g.n, [full - g.neighbors(v) - {v} for v in range(g.n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = [g.neighbors(v) for v in range(g.n)]
    adj += [frozenset(u + shift for u in h.neighbors(v)) for v in range(h.n)]
    return Graph(g.n + h.n, adj)


# --- generators ----------------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star of order n: centre 0 joined to n-1 leaves (K_{1,n-1})."""
    return Graph.from_edge_list(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph.from_edge_list(n, [])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edge_list(n, [e for e in pairs if rng.random() < p])


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "empty": empty,
}


def generator(kind: str, n: int) -> Graph:
    try:
        make = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph family {kind!r}") from None
    return make(n)


# --- text formats --------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` lines (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("edge list is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"edge line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"edge line {lineno}: non-integer vertex in {ln!r}") from None
    return Graph.from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_bits(g: Graph) -> Iterator[int]:
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, g.n):
        for i in range(j):
            yield 1 if g.has_edge(i, j) else 0


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = list(_g6_bits(g))
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; errors report the offending byte offset."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphError(f"graph6: invalid byte {c!r} at offset {pos}")
    if not data:
        raise GraphError("graph6: empty string at offset 0")

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphError(f"graph6: truncated 8-byte size header at offset {len(data)}")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise GraphError(f"graph6: truncated 4-byte size header at offset {len(data)}")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
    if n < 1:
        raise GraphError("graph6: graph must have at least one vertex (offset 0)")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - pos
    if have != need:
        where = len(data) if have < need else pos + need
        raise GraphError(
            f"graph6: expected {need} body bytes for n={n}, found {have} (offset {where})"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)
