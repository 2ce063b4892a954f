"""Deterministic test corpus of small factor graphs and factor pairs."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, disjoint_union, empty, erdos_renyi, path, cycle, complete, star
from .products import SierpinskiMap


def factor_graphs() -> dict[str, Graph]:
    gs: dict[str, Graph] = {}
    for n in range(3, 11):
        gs[f"P{n}"] = path(n)
        gs[f"C{n}"] = cycle(n)
        gs[f"K{n}"] = complete(n)
        gs[f"S{n}"] = star(n + 1)  # K_{1,n}
        gs[f"ER{n}"] = erdos_renyi(n, 0.4, seed=1000 + n)
    # isolated vertices
    gs["P3+K1"] = disjoint_union(path(3), empty(1))
    gs["E3"] = empty(3)
    gs["K1"] = empty(1)
    gs["P2"] = path(2)
    return gs


EXTRA = ("P3+K1", "E3", "K1", "P2")


def factor_pairs(count: int = 60, max_order: int = 11, seed: int = 7,
                 families_only: bool = False) -> list[tuple[str, str]]:
    """Named pairs (G, H) with both orders <= ``max_order``.

    A fixed set of hand-picked pairs comes first, then seeded random draws.
    ``families_only`` drops the small edge-case graphs in ``EXTRA`` and keeps
    the paths, cycles, complete graphs, stars and random graphs.
    """
    gs = factor_graphs()
    names = sorted(k for k, g in gs.items()
                   if g.n <= max_order and not (families_only and k in EXTRA))
    fixed = [("P3", "P3"), ("P3", "P4"), ("C4", "C4"), ("K4", "P3"), ("S3", "C5"),
             ("ER6", "P4"), ("P3+K1", "C4"), ("E3", "P3"), ("K1", "C5"), ("P2", "P2")]
    rng = random.Random(seed)
    if families_only:
        fixed = [p for p in fixed if p[0] not in EXTRA and p[1] not in EXTRA]
    out = list(fixed)
    seen = set(out)
    pool = list(itertools.product(names, names))
    rng.shuffle(pool)
    for pair in pool:
        if len(out) >= count:
            break
        if pair not in seen:
            seen.add(pair)
            out.append(pair)
    return out


def sierpinski_maps(g: Graph, h: Graph, seed: int = 0) -> dict[str, SierpinskiMap]:
    rng = random.Random(seed * 7919 + g.n * 31 + h.n)
    return {
        "constant": SierpinskiMap.constant(g.n, 0),
        "identity": SierpinskiMap([v % h.n for v in range(g.n)]),
        "random": SierpinskiMap([rng.randrange(h.n) for _ in range(g.n)]),
    }
