"""Command-line interface: ``mprod <command> ...``.

Exit codes: 0 success, 1 formula/brute-force mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .bipoly import BiPoly
from .counts import degree_polynomial, m_polynomial
from .formulas import formula_mpoly
from .graph import GENERATORS, Graph, GraphError, emit_edge_list, generator, parse_edge_list, parse_graph6
from .indices import IndexKind, index_value
from .paths import PathProductSpec, PathSpecError, golden_mpoly
from .products import ProductError, ProductKind, SierpinskiMap, build_product

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load_graph(source: str, fmt: str = "edge-list") -> Graph:
    """Read a graph file; ``family:n`` (e.g. ``path:200``) builds a generator graph
    when no file of that name exists."""
    p = Path(source)
    if not p.exists() and ":" in source:
        family, _, order = source.partition(":")
        if family in GENERATORS and order.isdigit():
            return generator(family, int(order))
    try:
        text = p.read_text()
    except OSError as e:
        raise InputError(f"cannot read {source}: {e.strerror or e}") from None
    if fmt == "graph6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    return parse_edge_list(text)


def load_map(source: Optional[str]) -> Optional[SierpinskiMap]:
    if source is None:
        return None
    try:
        return SierpinskiMap.read(source)
    except OSError as e:
        raise InputError(f"cannot read map {source}: {e.strerror or e}") from None


def render(p: BiPoly, emit: str) -> str:
    if emit == "json":
        return p.to_json()
    if emit == "latex":
        return p.to_latex()
    return p.to_text()


def diff_lines(a: BiPoly, b: BiPoly, left: str = "formula", right: str = "direct") -> list[str]:
    keys = sorted(set(a.terms) | set(b.terms))
    out = []
    for i, j in keys:
        ca, cb = a.coeff(i, j), b.coeff(i, j)
        if ca != cb:
            out.append(f"  x^{i} y^{j}: {left}={ca} {right}={cb}")
    return out


# --- commands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    g = load_graph(args.input, args.format)
    M, D = m_polynomial(g), degree_polynomial(g)
    if args.emit == "json":
        print(json.dumps({"M": M.to_json_obj(), "D": D.to_json_obj()}))
    elif args.emit == "latex":
        print(f"M(G;x,y) = {M.to_latex()}")
        print(f"D_G(t) = {D.to_latex()}")
    else:
        print(f"M = {M.to_text()}")
        print(f"D = {D.to_text()}")
    return EXIT_OK


def cmd_product(args) -> int:
    kind = ProductKind.parse(args.kind)
    g, h = load_graph(args.left, args.format), load_graph(args.right, args.format)
    f = load_map(args.map)
    built = None
    if args.engine in ("direct", "both") or args.out_edges:
        built = build_product(kind, g, h, f)
    if args.out_edges:
        Path(args.out_edges).write_text(emit_edge_list(built))
    if args.engine == "formula":
        print(render(formula_mpoly(kind, g, h, f), args.emit))
        return EXIT_OK
    if args.engine == "direct":
        print(render(m_polynomial(built), args.emit))
        return EXIT_OK
    fp = formula_mpoly(kind, g, h, f)
    dp = m_polynomial(built)
    print(f"formula: {render(fp, args.emit)}")
    print(f"direct: {render(dp, args.emit)}")
    if fp == dp:
        print("MATCH")
        return EXIT_OK
    print("MISMATCH")
    print("\n".join(diff_lines(fp, dp)))
    return EXIT_MISMATCH


def _parse_kinds(spec: str) -> list[ProductKind]:
    if spec == "all":
        return list(ProductKind)
    return [ProductKind.parse(k.strip()) for k in spec.split(",") if k.strip()]


def cmd_verify(args) -> int:
    kinds = _parse_kinds(args.kinds)
    g, h = load_graph(args.left, args.format), load_graph(args.right, args.format)
    f = load_map(args.map)
    if ProductKind.SIERPINSKI in kinds and f is None:
        raise InputError("verifying the Sierpinski product needs --map")
    status = EXIT_OK
    for kind in kinds:
        fk = f if kind is ProductKind.SIERPINSKI else None
        fp = formula_mpoly(kind, g, h, fk)
        dp = m_polynomial(build_product(kind, g, h, fk))
        if fp == dp:
            print(f"{kind.value}: MATCH")
        else:
            status = EXIT_MISMATCH
            print(f"{kind.value}: MISMATCH")
            print("\n".join(diff_lines(fp, dp)))
    return status


def _fmt_fraction(v) -> str:
    return f"{v.numerator}/{v.denominator}"


def cmd_indices(args) -> int:
    g = load_graph(args.input, args.format)
    M = m_polynomial(g)
    kinds = list(IndexKind) if args.kind == "all" else [IndexKind(args.kind)]
    for kind in kinds:
        v = index_value(M, kind)
        print(f"{kind.value} = {_fmt_fraction(v)} ({float(v):.6f})")
    return EXIT_OK


def cmd_golden(args) -> int:
    spec = PathProductSpec(args.kind, args.m, args.n, args.map)
    gold = golden_mpoly(spec)
    print(gold.to_text())
    if not args.check:
        return EXIT_OK
    from .graph import path
    g, h, f = path(spec.m), path(spec.n), spec.sierpinski_map()
    fp = formula_mpoly(spec.kind, g, h, f)
    dp = m_polynomial(build_product(spec.kind, g, h, f))
    ok = gold == fp == dp
    print(f"formula: {'MATCH' if gold == fp else 'MISMATCH'}")
    print(f"direct: {'MATCH' if gold == dp else 'MISMATCH'}")
    if not ok:
        print("\n".join(diff_lines(gold, dp, "golden", "direct")))
    return EXIT_OK if ok else EXIT_MISMATCH


BENCH_HEADER = "kind,nG,nH,edges,formula_ms,direct_ms,ratio"


def bench(kind, g: Graph, h: Graph, f=None, repeat: int = 3) -> dict:
    """Best-of-``repeat`` wall times for the formula route and the direct route."""
    kind = ProductKind.parse(kind)
    t_formula = t_direct = float("inf")
    fp = dp = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        fp = formula_mpoly(kind, g, h, f)
        t_formula = min(t_formula, time.perf_counter() - t0)
        t0 = time.perf_counter()
        dp = m_polynomial(build_product(kind, g, h, f))
        t_direct = min(t_direct, time.perf_counter() - t0)
    return {
        "kind": kind.value,
        "nG": g.n,
        "nH": h.n,
        "edges": dp.evaluate(1, 1),
        "formula_ms": t_formula * 1e3,
        "direct_ms": t_direct * 1e3,
        "ratio": t_direct / t_formula if t_formula > 0 else float("inf"),
        "match": fp == dp,
    }


def cmd_bench(args) -> int:
    g, h = load_graph(args.left, args.format), load_graph(args.right, args.format)
    row = bench(args.kind, g, h, load_map(args.map), args.repeat)
    print(BENCH_HEADER)
    print("{kind},{nG},{nH},{edges},{formula_ms:.3f},{direct_ms:.3f},{ratio:.2f}".format(**row))
    if not row["match"]:
        print("formula and direct routes disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    kinds = [k.value for k in ProductKind]
    parser = argparse.ArgumentParser(
        prog="mprod", description="M-polynomials of graphs and graph products")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_format(p):
        p.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")

    def emit(p):
        p.add_argument("--emit", choices=["text", "json", "latex"], default="text")

    p = sub.add_parser("compute", help="M-polynomial and degree polynomial of a graph")
    p.add_argument("--input", required=True)
    graph_format(p)
    emit(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("product", help="M-polynomial of a product of two graphs")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--map")
    p.add_argument("--engine", choices=["formula", "direct", "both"], default="formula")
    p.add_argument("--out-edges")
    graph_format(p)
    emit(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="compare formula and brute force for several products")
    p.add_argument("--kinds", default="all")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--map")
    graph_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("indices", help="degree-based topological indices")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", default="all", choices=["all"] + [k.value for k in IndexKind])
    graph_format(p)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("golden", help="closed-form M-polynomial of a product of two paths")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--map", choices=["constant", "identity"])
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("bench", help="time the formula route against the direct route")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--map")
    p.add_argument("--repeat", type=int, default=3)
    graph_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, ProductError, PathSpecError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
