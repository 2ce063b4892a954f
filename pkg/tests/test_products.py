import pytest

from mprod.corpus import factor_graphs, factor_pairs, sierpinski_maps
from mprod.counts import m_polynomial
from mprod.graph import generator
from mprod.products import (
    COMMUTATIVE,
    ProductError,
    ProductKind,
    SierpinskiMap,
    build_product,
    predicted_degree,
    predicted_edge_count,
)

P2, P3 = generator("path", 2), generator("path", 3)
GS = factor_graphs()
PAIRS = factor_pairs(count=20)


def test_cartesian_p2_p2_is_c4():
    g = build_product("cartesian", P2, P2)
    assert g.degrees() == [2, 2, 2, 2]
    assert g.num_edges == 4


def test_direct_k2_k2():
    g = build_product("direct", P2, P2)
    assert g.degrees() == [1, 1, 1, 1]
    assert sorted(g.edges()) == [(0, 3), (1, 2)]


def test_sierpinski_constant_p3():
    f = SierpinskiMap.constant(3, 0)
    g = build_product("sierpinski", P3, P3, f)
    assert g.num_edges == 8


def test_vertex_indexing():
    # (g, h) -> g * n_H + h; in P3 [] P2 vertex (1, 0) = 2 neighbours (0,0)=0, (2,0)=4, (1,1)=3
    g = build_product("cartesian", P3, P2)
    assert g.neighbors(2) == frozenset({0, 3, 4})


def test_map_required_and_forbidden():
    with pytest.raises(ProductError, match="needs a map"):
        build_product("sierpinski", P3, P3)
    with pytest.raises(ProductError, match="only meaningful"):
        build_product("cartesian", P3, P3, SierpinskiMap.constant(3))
    with pytest.raises(ProductError, match="outside"):
        build_product("sierpinski", P3, P3, SierpinskiMap([0, 1, 3]))
    with pytest.raises(ProductError, match="entries"):
        build_product("sierpinski", P3, P3, SierpinskiMap([0, 1]))
    with pytest.raises(ProductError, match="unknown product"):
        build_product("join", P3, P3)


def test_predicted_degree_examples():
    c4 = generator("cycle", 4)
    assert predicted_degree("strong", c4, c4, None, 0, 0) == 8
    # xor on P3 x P3, vertex with degrees (1, 2)
    assert predicted_degree("xor", P3, P3, None, 0, 1) == 5
    assert build_product("xor", P3, P3).degree(0 * 3 + 1) == 5
    f = SierpinskiMap.constant(3, 0)
    assert predicted_degree("sierpinski", P3, P3, f, 1, 0) == 3
    with pytest.raises(ProductError):
        predicted_degree("strong", P3, P3, None, 3, 0)


def test_map_file_roundtrip(tmp_path):
    f = SierpinskiMap([2, 0, 1])
    p = tmp_path / "f.map"
    p.write_text(f.dumps())
    assert SierpinskiMap.read(p) == f
    with pytest.raises(ProductError):
        SierpinskiMap.parse("0\nx\n")


def _cases():
    for a, b in PAIRS:
        for kind in ProductKind:
            if kind is ProductKind.SIERPINSKI:
                for mname, f in sierpinski_maps(GS[a], GS[b]).items():
                    yield pytest.param(kind, a, b, f, id=f"{kind.value}-{a}-{b}-{mname}")
            else:
                yield pytest.param(kind, a, b, None, id=f"{kind.value}-{a}-{b}")


@pytest.mark.parametrize("kind,a,b,f", list(_cases()))
def test_degrees_and_edge_counts(kind, a, b, f):
    g, h = GS[a], GS[b]
    prod = build_product(kind, g, h, f)
    assert prod.n == g.n * h.n
    for gv in range(g.n):
        for hv in range(h.n):
            assert prod.degree(gv * h.n + hv) == predicted_degree(kind, g, h, f, gv, hv)
    assert prod.num_edges == predicted_edge_count(kind, g, h, f)


@pytest.mark.parametrize("a,b", PAIRS)
def test_commutative_products(a, b):
    g, h = GS[a], GS[b]
    for kind in COMMUTATIVE:
        assert m_polynomial(build_product(kind, g, h)) == m_polynomial(build_product(kind, h, g))
