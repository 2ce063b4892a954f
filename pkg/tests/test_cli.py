import json
import subprocess
import sys

import pytest

from mprod.cli import BENCH_HEADER, main
from mprod.graph import emit_edge_list, emit_graph6, generator, parse_edge_list


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "p3": write("p3.el", emit_edge_list(generator("path", 3))),
        "p4": write("p4.el", emit_edge_list(generator("path", 4))),
        "p4g6": write("p4.g6", emit_graph6(generator("path", 4)) + "\n"),
        "idmap": write("id.map", "0\n1\n2\n"),
        "badmap": write("bad.map", "0\n1\n9\n"),
        "out": str(tmp_path / "out.el"),
        "missing": str(tmp_path / "nope.el"),
    }


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(files, capsys):
    code, out, _ = run(["compute", "--input", files["p4"]], capsys)
    assert code == 0
    assert out == "M = 2 x y^2 + x^2 y^2\nD = 2 t + 2 t^2\n"


def test_compute_graph6_json(files, capsys):
    code, out, _ = run(["compute", "--input", files["p4g6"], "--format", "graph6", "--emit", "json"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["M"] == {"terms": [{"i": 1, "j": 2, "c": 2}, {"i": 2, "j": 2, "c": 1}]}
    assert obj["D"] == {"terms": [{"i": 1, "c": 2}, {"i": 2, "c": 2}]}


def test_compute_latex(files, capsys):
    _, out, _ = run(["compute", "--input", files["p4"], "--emit", "latex"], capsys)
    assert "M(G;x,y) = 2 x y^{2} + x^{2} y^{2}" in out


def test_product_both_match(files, capsys):
    code, out, _ = run(["product", "--kind", "cartesian", "--left", files["p3"],
                        "--right", files["p4"], "--engine", "both"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0].removeprefix("formula: ") == lines[1].removeprefix("direct: ")
    assert lines[2] == "MATCH"


def test_product_out_edges(files, capsys):
    code, out, _ = run(["product", "--kind", "strong", "--left", files["p3"], "--right", files["p3"],
                        "--engine", "direct", "--out-edges", files["out"]], capsys)
    assert code == 0
    assert out.strip() == "8 x^3 y^5 + 4 x^3 y^8 + 4 x^5 y^5 + 4 x^5 y^8"
    with open(files["out"]) as fh:
        g = parse_edge_list(fh.read())
    assert g.n == 9 and g.num_edges == 20


def test_product_formula_json(files, capsys):
    code, out, _ = run(["product", "--kind", "xor", "--left", files["p3"], "--right", files["p3"],
                        "--engine", "formula", "--emit", "json"], capsys)
    assert json.loads(out) == {"terms": [{"i": 4, "j": 5, "c": 20}]}


def test_verify_all_with_map(files, capsys):
    code, out, _ = run(["verify", "--kinds", "all", "--left", files["p3"], "--right", files["p3"],
                        "--map", files["idmap"]], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7 and all(ln.endswith(": MATCH") for ln in lines)


def test_verify_mismatch_exit_code(files, capsys, monkeypatch):
    import mprod.cli as cli
    from mprod.bipoly import BiPoly

    real = cli.formula_mpoly
    monkeypatch.setattr(cli, "formula_mpoly",
                        lambda *a: real(*a) + BiPoly({(1, 9): 1}))
    code, out, _ = run(["verify", "--kinds", "direct,or", "--left", files["p3"],
                        "--right", files["p4"]], capsys)
    assert code == 1
    assert "direct: MISMATCH" in out
    assert "  x^1 y^9: formula=1 direct=0" in out


@pytest.mark.parametrize("argv,needle", [
    (["verify", "--kinds", "sierpinski", "--left", "{p3}", "--right", "{p3}"], "needs --map"),
    (["product", "--kind", "sierpinski", "--left", "{p3}", "--right", "{p3}"], "needs a map"),
    (["product", "--kind", "sierpinski", "--left", "{p3}", "--right", "{p3}", "--map", "{badmap}"], "outside"),
    (["compute", "--input", "{missing}"], "cannot read"),
    (["verify", "--kinds", "join", "--left", "{p3}", "--right", "{p3}"], "unknown product"),
    (["golden", "--kind", "direct", "--m", "2", "--n", "5"], "at least 3"),
])
def test_input_errors_exit_2(files, capsys, argv, needle):
    argv = [a.format(**files) for a in argv]
    code, _, err = run(argv, capsys)
    assert code == 2
    assert needle in err


def test_unknown_kind_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["product", "--kind", "join", "--left", "a", "--right", "b"])
    assert exc.value.code == 2


def test_indices(files, capsys):
    code, out, _ = run(["indices", "--input", files["p4"]], capsys)
    assert code == 0
    lines = dict(ln.split(" = ") for ln in out.splitlines())
    assert lines["first_zagreb"] == "10/1 (10.000000)"
    assert lines["harmonic"] == "11/6 (1.833333)"
    code, out, _ = run(["indices", "--input", files["p4"], "--kind", "forgotten"], capsys)
    assert out == "forgotten = 18/1 (18.000000)\n"


def test_golden_check(capsys):
    code, out, _ = run(["golden", "--kind", "sierpinski", "--m", "3", "--n", "4",
                        "--map", "identity", "--check"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "2 x y^2 + 3 x y^3 + x^2 y^2 + 4 x^2 y^3 + x^3 y^3",
        "formula: MATCH",
        "direct: MATCH",
    ]


def test_bench_csv(files, capsys):
    code, out, _ = run(["bench", "--kind", "cartesian", "--left", files["p3"],
                        "--right", "path:5", "--repeat", "1"], capsys)
    assert code == 0
    header, row = out.splitlines()
    assert header == BENCH_HEADER
    fields = row.split(",")
    assert fields[:4] == ["cartesian", "3", "5", "22"]
    assert float(fields[6]) > 0


def test_deterministic_output(files, capsys):
    argv = ["product", "--kind", "or", "--left", files["p4"], "--right", files["p3"], "--engine", "both"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "mprod", "compute", "--input", files["p3"]],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("M = 2 x y^2")
