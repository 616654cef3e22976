import json

import pytest

from wsteenrod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mul_exterior(capsys):
    code, out, _ = run(capsys, "algebra", "mul", "P(1)", "P(1)")
    assert code == 0
    assert out.strip() == "0"


def test_basis_two_monomials(capsys):
    code, out, _ = run(capsys, "algebra", "basis", "--stem", "3", "--weight", "1")
    assert code == 0
    assert out.splitlines() == ["Q(0)P(1)", "Q(1)"]


def test_basis_dual(capsys):
    code, out, _ = run(
        capsys, "algebra", "basis", "--stem", "3", "--weight", "1", "--dual"
    )
    assert out.splitlines() == ["t0 x1", "t1"]


def test_antipode(capsys):
    code, out, _ = run(capsys, "algebra", "antipode", "x2")
    assert code == 0
    assert out.strip() == "x2 + x1^3"


def test_conjugate(capsys):
    code, out, _ = run(capsys, "algebra", "conjugate", "P(1)")
    assert out.strip() == "P(1)"


def test_pst_and_pair(capsys):
    code, out, _ = run(capsys, "algebra", "pst", "--t", "1")
    assert out.strip() == "P(1)"
    code, out, _ = run(capsys, "algebra", "pair", "P(1)", "x1")
    assert out.strip() == "1"


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "algebra", "mul", "P(1", "P(1)")
    assert code == 2
    assert "parse error" in err


def test_window_error_exit_code(capsys):
    code, out, err = run(
        capsys, "algebra", "--max-stem", "4", "mul", "P(2)", "P(2)"
    )
    assert code == 2
    assert "window" in err


def test_resolve_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for path in (out1, out2):
        code, _, _ = run(
            capsys,
            "resolve",
            "--module",
            "kw:0",
            "--max-stem",
            "8",
            "--max-filt",
            "9",
            "--out",
            str(path),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert data["format_version"] == 1
    assert data["module"] == "kw:0"
    assert {(c["s"], c["stem"], c["weight"]) for c in data["classes"]} == {
        (s, s, s) for s in range(9)
    }


def test_resolve_sphere_contains_w0(tmp_path, capsys):
    out = tmp_path / "sphere.json"
    run(
        capsys,
        "resolve",
        "--module",
        "sphere",
        "--max-stem",
        "2",
        "--max-filt",
        "3",
        "--out",
        str(out),
    )
    data = json.loads(out.read_text())
    assert {"s": 1, "stem": 1, "weight": 1, "mult": 1} in data["classes"]


def test_resolve_wbp1(tmp_path, capsys):
    out = tmp_path / "wbp1.json"
    run(
        capsys,
        "resolve",
        "--module",
        "wbp:1",
        "--max-stem",
        "6",
        "--max-filt",
        "7",
        "--out",
        str(out),
    )
    data = json.loads(out.read_text())
    got = {(c["s"], c["stem"], c["weight"]) for c in data["classes"]}
    want = set()
    for a in range(7):
        for b in range(2):
            if a + 5 * b <= 6:
                want.add((a + b, a + 5 * b, a + 3 * b))
    assert got == want


def test_resolve_partial_flag(tmp_path, capsys):
    out = tmp_path / "partial.json"
    code, _, err = run(
        capsys,
        "resolve",
        "--module",
        "sphere",
        "--max-stem",
        "8",
        "--max-filt",
        "4",
        "--max-gens",
        "0",
        "--out",
        str(out),
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data.get("partial") is True
    assert "completed_stem" in data


def test_chart_roundtrip_and_outputs(tmp_path, capsys):
    chart_path = tmp_path / "chart.json"
    run(
        capsys,
        "resolve",
        "--module",
        "kw:0",
        "--max-stem",
        "6",
        "--max-filt",
        "7",
        "--out",
        str(chart_path),
    )
    svg1 = tmp_path / "c1.svg"
    tsv1 = tmp_path / "c1.tsv"
    json1 = tmp_path / "c1.json"
    code, _, _ = run(
        capsys,
        "chart",
        "--in",
        str(chart_path),
        "--svg",
        str(svg1),
        "--tsv",
        str(tsv1),
        "--json",
        str(json1),
    )
    assert code == 0
    # byte-identical reserialization
    assert json1.read_bytes() == chart_path.read_bytes()
    svg2 = tmp_path / "c2.svg"
    tsv2 = tmp_path / "c2.tsv"
    run(capsys, "chart", "--in", str(chart_path), "--svg", str(svg2), "--tsv", str(tsv2))
    assert svg1.read_bytes() == svg2.read_bytes()
    assert tsv1.read_bytes() == tsv2.read_bytes()
    assert svg1.read_text().startswith("<?xml")
    assert tsv1.read_text().splitlines()[0] == "stem\ts\tweight\tmult"


def test_chart_empty_svg(tmp_path, capsys):
    from wsteenrod.charts import ExtChart, chart_file_dumps

    path = tmp_path / "empty.json"
    path.write_text(chart_file_dumps(ExtChart("empty", 4)))
    svg = tmp_path / "empty.svg"
    code, _, _ = run(capsys, "chart", "--in", str(path), "--svg", str(svg))
    assert code == 0
    assert "</svg>" in svg.read_text()


def test_chart_schema_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"module": "x"}')
    with pytest.raises(SystemExit) as exc:
        run(capsys, "chart", "--in", str(bad))
    assert "format_version" in str(exc.value)


def test_verify_small_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pst", "--max-stem", "12")
    assert code == 0
    assert "verdict: pass" in out
    assert "[pass] pst_exteriority" in out


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        run(capsys, "verify", "--suite", "nope")


def test_env_window(monkeypatch, capsys):
    monkeypatch.setenv("WSTEENROD_MAX_STEM", "4")
    code, out, err = run(capsys, "algebra", "mul", "P(2)", "P(2)")
    assert code == 2
    assert "window" in err
