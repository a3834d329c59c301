import json
import subprocess
import sys

import numpy as np
import pytest

from vertexmult import io
from vertexmult.cli import main

from conftest import load_golden, max_abs


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def read_csv_table(path):
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    header = lines[0].split(",")
    rows = np.array([[float(v) for v in l.split(",")] for l in lines[1:]])
    return header, rows


def write(path, text):
    path.write_text(text)
    return path


def test_demo_g1_bundle(tmp_path, capsys):
    code, _, _ = run(["demo", "--kind", "g1", "--n", 8, "--out", tmp_path], capsys)
    assert code == 0
    for name in ("Ug.json", "Ug.re.csv", "Ug.im.csv", "coords.csv", "y.csv"):
        assert (tmp_path / name).exists()
    header, rows = read_csv_table(tmp_path / "coords.csv")
    assert header == ["vertex", "l1", "normalized"]
    np.testing.assert_allclose(rows[:, 2], np.arange(8), atol=1e-9)
    header, rows = read_csv_table(tmp_path / "y.csv")
    assert header == ["vertex", "re", "im", "abs"]
    np.testing.assert_allclose(rows[:, 3], np.arange(8), atol=1e-9)
    doc = json.loads((tmp_path / "Ug.json").read_text())
    assert doc["policy"] == "error" and doc["label"] == "paper"
    assert set(doc) >= {"n", "U", "coords_l1", "coords_norm", "omegas", "policy"}
    U = io.matrix_from_dict(doc["U"])
    assert max_abs(U - np.diag(np.arange(8))) <= 1e-8
    assert np.array_equal(io.read_matrix_csv(tmp_path / "Ug"), U)


def test_demo_g2_has_complex_entries(tmp_path, capsys):
    code, _, _ = run(["demo", "--kind", "g2", "--out", tmp_path], capsys)
    assert code == 0
    im = io.read_matrix_csv(tmp_path / "Ug").imag
    assert np.max(np.abs(im)) > 0.01
    _, golden = load_golden("g2_n8")
    assert max_abs(io.read_matrix_csv(tmp_path / "Ug") - golden) <= 1e-8


def test_demo_g3_default_policy_fails(tmp_path, capsys):
    code, out, err = run(["demo", "--kind", "g3", "--out", tmp_path], capsys)
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "ZeroModulusEigenvalue"
    assert len(doc["indices"]) == 1 and "detail" in doc


@pytest.mark.parametrize("policy", ["midpoint", "perturb"])
def test_demo_g3_workarounds_are_labelled(tmp_path, capsys, policy):
    code, _, _ = run(["demo", "--kind", "g3", "--zero-freq-policy", policy, "--out", tmp_path], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "Ug.json").read_text())
    assert doc["label"] == "non-paper" and doc["policy"] == policy
    for name in ("coords.csv", "y.csv", "Ug.re.csv", "Ug.im.csv"):
        assert (tmp_path / name).read_text().startswith("# non-paper")
    _, golden = load_golden(f"g3_n8_{policy}")
    assert max_abs(io.read_matrix_csv(tmp_path / "Ug") - golden) <= 1e-8


def test_demo_needs_four_vertices(tmp_path, capsys):
    code, _, err = run(["demo", "--kind", "g1", "--n", 3, "--out", tmp_path], capsys)
    assert code == 1 and json.loads(err)["error"] == "UsageError"


def test_compute_cycle_edge_list(tmp_path, capsys):
    g = write(tmp_path / "c4.txt", "n=4 directed=true\n0 1\n1 2\n2 3\n3 0\n")
    code, _, _ = run(["compute", "--graph", g, "--out", tmp_path / "o"], capsys)
    assert code == 0
    U = io.read_matrix_csv(tmp_path / "o" / "Ug")
    assert max_abs(U - np.diag([0, 1, 2, 3])) <= 1e-9


@pytest.mark.parametrize("fmt, text", [
    ("json", '{"n": 4, "edges": [[0, 1, 1], [1, 2, 1], [2, 3, 1], [3, 0, 1]]}'),
    ("csv", "0,0,0,1\n1,0,0,0\n0,1,0,0\n0,0,1,0\n"),
])
def test_compute_other_formats(tmp_path, capsys, fmt, text):
    g = write(tmp_path / f"c4.{fmt}", text)
    code, _, _ = run(["compute", "--graph", g, "--out", tmp_path / "o"], capsys)
    assert code == 0
    assert max_abs(io.read_matrix_csv(tmp_path / "o" / "Ug") - np.diag([0, 1, 2, 3])) <= 1e-9


def test_compute_undirected_same_sign_spectrum(tmp_path, capsys):
    # eigenvalues 3 and 1 share frequency 0
    g = write(tmp_path / "u.txt", "n=2 directed=false\n0 1 1\n0 0 2\n1 1 2\n")
    code, _, err = run(["compute", "--graph", g, "--out", tmp_path / "o"], capsys)
    assert code == 2 and json.loads(err)["error"] == "DegenerateFrequencies"


def test_compute_parse_error(tmp_path, capsys):
    g = write(tmp_path / "bad.txt", "n=x\n")
    code, _, err = run(["compute", "--graph", g, "--out", tmp_path / "o"], capsys)
    assert code == 1 and json.loads(err)["error"] == "ParseError"


def test_compute_missing_file(tmp_path, capsys):
    code, _, err = run(["compute", "--graph", tmp_path / "nope.txt", "--out", tmp_path], capsys)
    assert code == 1


def test_eps_freq_against_pinned_frequencies(tmp_path, capsys):
    doc, _ = load_golden("g2_n8")
    w = np.array(doc["omegas"])
    min_gap = min(np.diff(w).min(), w[0] + 2 * np.pi - w[-1])
    assert min_gap > 0.5
    code, _, _ = run(["compute", "--kind", "g2", "--eps-freq", 0.5, "--out", tmp_path], capsys)
    assert code == 0
    code, _, err = run(["compute", "--kind", "g2", "--eps-freq", min_gap + 0.01, "--out", tmp_path], capsys)
    assert code == 2 and json.loads(err)["error"] == "DegenerateFrequencies"


def parse_coords(out):
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    return lines[0].split(","), np.array([[float(v) for v in l.split(",")] for l in lines[1:]])


def test_coords_g1(capsys):
    code, out, _ = run(["coords", "--kind", "g1", "--normalize"], capsys)
    assert code == 0
    header, rows = parse_coords(out)
    assert header == ["vertex", "raw", "normalized"]
    np.testing.assert_allclose(rows[:, 1], np.arange(8), atol=1e-9)
    np.testing.assert_allclose(rows[:, 2], np.arange(8), atol=1e-9)


def test_coords_g2_merges_first_two(capsys, tmp_path):
    code, _, _ = run(["coords", "--kind", "g2", "--normalize", "--out", tmp_path], capsys)
    assert code == 0
    _, rows = parse_coords((tmp_path / "coords.csv").read_text())
    c = rows[:, 2]
    assert abs(c[0] - c[1]) < abs(c[2] - c[1])


def test_coords_without_normalize_and_other_norm(capsys):
    code, out, _ = run(["coords", "--kind", "g1"], capsys)
    assert code == 0 and out.startswith("vertex,raw\n")
    code, out, _ = run(["coords", "--kind", "g2", "--norm", "l2"], capsys)
    assert code == 0 and out.startswith("# non-paper: norm=l2")


def test_coords_degenerate_range(tmp_path, capsys):
    g = write(tmp_path / "flip.txt", "n=2\n0 0 1\n1 1 -1\n")
    code, _, err = run(["coords", "--graph", g, "--normalize"], capsys)
    assert code == 2 and json.loads(err)["error"] == "DegenerateRange"


def test_gft_and_inverse(tmp_path, capsys):
    sig = write(tmp_path / "ones.txt", "1\n1\n1\n1\n")
    code, out, _ = run(["gft", "--kind", "g1", "--n", 4, "--signal", sig], capsys)
    assert code == 0
    np.testing.assert_allclose(io.parse_values(out), [2, 0, 0, 0], atol=1e-14)

    x = write(tmp_path / "x.txt", "1\n2-1j\n0.5\n-3\n4j\n1e-3\n7\n8\n")
    code, _, _ = run(["gft", "--kind", "g2", "--signal", x, "--out", tmp_path / "f"], capsys)
    assert code == 0
    xt = tmp_path / "f" / "xt.csv"
    code, _, _ = run(["gft", "--kind", "g2", "--signal", xt, "--inverse", "--out", tmp_path / "b"], capsys)
    assert code == 0
    back = io.parse_values((tmp_path / "b" / "x.csv").read_text())
    assert max_abs(back - io.parse_values(x.read_text())) <= 1e-10


def test_gft_length_mismatch(tmp_path, capsys):
    sig = write(tmp_path / "s.txt", "1\n2\n3\n")
    code, _, err = run(["gft", "--kind", "g1", "--n", 4, "--signal", sig], capsys)
    assert code == 1 and json.loads(err)["error"] == "DimensionMismatch"


def test_diff_uniform_exponential(tmp_path, capsys):
    t = 2 * np.pi * np.arange(16) / 16
    pts = write(tmp_path / "t.txt", io.format_values(t))
    x = np.exp(1j * t)
    sig = write(tmp_path / "x.txt", io.format_values(x))
    code, out, _ = run(["diff", "--points", pts, "--period", 2 * np.pi, "--signal", sig], capsys)
    assert code == 0
    assert max_abs(io.parse_values(out) - 1j * x) <= 1e-8

    const = write(tmp_path / "c.txt", "3\n" * 16)
    code, out, _ = run(["diff", "--points", pts, "--period", 2 * np.pi, "--signal", const], capsys)
    assert code == 0 and max_abs(io.parse_values(out)) <= 1e-12


def test_diff_non_increasing_points(tmp_path, capsys):
    pts = write(tmp_path / "t.txt", "0\n1\n0.5\n2\n")
    sig = write(tmp_path / "x.txt", "1\n1\n1\n1\n")
    code, _, err = run(["diff", "--points", pts, "--period", 3, "--signal", sig], capsys)
    doc = json.loads(err)
    assert code == 1 and doc["error"] == "ParseError" and doc["indices"] == [2]


def test_diff_point_outside_period(tmp_path, capsys):
    pts = write(tmp_path / "t.txt", "0\n1\n5\n")
    sig = write(tmp_path / "x.txt", "1\n1\n1\n")
    code, _, err = run(["diff", "--points", pts, "--period", 3, "--signal", sig], capsys)
    assert code == 1 and json.loads(err)["error"] == "ParseError"


@pytest.mark.parametrize("argv", [
    ["demo", "--kind", "g1", "--out", "x", "--bogus"],
    ["frobnicate"],
    [],
    ["demo", "--kind", "g9", "--out", "x"],
    ["compute", "--out", "x"],
    ["coords", "--kind", "g1", "--eps-freq", "-1"],
])
def test_usage_errors_exit_one(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])["error"] == "UsageError"


@pytest.mark.parametrize("kind, extra", [("g1", []), ("g2", []), ("g3", ["--zero-freq-policy", "perturb"])])
def test_repeated_runs_are_byte_identical(tmp_path, capsys, kind, extra):
    for d in ("a", "b"):
        assert run(["demo", "--kind", kind, *extra, "--out", tmp_path / d], capsys)[0] == 0
    for f in sorted((tmp_path / "a").iterdir()):
        assert f.read_bytes() == (tmp_path / "b" / f.name).read_bytes()


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "vertexmult", "demo", "--kind", "g3", "--out", str(tmp_path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"] == "ZeroModulusEigenvalue"
