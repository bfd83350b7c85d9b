import json
import subprocess
import sys
from pathlib import Path

import pytest

from fibrox.cli import run_command

IDEALS = Path(__file__).resolve().parent.parent / "ideals"


def run(*argv):
    return run_command([str(a) for a in argv])


def test_verify_example_m_json():
    code, out = run("verify", IDEALS / "example_M.ideal", "--max-degree", 6, "--json")
    assert code == 0
    rep = json.loads(out)
    for key in ("input", "sortable", "matrix", "minors", "quadratic_kernel", "generation", "theorems", "invariants"):
        assert key in rep
    assert rep["minors_equal_quadratic_kernel"] is True
    counts = rep["generation"]["counts"]
    assert counts["2"] > 0 and all(counts[str(k)] == 0 for k in range(3, 7))
    assert {"lhs": [1, 4], "rhs": [2, 2]} in rep["minors"]
    assert rep["theorems"]["main_a"] == {"applicable": True, "holds_up_to_max_degree": True, "first_failing_degree": None}


def test_verify_is_byte_reproducible():
    a = run("verify", IDEALS / "ex_b.ideal", "--json", "--bounds", "3,3,3")
    b = run("verify", IDEALS / "ex_b.ideal", "--json", "--bounds", "3,3,3")
    assert a == b
    assert "stability" in json.loads(a[1])


def test_verify_reports_theorem_failure():
    code, out = run("verify", IDEALS / "tor_counterexample.ideal", "--json")
    assert code == 1
    assert json.loads(out)["theorems"]["tor"]["holds_up_to_max_degree"] is False


def test_verify_also_associate():
    code, out = run("verify", IDEALS / "final_remark.ideal", "--also-associate", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["minors"] == [{"lhs": [1, 4], "rhs": [2, 2]}, {"lhs": [2, 4], "rhs": [3, 3]}]
    assert rep["associate"]["minors"] == [{"lhs": [2, 4], "rhs": [3, 3]}]
    assert rep["associate"]["minors_equal_quadratic_kernel"] is False


def test_freiman_command():
    code, out = run("freiman", IDEALS / "ex_a.ideal")
    assert (code, out) == (0, "freiman: true (mu2=7, l=2, mu=4)\n")
    code, _ = run("freiman", IDEALS / "final_remark.ideal")
    assert code == 1


def test_sortable_command():
    code, out = run("sortable", IDEALS / "remark_reza.ideal")
    assert code == 1
    assert "sort(x1^3, x1*x2*x3) = (x1^2*x2, x1^2*x3)" in out
    assert run("sortable", IDEALS / "example_M.ideal") == (0, "sortable: true\n")


def test_stable_command():
    code, out = run("stable", IDEALS / "remark_reza.ideal", "--bounds", "3,2,1")
    assert code == 0
    assert "strongly stable: false" in out and "u = x1*x2*x3, i = 1, j = 2" in out
    code, out = run("stable", IDEALS / "remark_reza.ideal", "--bounds", "3,1,1")
    assert code == 2  # x1*x2^2 violates the bound


def test_matrix_and_minors_commands():
    code, out = run("matrix", IDEALS / "example_M.ideal")
    assert code == 0 and out.splitlines()[1:] == ["t1 t2 t3 t4 t5", "t2 t4 t5  0 t6", "t3 t5  0 t6  0"]
    code, out = run("matrix", IDEALS / "final_remark.ideal", "--json")
    assert json.loads(out)["labels"] == [[1, 0, 2], [0, 2, 3], [2, 3, 4]]
    code, out = run("minors", IDEALS / "final_remark.ideal", "--also-associate")
    assert "bivariate: 2 binomial 2-minors" in out and "associate: 1 binomial 2-minors" in out
    code, out = run("minors", IDEALS / "ex_b.ideal", "--json")
    assert len(json.loads(out)["associate"]) == 3


def test_toric_command():
    code, out = run("toric", IDEALS / "intro_I2.ideal", "--max-degree", 4, "--json")
    assert code == 0
    assert json.loads(out)["counts"] == {"2": 15, "3": 0, "4": 2}


def test_veronese_and_borel_commands(tmp_path):
    code, out = run("veronese", "--bounds", "3,2,1", "--degree", 3)
    assert code == 0
    assert out.splitlines()[1:] == ["n 3", "3 0 0", "2 1 0", "2 0 1", "1 2 0", "1 1 1", "0 2 1"]
    dest = tmp_path / "closure.ideal"
    code, out = run("borel", IDEALS / "borel_seeds.ideal", "-o", dest)
    assert code == 0 and out == ""
    assert dest.read_text() == (IDEALS / "borel_not_sortable.ideal").read_text()


def test_usage_and_parse_errors(tmp_path):
    assert run("bogus")[0] == 2
    assert run("verify")[0] == 2
    bad = tmp_path / "bad.ideal"
    bad.write_text("n 2\nx1^2\nx3\n")
    code, out = run("verify", bad)
    assert code == 2 and "line 3" in out
    assert run("veronese", "--bounds", "1,1", "--degree", 3)[0] == 2


def test_resource_cap():
    assert run("toric", IDEALS / "intro_I1.ideal", "--max-degree", 11)[0] == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibrox", "freiman", str(IDEALS / "ex_b.ideal")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "freiman: true (mu2=12, l=3, mu=5)\n"
