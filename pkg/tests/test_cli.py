import csv
import io
import json
import math
import subprocess
import sys

import pytest

from gfverify import harness
from gfverify.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["eval", "legendre", "--n", "2", "--x", "0.5"], -0.125),
    (["eval", "elliptick", "--k", "0"], math.pi / 2),
    (["eval", "ferrers", "--nu", "-0.5", "--mu", "0", "--x", "0.2"], 1.131603977657728),
    (["eval", "jacobi", "--n", "1", "--alpha", "1", "--beta", "2", "--x", "0"], -0.5),
    (["eval", "gegenbauer", "--n", "2", "--mu", "1", "--x", "0.5"], 0.0),
    (["eval", "chebt", "--n", "3", "--x", "0.5"], -1.0),
    (["eval", "chebu", "--n", "1", "--x", "0.3"], 0.6),
    (["eval", "2f1", "--a", "0.5", "--b", "1", "--c", "1", "--z", "0.5"], math.sqrt(2)),
    (["eval", "legp", "--nu", "1", "--mu", "0", "--z", "1.7"], 1.7),
])
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert float(out) == pytest.approx(expected, rel=1e-14, abs=1e-15)


def test_eval_prints_17_digits(capsys):
    _, out, _ = run(capsys, "eval", "elliptick", "--k", "0")
    assert out.strip() == "1.5707963267948966"


@pytest.mark.parametrize("argv", [
    ["eval", "elliptick", "--k", "1.5"],
    ["eval", "legp", "--nu", "1", "--mu", "0", "--z", "0.5"],
    ["eval", "gegenbauer", "--n", "2", "--mu", "0", "--x", "0.5"],
    ["eval", "jacobi", "--n", "2"],
    ["eval", "bessel", "--x", "1"],
])
def test_eval_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_verify_pass_and_fail(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "exp.jacobi.thm21", "--grid", "default", "--tol", "1e-8",
                     "--out", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    assert report["summary"]["passed"] is True
    assert report["summary"]["points"] == len(report["records"]) == 2400
    assert [r["grid_index"] for r in report["records"]] == list(range(2400))
    code, _, _ = run(capsys, "verify", "exp.jacobi.thm21", "--tol", "1e-16", "--out", str(out))
    assert code == 1
    report = json.loads(out.read_text())
    assert report["summary"]["max_rel_err"] > 1e-16
    assert report["summary"]["passed"] is False


def test_verify_gegenbauer(capsys):
    code, out, _ = run(capsys, "verify", "gf.gegenbauer", "--tol", "1e-9")
    assert code == 0
    assert json.loads(out)["summary"]["passed"]


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "exp.nothing")
    assert code == 2 and "unknown identity" in err


def test_grid_file_errors(capsys, tmp_path):
    bad_key = tmp_path / "bad_key.json"
    bad_key.write_text(json.dumps({"rhoo": [0.3]}))
    assert run(capsys, "verify", "exp.jacobi.thm21", "--grid", str(bad_key))[0] == 2
    outside = tmp_path / "outside.json"
    outside.write_text(json.dumps({"rho": [0.3, 0.95]}))
    assert run(capsys, "verify", "exp.jacobi.thm21", "--grid", str(outside))[0] == 3
    not_obj = tmp_path / "list.json"
    not_obj.write_text("[1, 2]")
    assert run(capsys, "verify", "exp.jacobi.thm21", "--grid", str(not_obj))[0] == 2
    assert run(capsys, "verify", "exp.jacobi.thm21", "--grid", str(tmp_path / "none.json"))[0] == 2


def test_grid_file_partial(capsys, tmp_path):
    grid = tmp_path / "g.json"
    grid.write_text(json.dumps({"m": [1], "rho": [0.25], "tol": 1e-9}))
    code, out, _ = run(capsys, "verify", "exp.jacobi.thm21", "--grid", str(grid))
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["tol"] == 1e-9
    assert report["summary"]["points"] == 4 * 4 * 5


def test_csv_output(capsys):
    code, out, _ = run(capsys, "verify", "gf.gegenbauer", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["identity_id", "grid_index", "mu", "rho", "x", "lhs", "series",
                       "abs_err", "rel_err", "terms_used"]
    assert len(rows) == 1 + 120
    assert float(rows[1][5]) == pytest.approx(float(rows[1][6]), rel=1e-12)


def test_integrals(capsys):
    code, out, _ = run(capsys, "integrals", "exp.gegenbauer.plus", "--n-max", "8")
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["points"] == 18
    assert report["summary"]["tol"] == 1e-7
    code, _, _ = run(capsys, "integrals", "exp.jacobi.thm21", "--n-max", "10", "--out", "/dev/null")
    assert code == 0


def test_integrals_rejects_generating_functions(capsys):
    assert run(capsys, "integrals", "gf.jacobi.plus")[0] == 2
    assert run(capsys, "integrals", "gf.nothing")[0] == 2


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 24
    assert "exp.jacobi.thm21" in out
    code, out, _ = run(capsys, "list", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 24
    assert set(rows[0]) >= {"id", "family", "label", "domain"}


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "gf.gegenbauer", "--jobs", "0")[0] == 2


def test_determinism_across_workers(tmp_path):
    one = harness.report_to_json(harness.run_verify("exp.gegenbauer.plus"))
    again = harness.report_to_json(harness.run_verify("exp.gegenbauer.plus"))
    parallel = harness.report_to_json(harness.run_verify("exp.gegenbauer.plus", jobs=3))
    assert one == again == parallel


def test_convergence_failure_recorded():
    report = harness.run_verify("gf.gegenbauer", {"rho": [0.8], "x": [1.0], "mu": [2.5]}, n_max=5)
    rec = report.records[0]
    assert rec["series"] is None and rec["rel_err"] is None
    assert report.summary["passed"] is False
    json.loads(harness.report_to_json(report))


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "gfverify.cli", "eval", "chebt", "--n", "3", "--x", "0.5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert float(proc.stdout) == pytest.approx(-1.0)
    proc = subprocess.run([sys.executable, "-m", "gfverify.cli", "integrals", "gf.jacobi.plus"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
