import csv
import io
import json
import subprocess
import sys

import pytest

from skcurve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_dyadic(capsys):
    code, out, _ = run(capsys, "eval", "--t", "1/2^1")
    assert code == 0
    assert out.strip() == "s(1/2^1) = (1,1)  ~ (1, 1)"


def test_eval_json_and_real_time(capsys):
    code, out, _ = run(capsys, "--json", "eval", "--t", "3/8")
    assert code == 0 and json.loads(out)["point"] == ["1/2^1", "1/2^1"]
    code, out, _ = run(capsys, "eval", "--t", "0.3", "--depth", "10", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["error_bound_sq"] == "1/2^8"


@pytest.mark.parametrize("argv", [["eval", "--t", "abc"], ["eval", "--t", "3/2"], ["slr", "--t1", "1/2", "--t2", "1/2"]])
def test_domain_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "eval")[0] == 1
    assert run(capsys, "rival", "--curve", "peano")[0] == 1


def test_slr(capsys):
    code, out, _ = run(capsys, "slr", "--t1", "0", "--t2", "1")
    assert code == 0 and out.strip() == "4  ~ 4"
    code, out, _ = run(capsys, "slr", "--t1", "0", "--t2", "3/4", "--json")
    assert json.loads(out)["slr"]["exact"] == "4/3"


def test_locality_exhaustive_and_certified(capsys):
    code, out, _ = run(capsys, "locality", "--depth", "6", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["attained_max"]["exact"] == "4" and rep["certified_upper"] is None
    code, out, _ = run(capsys, "locality", "--depth", "8", "--certified", "--json")
    rep = json.loads(out)
    assert rep["certified_upper"]["exact"] == "136/33"
    code, out, _ = run(capsys, "locality", "--depth", "4", "--certified")
    assert "certified upper bound = 16/3" in out


def test_locality_sweep_csv(capsys):
    code, out, _ = run(capsys, "locality", "--sweep", "1,6,8")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["depth", "attained_max", "certified_upper"]
    assert rows[1] == ["1", "4", ""]
    assert rows[2] == ["6", "4", "40/9"]
    assert rows[3] == ["8", "4", "136/33"]


@pytest.mark.parametrize("depth", [1, 4, 8, 12])
def test_export_then_certify_passes(capsys, tmp_path, depth):
    path = tmp_path / "t.json"
    assert run(capsys, "export-table", "--depth", str(depth), "--output", str(path))[0] == 0
    code, out, _ = run(capsys, "certify", "--input", str(path))
    assert code == 0 and out.startswith("PASS")


def test_export_decimal_then_certify(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "export-table", "--depth", "6", "--encoding", "decimal", "--output", str(path))
    code, out, _ = run(capsys, "certify", "--input", str(path), "--json")
    assert code == 0 and json.loads(out)["pass"] is True


def test_certify_failure_exit_two(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "export-table", "--depth", "5", "--output", str(path))
    obj = json.loads(path.read_text())
    obj["points"][7] = ["2", "0"]
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "certify", "--input", str(path), "--json")
    verdict = json.loads(out)
    assert code == 2 and verdict["pass"] is False and verdict["failed_check"]


def test_certify_bad_input_exit_one(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"depth": 3, "points": [[0, 0]]}))
    code, _, err = run(capsys, "certify", "--input", str(path))
    assert code == 1 and "length" in err
    assert run(capsys, "certify", "--input", str(tmp_path / "missing.json"))[0] == 1


def test_tiling(capsys):
    code, out, _ = run(capsys, "tiling", "--order", "2")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[0].startswith("0\t[0, 1/2^2]")
    code, out, _ = run(capsys, "tiling", "--order", "3", "--json")
    assert len(json.loads(out)) == 8


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--order", "2", "--size", "128")
    assert code == 0 and out.startswith("<?xml") and 'id="traversal"' in out
    path = tmp_path / "c.svg"
    run(capsys, "render", "--order", "3", "--no-arrow", "--no-subdivision", "--output", str(path))
    svg = path.read_text()
    assert "marker" not in svg and "<line" not in svg


def test_rival(capsys):
    code, out, _ = run(capsys, "rival", "--curve", "hilbert", "--depth", "8", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["attained_max"]["exact"] == "137/32"
    assert rep["sierpinski_knopp"]["exact"] == "4" and rep["rival_exceeds_sk"] is True


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--resolution", "100")
    res = json.loads(out)
    assert code == 0 and abs(res["max_area"] - 1) < 1e-2
    assert run(capsys, "extremal", "--resolution", "1")[0] == 1


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "skcurve", "slr", "--t1", "0", "--t2", "1/2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("4")
