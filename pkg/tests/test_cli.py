import csv
import io
import json

import pytest

from xlaguerre import cli
from xlaguerre.verify import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_x1_json(capsys):
    code, out, _ = run(capsys, "poly", "--family", "X1", "--alpha", "3/2", "--n-max", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == "3/2"
    assert data["rows"][0] == {"n": 1, "mu": 1, "coeffs": ["-5/2", "-1/1"]}
    assert data["rows"][1]["coeffs"] == ["-21/4", "0/1", "1/1"]


def test_poly_csv_long_format(capsys):
    code, out, _ = run(capsys, "poly", "--family", "L", "--alpha", "1/2", "--n-max", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    last = [r["coeff"] for r in rows if r["n"] == "2"]
    assert last == ["15/8", "-5/2", "1/2"]


def test_poly_second_order_family(capsys):
    code, out, _ = run(capsys, "poly", "--family", "LI_II", "--m1", "1", "--m2", "1",
                       "--alpha", "5/2", "--n-max", "4", "--format", "json")
    assert code == 0
    assert [r["n"] for r in json.loads(out)["rows"]] == [3, 4]


@pytest.mark.parametrize("argv", [
    ("poly", "--family", "X1", "--n-max", "0"),
    ("poly", "--family", "L1", "--n-max", "3"),
    ("poly", "--family", "X1", "--alpha", "three"),
    ("spectrum", "--kind", "II", "--m", "2", "--l", "0"),
    ("potential", "--case", "I_I", "--m1", "1", "--m2", "2", "--l", "1"),
    ("spectrum", "--l", "1"),
    ("poly", "--bogus"),
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_potential_origin_value(capsys):
    code, out, _ = run(capsys, "potential", "--mu1", "--l", "0", "--points", "11", "--format", "json")
    assert code == 0
    first = json.loads(out)["samples"][0]
    assert first["x"] == 0.0 and first["V"] == -4.0


def test_potential_drops_pole(capsys):
    code, out, _ = run(capsys, "potential", "--conventional", "--l", "1", "--points", "5")
    assert code == 0
    assert out.splitlines()[1].split(",")[0] != "0"


def test_spectrum_conventional(capsys):
    code, out, _ = run(capsys, "spectrum", "--conventional", "--l", "0", "--levels", "3")
    assert code == 0
    data = json.loads(out)
    assert [lv["analytic"] for lv in data["levels"]] == [1.5, 3.5, 5.5]
    assert all(lv["abs_error"] < 1e-4 for lv in data["levels"])


def test_spectrum_ssusy_shift(capsys):
    code, out, _ = run(capsys, "spectrum", "--case", "I_II", "--m1", "1", "--m2", "1", "--l", "1",
                       "--levels", "2")
    assert code == 0
    data = json.loads(out)
    assert data["declared_shift"] == "3/2"
    assert data["levels"][0]["analytic"] == 4.0


def test_deterministic_output(capsys, tmp_path):
    argv = ["spectrum", "--kind", "I", "--m", "1", "--l", "1", "--levels", "2", "--out"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(argv + [str(a)]) == 0
    assert cli.main(argv + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# table\nfamily = L\nalpha = 7/3\nn-max = 1\nformat = json\n")
    code, out, _ = run(capsys, "poly", "--config", str(cfg))
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "L" and data["alpha"] == "7/3" and len(data["rows"]) == 2
    code, out, _ = run(capsys, "poly", "--config", str(cfg), "--n-max", "3")
    assert len(json.loads(out)["rows"]) == 4


def test_missing_config_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "poly", "--config", str(tmp_path / "nope.cfg"))
    assert code == 2 and "error" in err


def test_verify_coincidences(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coincidences", "--max-mu", "4")
    assert code == 0
    data = json.loads(out)
    assert data["summary"] == {"passed": 3, "failed": 0, "overall": "pass"}
    assert data["checks"][-1]["status"] == "info"


def test_verify_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setitem(cli.run_suites.__globals__["SUITES"], "coincidences",
                        lambda config: [Check("forced", "none", "fail", "injected")])
    code, out, err = run(capsys, "verify", "--suite", "coincidences")
    assert code == 1
    assert json.loads(out)["summary"]["overall"] == "fail"
    assert "FAIL forced" in err


def test_json_floats_round_trip():
    text = cli.dump_json({"a": 0.1, "b": [1, None, True], "c": float("inf")})
    data = json.loads(text)
    assert data["a"] == 0.1 and data["b"] == [1, None, True] and data["c"] == "inf"
