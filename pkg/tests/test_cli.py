import json
import subprocess
import sys

import pytest

from hypersums.cli import run
from hypersums.rational import format_rational, parse_rational


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sum_all_agrees(capsys):
    code, out, _ = call(capsys, "sum", "--p", "2", "--a", "1", "--d", "2", "--n", "3", "--method", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "AGREE"
    values = [line.split()[-1] for line in lines[:-1] if "not applicable" not in line]
    assert values and set(values) == {"84"}


def test_sum_all_json_schema(capsys):
    code, out, _ = call(capsys, "sum", "--p", "2", "--a", "1", "--d", "2", "--n", "3", "--method", "all", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"query", "results", "agree"}
    assert data["agree"] is True
    assert data["query"] == {"p": 2, "a": "1", "d": "2", "n": 3, "r": 0}
    by_method = {r["method"]: r for r in data["results"]}
    assert by_method["rstirling"] == {"method": "rstirling", "value": None, "applicable": False,
                                      "reason": by_method["rstirling"]["reason"]}
    assert by_method["whitney"]["value"] == "84"


def test_hypersum_single(capsys):
    code, out, _ = call(capsys, "hypersum", "--p", "1", "--a", "0", "--d", "1", "--n", "3", "--r", "1")
    assert (code, out.strip()) == (0, "10")


def test_hypersum_all_rational(capsys):
    code, out, _ = call(capsys, "hypersum", "--p", "2", "--a", "1/2", "--d", "-1/3", "--n", "4",
                        "--r", "2", "--method", "all", "--json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert len({r["value"] for r in data["results"]}) == 1


def test_not_applicable_exit_code(capsys):
    code, out, _ = call(capsys, "sum", "--p", "2", "--a", "1", "--d", "2", "--n", "3", "--method", "rstirling")
    assert code == 3
    assert "not applicable" in out


@pytest.mark.parametrize("argv", [
    ["sum", "--p", "2", "--a", "1", "--d", "0", "--n", "3"],
    ["sum", "--p", "2", "--a", "1/0", "--d", "1", "--n", "3"],
    ["sum", "--p", "-1", "--a", "1", "--d", "1", "--n", "3"],
    ["sum", "--p", "2", "--a", "1", "--d", "1"],
    ["hypersum", "--p", "2", "--a", "1", "--d", "1", "--n", "3", "--r", "x"],
    ["stirling", "--n", "3", "--whitney", "0,1"],
    ["series", "--kind", "bogus", "--order", "3", "--a", "0", "--d", "1", "--n", "2"],
    ["nosuchcommand"],
])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_stirling_triangles(capsys):
    code, out, _ = call(capsys, "stirling", "--n", "4", "--json")
    assert json.loads(out)["rows"][4] == ["0", "1", "7", "6", "1"]
    code, out, _ = call(capsys, "stirling", "--n", "2", "--x", "1/2", "--json")
    assert json.loads(out)["rows"] == [["1"], ["1/2", "1"], ["1/4", "2", "1"]]
    code, out, _ = call(capsys, "stirling", "--n", "2", "--whitney", "2,1", "--json")
    assert json.loads(out)["rows"][2] == ["1", "4", "1"]
    code, out, _ = call(capsys, "stirling", "--n", "3", "--r", "1")
    assert out.splitlines()[2].split() == ["1", "3", "1"]


def test_bernoulli_command(capsys):
    code, out, _ = call(capsys, "bernoulli", "--n", "1", "--at", "0")
    assert out.strip() == "-1/2"
    code, out, _ = call(capsys, "bernoulli", "--n", "2", "--alpha", "2", "--at", "0")
    assert out.strip() == "5/6"
    code, out, _ = call(capsys, "bernoulli", "--n", "2")
    assert out.split() == ["1/6", "-1", "1"]


@pytest.mark.parametrize("kind", ["egf-direct", "egf-2f1", "egf-laurent"])
def test_series_kinds(capsys, kind):
    code, out, _ = call(capsys, "series", "--kind", kind, "--order", "2", "--a", "0", "--d", "1",
                        "--n", "2", "--r", "1", "--values")
    assert code == 0
    assert json.loads(out) == ["6", "4", "6"]


def test_series_raw_coefficients(capsys):
    code, out, _ = call(capsys, "series", "--kind", "powersum-egf", "--order", "3", "--a", "0",
                        "--d", "1", "--n", "2", "--json")
    data = json.loads(out)
    assert data["coeffs"] == ["3", "3", "5/2", "3/2"]


def _strings(obj):
    if isinstance(obj, str):
        yield obj
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from _strings(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _strings(v)


def test_verify_small_json(capsys):
    code, out, err = call(capsys, "verify", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["failed"] == 0
    assert data["summary"]["total"] == len(data["records"])
    assert "duration" not in out
    for rec in data["records"]:
        for key in ("a", "d", "x"):
            if key in rec["params"]:
                text = rec["params"][key]
                assert format_rational(parse_rational(text)) == text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypersums", "sum", "--p", "3", "--a", "0", "--d", "1", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "100"
