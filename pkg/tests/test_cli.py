import csv
import io
import json
import math
import pathlib
import subprocess
import sys

import mpmath
import pytest

from dualhyp import Dual
from dualhyp.cli import main, parse_axis
from dualhyp.errors import DomainError, ParseError

GOLDEN = pathlib.Path(__file__).parent / "golden"

EVAL_CASES = [
    ("eval_gamma_d.jsonl", ["eval", "gamma_d", "1+2eps"]),
    ("eval_pfq_0f0.jsonl", ["eval", "pfq", "--num", "", "--den", "", "1+2eps"]),
    ("eval_gauss_at_1.jsonl", ["eval", "gauss", "0.5", "0.5", "2", "1"]),
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("golden, argv", EVAL_CASES)
def test_golden(golden, argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_golden_values_against_oracles():
    g = json.loads((GOLDEN / "eval_gamma_d.jsonl").read_text())
    assert g["re"] == 1.0
    assert math.isclose(g["du"], -2 * float(mpmath.euler), rel_tol=1e-14)
    p = json.loads((GOLDEN / "eval_pfq_0f0.jsonl").read_text())
    assert math.isclose(p["re"], math.e, rel_tol=1e-15)
    assert math.isclose(p["du"], 2 * math.e, rel_tol=1e-15)
    assert p["converged"] is True and p["tail_bound"] <= 1e-12
    s = json.loads((GOLDEN / "eval_gauss_at_1.jsonl").read_text())
    assert math.isclose(s["re"], 4 / math.pi, rel_tol=1e-14)


def test_record_schema(capsys):
    _, out, _ = run(["eval", "pfq", "--num", "0.5,1.5", "--den", "2.5", "0.3+1eps"], capsys)
    rec = json.loads(out)
    assert list(rec) == ["function", "args", "num", "den", "re", "du", "terms_used",
                         "converged", "tail_bound"]
    assert rec["num"] == ["0.5", "1.5"] and rec["den"] == ["2.5"]
    ref = float(mpmath.hyp2f1(0.5, 1.5, 2.5, 0.3))
    assert math.isclose(rec["re"], ref, rel_tol=1e-12)


def test_options_after_positionals(capsys):
    a = run(["eval", "pfq", "0.3", "--num", "1", "--den", "2"], capsys)
    b = run(["eval", "pfq", "--num", "1", "--den", "2", "0.3"], capsys)
    assert a == b and a[0] == 0


def test_negative_literal(capsys):
    code, out, _ = run(["eval", "exp", "-1+2eps"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert math.isclose(rec["re"], math.exp(-1), rel_tol=1e-15)
    assert math.isclose(rec["du"], 2 * math.exp(-1), rel_tol=1e-15)


def test_csv_format(capsys):
    code, out, _ = run(["eval", "mul", "1+2eps", "3-1eps", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows == [{"function": "mul", "args1": "1.0+2.0eps", "args2": "3.0-1.0eps",
                     "re": "3.0", "du": "5.0"}]


def test_gauss_alias_routes_to_summation(capsys):
    _, out, _ = run(["eval", "gauss", "0.3+1eps", "0.4", "2.1", "1"], capsys)
    _, ref, _ = run(["eval", "gauss_sum_at_1", "0.3+1eps", "0.4", "2.1"], capsys)
    a, b = json.loads(out), json.loads(ref)
    assert (a["re"], a["du"]) == (b["re"], b["du"])


def test_out_file(tmp_path, capsys):
    path = tmp_path / "rec.jsonl"
    code, out, _ = run(["eval", "gamma_d", "1+2eps", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert path.read_text() == (GOLDEN / "eval_gamma_d.jsonl").read_text()


# exit codes


@pytest.mark.parametrize("argv", [
    ["eval", "nosuch", "1"],
    ["eval", "gamma_d"],
    ["eval", "gamma_d", "1+"],
    ["eval", "gamma_d", "0"],
    ["eval", "pfq", "--num", "1,1", "--den", "2", "1.5"],
    ["eval", "log", "-1"],
    ["frobnicate"],
    [],
])
def test_input_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_no_convergence_exit_3(capsys):
    code, _, err = run(["eval", "pfq", "--num", "1", "--den", "1", "20", "--max-terms", "5"],
                       capsys)
    assert code == 3
    assert "no convergence" in err


def test_help(capsys):
    code, out, _ = run(["--help"], capsys)
    assert code == 0 and "eval" in out


# tables


def read_table(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_table_exp(capsys):
    code, out, _ = run(["table", "exp", "0:1:11+1eps"], capsys)
    assert code == 0
    rows = read_table(out)
    assert len(rows) == 11
    assert (float(rows[0]["re"]), float(rows[0]["du"])) == (1.0, 1.0)
    for row in rows:
        t = float(row["args1"].split("+")[0])
        assert math.isclose(float(row["re"]), math.exp(t), rel_tol=1e-15)
        assert float(row["du"]) == float(row["re"])


def test_table_gamma_digamma(capsys):
    code, out, _ = run(["table", "gamma_d", "1:5:5+1eps"], capsys)
    assert code == 0
    rows = read_table(out)
    assert len(rows) == 5
    for a, row in zip(range(1, 6), rows):
        assert math.isclose(float(row["re"]), math.factorial(a - 1), rel_tol=1e-14)
        ref = float(mpmath.gamma(a) * mpmath.digamma(a))
        assert math.isclose(float(row["du"]), ref, rel_tol=1e-13, abs_tol=1e-15)


def test_table_two_axes(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, _, _ = run(["table", "beta_d", "1:2:3", "0.5:1.5:2+1eps", "--out", str(path)], capsys)
    assert code == 0
    assert len(read_table(path.read_text())) == 6


@pytest.mark.parametrize("argv", [
    ["table", "exp", "0:1:0"],
    ["table", "exp", "0:1"],
    ["table", "exp", "0+1eps:1:3"],
    ["table", "exp", "0:1:3", "0:1:3"],
])
def test_table_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


@pytest.mark.parametrize("text, expected", [
    ("0:1:3", [Dual(0.0), Dual(0.5), Dual(1.0)]),
    ("2:4:1+3eps", [Dual(2.0, 3.0)]),
    ("1.5+2eps", [Dual(1.5, 2.0)]),
])
def test_parse_axis(text, expected):
    assert parse_axis(text) == expected


def test_parse_axis_errors():
    with pytest.raises(DomainError):
        parse_axis("0:1:0")
    with pytest.raises(ParseError):
        parse_axis("0:1:3+1")


# verify


def test_verify_pochhammer_seed_7(capsys):
    code, out, _ = run(["verify", "pochhammer", "--seed", "7"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "OK 6/6 checks passed"
    for line in lines[:-1]:
        assert line.startswith("PASS pochhammer.")
        worst = float(line.split("worst=")[1].split()[0])
        assert worst < 1e-10


def test_verify_unknown_suite(capsys):
    code, _, err = run(["verify", "nosuch"], capsys)
    assert code == 2
    assert "nosuch" in err


def test_verify_all_twice_byte_identical():
    cmd = [sys.executable, "-m", "dualhyp", "verify", "all", "--seed", "1"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0, first.stdout.decode()[-2000:]
    assert first.stdout == second.stdout
    assert first.stdout.decode().splitlines()[-1].startswith("OK ")
