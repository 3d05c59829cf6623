from __future__ import annotations

import json
import subprocess
import sys

import pytest

from flatcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "--n", "6", "--format", "count")[:2] == (0, "122\n")
    assert run(capsys, "enumerate", "--n", "1")[:2] == (0, "1\n")
    assert run(capsys, "enumerate", "--n", "3", "--avoid", "121", "--format", "count")[1] == "4\n"
    assert run(capsys, "enumerate", "--n", "3", "--trun", "1")[1] == "1,1,1\n1,2,1\n"


def test_enumerate_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "0"])
    assert exc.value.code == 2
    assert run(capsys, "enumerate", "--n", "3", "--avoid", "13")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "3", "--avoid", "12", "--trun", "1"])
    assert exc.value.code == 2


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "--id", "F11", "--terms", "4", "--set", "q=1")
    assert code == 0
    assert json.loads(out)["integers"] == [0, 1, 2, 5, 14]
    code, out, _ = run(capsys, "gf", "--id", "trun", "--terms", "5", "--set", "y=1")
    assert json.loads(out)["integers"] == [0, 1, 2, 5, 14, 41]
    code, out, _ = run(capsys, "gf", "--id", "A", "--terms", "3")
    x3 = json.loads(out)["coefficients"][3]
    assert {(t["y"], t["p"], t["q"], t["r"]): t["coef"] for t in x3} == {
        (0, 0, 0, 2): "1", (0, 1, 1, 0): "1", (1, 1, 0, 1): "2", (2, 2, 0, 0): "1"
    }


def test_gf_errors(capsys):
    assert run(capsys, "gf", "--id", "nope")[0] == 2
    assert run(capsys, "gf", "--id", "A", "--set", "z=1")[0] == 2


def test_recurrence(capsys):
    code, out, _ = run(capsys, "recurrence", "--family", "a", "--n", "3", "--uvw")
    lines = [json.loads(line) for line in out.splitlines()]
    cell = next(d for d in lines if d.get("n") == 2 and d.get("m") == 2)
    assert cell["value"] == [{"y": 0, "p": 1, "q": 0, "r": 0, "coef": "1"}]
    assert any(d.get("seq") == "w" for d in lines)


def test_totals(capsys):
    code, out, _ = run(capsys, "totals", "--pattern", "123", "--max-n", "5")
    assert code == 0
    assert "123,3,1,1,1,true" in out.splitlines()
    assert "11,3,4,4,4,true" in run(capsys, "totals", "--pattern", "11", "--max-n", "4")[1]
    rows = json.loads(run(capsys, "totals", "--pattern", "312", "--max-n", "6", "--format", "json")[1])
    assert {"pattern": "312", "n": 5, "formula": 1, "oracle": 1, "gf_derivative": 1, "match": True} in rows


def test_totals_all_beyond_oracle(capsys):
    code, out, _ = run(capsys, "totals", "--max-n", "14", "--oracle-max", "6")
    assert code == 0
    assert "312,14," in out and ",,"  in out


def test_avoid(capsys):
    code, out, _ = run(capsys, "avoid", "--pattern", "111", "--max-n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "pattern,n,formula,oracle,gf,match"
    assert "111,3,4,4,4,true" in lines
    assert "111,2,,2,2,true" in lines


def test_bijection(capsys):
    assert run(capsys, "bijection", "--map", "valley", "--word", "1,2,3,1,2", "--mark", "2")[1] == "1,2,1,2 mark=1\n"
    assert run(capsys, "bijection", "--map", "hat", "--word", "1,2,2,1")[1] == "1,2,1,1\n"
    assert run(capsys, "bijection", "--map", "prime", "--word", "0,1")[1] == "1,2,1\n"
    assert run(capsys, "bijection", "--map", "prime_inverse", "--word", "1,2,1")[1] == "0,1\n"
    assert run(capsys, "bijection", "--map", "trun", "--word", "1,2,3", "--mark", "2")[1] == "1,2,3\n"
    assert run(capsys, "bijection", "--map", "trun_inverse", "--word", "1,2,1")[1] == "1,2,3 mark=1\n"
    assert run(capsys, "bijection", "--map", "valley", "--word", "1,2,3", "--mark", "0")[0] == 2
    assert run(capsys, "bijection", "--map", "trun", "--word", "1,2,3")[0] == 2
    assert run(capsys, "bijection", "--map", "tilde", "--word", "1,3")[0] == 2


def test_bijection_verify(capsys):
    code, out, _ = run(capsys, "bijection", "--verify", "--max-n", "6")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "table1", "--max-n", "8")
    b = run(capsys, "verify", "--suite", "table1", "--max-n", "8")
    assert a == b
    assert a[0] == 0
    report = json.loads(a[1])
    assert report["suite"] == "table1" and report["ok"] is True
    assert all(c["status"] == "pass" for c in report["cases"])


def test_verify_functional(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "functional", "--max-n", "20")
    assert code == 0 and json.loads(out)["ok"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "flatcat", "enumerate", "--n", "4", "--format", "count"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "14\n"
