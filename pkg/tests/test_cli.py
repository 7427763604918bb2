import io
import json
import subprocess
import sys

import pytest

from sympdirac.cli import EXIT_FAIL, EXIT_OK, EXIT_SIZE, EXIT_USAGE, main


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_decompose_x1():
    code, out, _ = run("decompose", "--n", "1", "x1")
    assert code == EXIT_OK
    assert "ell=1 X_s^0: 2x1 - x2 q1^2" in out
    assert "ell=0 X_s^1: q1" in out
    assert "reconstruction: OK" in out


def test_decompose_zero_and_x2():
    code, out, _ = run("decompose", "--output", "json", "0")
    assert code == EXIT_OK and json.loads(out)["degrees"] == []
    code, out, _ = run("decompose", "--output", "json", "x2")
    data = json.loads(out)
    assert [c["ell"] for c in data["degrees"][0]["components"]] == [1]
    assert data["degrees"][0]["components"][0]["m"] == "x2"


def test_decompose_mixed_degrees_and_stdin(monkeypatch):
    code, out, _ = run("decompose", "--output", "csv", stdin="x1 + q1 + x1 x2\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "k,ell,xs_power,m"
    assert {ln.split(",")[0] for ln in lines[1:]} == {"0", "1", "2"}


def test_decompose_file(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("x1\n")
    code, out, _ = run("decompose", "-f", str(f))
    assert code == EXIT_OK and "q1" in out


def test_apply():
    assert run("apply", "Ds", "x1")[:2] == (EXIT_OK, "q1\n")
    assert run("apply", "Xs", "q1")[1] == "-x1 + x2 q1^2\n"
    assert run("apply", "Euler", "x1 x2 q1")[1] == "2x1 x2 q1\n"
    assert run("apply", "Gamma", "2x1 - x2 q1^2")[1] == "-2x1 + x2 q1^2\n"
    assert run("apply", "e1", "1")[1] == "q1\n"
    assert run("apply", "f1", "q1^2")[1] == "-2q1\n"
    assert run("apply", "vf:Z:1:1", "x2")[1] == "2x1\n"
    assert run("apply", "L:e1e1", "1")[1] == "i q1^2\n"
    assert run("apply", "Lind:e1f1+f1e1", "q1")[1] == "3q1\n"
    code, out, _ = run("apply", "rho:f1f1")
    assert code == EXIT_OK and out == "0 0\n2 0\n"


def test_apply_errors():
    assert run("apply", "Nope", "x1")[0] == EXIT_USAGE
    assert run("apply", "vf:X:1", "x1")[0] == EXIT_USAGE
    assert run("apply", "L:e1e1", "--scalar", "rational", "1")[0] == EXIT_USAGE
    assert run("apply", "rho:e1f1")[0] == EXIT_USAGE


def test_parse_error_exit_code():
    code, _, err = run("decompose", "x1 +")
    assert code == EXIT_USAGE and "1:5" in err
    assert run("decompose", "x3")[0] == EXIT_USAGE
    assert run("decompose", "--scalar", "rational", "i x1")[0] == EXIT_USAGE


def test_usage_errors():
    assert run()[0] == EXIT_USAGE
    assert run("bogus")[0] == EXIT_USAGE
    assert run("basis", "--k", "1", "--n", "0")[0] == EXIT_USAGE
    assert run("basis", "--k", "1", "--dmax", "-1")[0] == EXIT_USAGE
    assert run("dimtable", "--kmax", "1", "--size-cap", "0")[0] == EXIT_USAGE


def test_coeffs():
    code, out, _ = run("coeffs", "--k", "1", "--output", "csv")
    assert code == EXIT_OK
    rows = [ln.split(",") for ln in out.splitlines()]
    header = rows[0]
    recs = [dict(zip(header, r)) for r in rows[1:]]
    a10 = [r for r in recs if r["quantity"] == "a" and r["i"] == "1" and r["j"] == "0"]
    assert a10[0]["value"] == "1"
    assert any(r["differs"] == "yes" for r in recs if r["quantity"] == "a")
    code, out, _ = run("coeffs", "--k", "2")
    assert "<-- differ" in out and "Casimir" in out


def test_dimtable():
    code, out, _ = run("dimtable", "--kmax", "1", "--n", "1", "--dmax", "2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,k,dmax,parity,dim"
    assert "1,0,2,all,3" in lines and "1,1,2,all,2" in lines
    code, out, _ = run("dimtable", "--kmax", "0", "--output", "json")
    assert json.loads(out)[0] == {"n": 1, "k": 0, "dmax": 0, "parity": "even", "dim": 1}


def test_basis():
    code, out, _ = run("basis", "--k", "1", "--dmax", "2")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["x2", "x1 - 1/2 x2 q1^2"]
    code, out, _ = run("basis", "--k", "1", "--dmax", "2", "--parity", "odd", "--output", "json")
    assert json.loads(out)["dimension"] == 0


def test_size_cap_exit():
    code, _, err = run("basis", "--n", "3", "--k", "3", "--dmax", "9", "--size-cap", "100")
    assert code == EXIT_SIZE and "k=3" in err
    assert run("dimtable", "--kmax", "3", "--n", "2", "--size-cap", "10")[0] == EXIT_SIZE


VERIFY_SMALL = ["verify", "--n", "1", "--samples", "8", "--proj-samples", "3", "--degree", "3", "--spinor", "3"]


def test_verify_small_passes_and_is_deterministic():
    c1, o1, _ = run(*VERIFY_SMALL, "--seed", "5")
    c2, o2, _ = run(*VERIFY_SMALL, "--seed", "5")
    assert c1 == EXIT_OK and o1 == o2
    assert "seed=5" in o1.splitlines()[0]
    assert "[FAIL]" not in o1


def test_verify_injected_fault():
    code, out, _ = run(*VERIFY_SMALL, "--inject-fault", "xs-sign")
    assert code == EXIT_FAIL
    assert "[FAIL] n=1 [D_s, X_s] = E+n" in out


def test_verify_json_csv():
    code, out, _ = run(*VERIFY_SMALL, "--output", "json")
    data = json.loads(out)
    assert data["ok"] and data["seed"] == 0 and data["laws"]
    code, out, _ = run(*VERIFY_SMALL, "--output", "csv")
    assert out.startswith("n,law,checked,failures,status")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "sympdirac", "apply", "Ds", "x2 q1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "1\n"
    out = subprocess.run([sys.executable, "-m", "sympdirac", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "decompose" in out.stdout
