import io
import json
import subprocess
import sys

import pytest

from gammagrammar.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stdin=io.StringIO(stdin), stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_derive_examples():
    assert run("derive", "--grammar", "stirling", "--start", "x", "--steps", "2")[:2] == \
        (0, "x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z\n")
    assert run("derive", "--grammar", "stirling", "--start", "x", "--steps", "0")[1] == "x\n"
    assert run("derive", "--alternating", "jacobi-1,jacobi-2", "--start", "x",
               "--rounds", "1")[1] == "x*y^2*z + x^2*y*z\n"


def test_derive_rules_file(tmp_path):
    f = tmp_path / "euler.rules"
    f.write_text("x -> x*y\ny -> x*y\n")
    code, out, _ = run("derive", "--rules", str(f), "--start", "x", "--steps", "2")
    assert (code, out) == (0, "x*y^2 + x^2*y\n")


def test_enumerate_examples():
    assert run("enumerate", "--family", "typeB-derangements", "--n", "3",
               "--stats", "wexc:x")[1] == "1 + 20*x + 8*x^2\n"
    assert run("enumerate", "--family", "stirling", "--n", "1")[1] == "x*y*z\n"
    assert run("enumerate", "--family", "legendre", "--n", "3", "--stats", "des:x")[1] == \
        "8*x + 240*x^2 + 984*x^3 + 864*x^4 + 144*x^5\n"


def test_enumerate_json_is_sorted_and_stable():
    a = run("--json", "enumerate", "--family", "jacobi", "--n", "2")[1]
    b = run("enumerate", "--family", "jacobi", "--n", "2", "--json", "--workers", "2")[1]
    assert a == b
    data = json.loads(a)
    assert list(data) == sorted(data)
    assert data["family"] == "jacobi"


def test_gamma_pipe_from_enumerate():
    s1 = run("--json", "enumerate", "--family", "jacobi", "--n", "1")[1]
    code, out, _ = run("--json", "gamma", stdin=s1)
    assert code == 0
    assert {k: v["gamma"] for k, v in json.loads(out)["slices"].items()} == {"1": [0, 1]}


def test_gamma_univariate_constant():
    assert run("gamma", "--poly", "1", "--univariate", "--d", "0")[1] == "1\n"


def test_gamma_rejects_asymmetric():
    code, _, err = run("gamma", "--poly", "x^2*z + x*y*z")
    assert code == 2 and "NotSymmetric" in err


def test_table_formats():
    assert run("table", "--name", "g", "--n", "2")[1] == "i\tj\tvalue\n0\t1\t4\n2\t0\t1\n"
    data = json.loads(run("table", "--name", "g", "--n", "2", "--format", "json")[1])
    assert data["entries"][0] == {"i": 0, "j": 1, "value": 4}


def test_orbit_json():
    code, out, _ = run("--json", "orbit", "--family", "stirling", "--n", "2")
    assert code == 0
    assert [o["orbit_size"] for o in json.loads(out)["orbits"]] == [2, 1]


def test_verify_pass_and_report():
    assert run("verify", "--check", "stirling-triple", "--n", "4")[0] == 0
    assert run("verify", "--check", "leibniz", "--n", "200")[0] == 0
    code, out, _ = run("--json", "verify", "--check", "conjecture-jsp", "--k", "3")
    assert code == 0
    res = json.loads(out)["checks"][0]
    assert res["status"] == "report" and len(res["details"]["verdicts"]) == 3


def test_verify_failure_exit(monkeypatch):
    from gammagrammar import checks

    def boom(**_):
        raise checks.Failure("forced", value=1)

    entry = checks.CATALOG["g-corollary"]
    monkeypatch.setitem(checks.CATALOG, "g-corollary", entry.__class__(
        entry.id, entry.description, entry.budget, entry.pipelines, boom))
    code, out, _ = run("--json", "verify", "--check", "g-corollary")
    assert code == 1
    assert json.loads(out)["checks"][0]["counterexample"] == {"message": "forced", "value": 1}


def test_verify_list_ids_unique():
    ids = [line.split("\t")[0] for line in run("verify", "--list")[1].splitlines()]
    assert len(ids) == len(set(ids)) and "golden" in ids


@pytest.mark.parametrize("argv", [
    ("verify", "--check", "nope"),
    ("frobnicate",),
    ("derive", "--grammar", "nope", "--start", "x"),
    ("derive", "--grammar", "stirling", "--start", "x^"),
    ("enumerate", "--family", "stirling", "--n", "2", "--stats", "wexc:x"),
    ("gamma",),
    ("--workers", "0", "table", "--name", "g", "--n", "1"),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_budget_exit(monkeypatch):
    assert run("enumerate", "--family", "stirling", "--n", "9")[0] == 3
    assert run("--budget", "2", "enumerate", "--family", "stirling", "--n", "3")[0] == 3
    monkeypatch.setenv("GAMMAGRAMMAR_BUDGET", "2")
    assert run("enumerate", "--family", "stirling", "--n", "3")[0] == 3
    assert run("--budget", "3", "enumerate", "--family", "stirling", "--n", "3")[0] == 0


def test_time_limit_exit():
    code, _, err = run("--time-limit", "1", "--budget", "5", "enumerate", "--family", "jacobi",
                       "--n", "5")
    assert code == 3 and "time limit" in err


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "gammagrammar.cli", "table", "--name", "a",
                           "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "k\tvalue\n1\t1\n2\t8\n"
