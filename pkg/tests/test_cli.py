import json
import subprocess
import sys

import pytest

from umbral.cli import run
from umbral.polyring import Poly, parse_poly


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bell_table(capsys):
    code, out, _ = call(capsys, "umbra", "--name", "bell", "--order", "6", "--format", "csv")
    assert code == 0
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["1", "1", "2", "5", "15", "52", "203"]


def test_umbra_json_round_trip(capsys):
    from umbral import umbra as U

    code, out, _ = call(capsys, "umbra", "--name", "poisson", "--param", "lambda=3/2",
                        "--apply", "cumulant", "--order", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    # every cumulant of a Poisson(3/2) increment is 3/2
    assert U.Umbra.from_json(data).moments == (1,) + (parse_poly("3/2"),) * 5


def test_tsh_latex(capsys):
    code, out, _ = call(capsys, "tsh", "--process", "brownian", "--param", "s=1",
                        "--max-degree", "3", "--format", "latex")
    assert code == 0
    assert r"Q_{2}(x,t) &= x^{2} - t" in out


def test_tsh_json_polynomials(capsys):
    code, out, _ = call(capsys, "tsh", "--process", "poisson", "--param", "lambda=3/2",
                        "--max-degree", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    x, t = Poly.var("x"), Poly.var("t")
    assert Poly.from_json(rows[2]["Q"]) == x**2 - 3 * x * t + t**2 * 9 / 4 - t * 3 / 2


def test_tsh_from_config(tmp_path, capsys):
    cfg = tmp_path / "triplet.json"
    cfg.write_text(json.dumps({"c0": "0", "s2": "1", "measure": {"atoms": []}, "order": 6}))
    code, out, _ = call(capsys, "tsh", "--process", str(cfg), "--max-degree", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "2,x^2 - t"


def test_family(capsys):
    code, out, _ = call(capsys, "family", "--name", "hermite", "--max-degree", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "hermite"
    assert data["rows"][2]["umbral"] == "x^2 - t"


def test_ks_poly(capsys):
    code, out, _ = call(capsys, "ks", "--n", "2", "--format", "json")
    assert code == 0
    poly = Poly.from_json(json.loads(out)["poly"])
    s1, s2 = Poly.var("sigma1"), Poly.var("sigma2")
    assert poly == (s1**2 - s2) / 2


def test_ks_jumps(capsys):
    code, out, _ = call(capsys, "ks", "--n", "3", "--jumps", "1/2,-1/3,2", "--format", "json")
    assert code == 0
    assert json.loads(out)["integral"] == "-1/3"


def test_verify_ks(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "ks", "--order", "8")
    assert code == 0
    assert "passed" in out


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "special", "--order", "6", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["order"] == 6


def test_failing_suite_exits_one(capsys):
    # the families suite carries the literal Krawtchouk similarity, which is false
    code, out, _ = call(capsys, "verify", "--suite", "families", "--order", "8")
    assert code == 1
    assert "FAIL literal" in out


def test_mc(capsys):
    code, out, _ = call(capsys, "mc", "--process", "poisson", "--param", "lambda=2", "--paths", "20000",
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["umbra"],
    ["tsh", "--process", "nope"],
    ["tsh", "--process", "poisson", "--param", "lambda"],
    ["tsh", "--process", "poisson", "--param", "lambda=abc"],
    ["family", "--name", "legendre"],
    ["ks", "--n", "3", "--jumps", "1,x"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_order_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("UMBRAL_ORDER", "3")
    code, out, _ = call(capsys, "umbra", "--name", "ubar", "--format", "csv")
    assert out.splitlines()[-1] == "3,6"
    monkeypatch.setenv("UMBRAL_ORDER", "x")
    assert call(capsys, "umbra", "--name", "u")[0] == 2


def test_text_output_is_deterministic(capsys):
    first = call(capsys, "tsh", "--process", "gamma", "--max-degree", "5")[1]
    second = call(capsys, "tsh", "--process", "gamma", "--max-degree", "5")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "umbral", "umbra", "--name", "chi", "--order", "3",
                           "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["n,moment", "0,1", "1,1", "2,0", "3,0"]
