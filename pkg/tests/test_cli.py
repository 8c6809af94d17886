import csv
import io
import json

import pytest

from mdnewton import cli, multidouble
from mdnewton.multidouble import MultiDouble


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_small(tmp_path, capsys):
    report, log = tmp_path / "r.json", tmp_path / "log.jsonl"
    code, _, err = run_cli(capsys, "run", "--dim", "3", "--order", "4", "--precision", "d",
                           "--columns", "1", "--report", str(report), "--log", str(log))
    assert code == 0 and err == ""
    text = report.read_text()
    data = json.loads(text)
    assert cli.dumps(data) + "\n" == text
    assert data["converged"] and data["iterations"] <= 5
    assert float.fromhex(data["forward_error"]["hex"]) <= 1e3 * 2.2e-16 * 3
    assert data["ledger"]["classes"]["qr"]["invocations"] == 1
    assert len(data["fabry"]) == 3
    assert {"python", "numpy", "numba", "threads"} <= set(data["environment"])
    lines = log.read_text().splitlines()
    assert len(lines) == data["iterations"]
    assert json.loads(lines[-1])["iteration"] == data["iterations"]


def test_run_reproducible(tmp_path, capsys):
    outs = []
    for threads in ("1", "2"):
        path = tmp_path / f"r{threads}.json"
        run_cli(capsys, "run", "--dim", "4", "--order", "8", "--seed", "3", "--threads", threads,
                "--save-solution", "--report", str(path))
        outs.append(json.loads(path.read_text()))
    assert outs[0]["solution"] == outs[1]["solution"]
    assert outs[0]["ops"] == outs[1]["ops"]


def test_order_warning_and_nonconvergence(capsys):
    code, out, err = run_cli(capsys, "run", "--dim", "2", "--order", "96", "--precision", "od",
                             "--max-iters", "1")
    assert "order exceeds octo-double guarantee" in err
    assert code == 2
    assert json.loads(out)["converged"] is False


def test_low_precision_warning(capsys):
    code, _, err = run_cli(capsys, "run", "--dim", "2", "--order", "12", "--precision", "d",
                           "--report", "/dev/null")
    assert "recommended" in err


@pytest.mark.parametrize("argv", [["run", "--dim", "0"], ["run", "--precision", "hd"],
                                  ["run", "--damping", "1.5"], ["bogus"],
                                  ["run", "--dim", "2", "--residual-sample", "3"],
                                  ["sweep", "--axis", "order", "--values", "x"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_residual_sample(capsys):
    code, out, _ = run_cli(capsys, "run", "--dim", "4", "--order", "4", "--residual-sample", "1")
    assert code == 0 and json.loads(out)["config"]["residual_sample"] == 1


def test_sweep(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--axis", "precision", "--values", "d,dd",
                           "--dim", "3", "--order", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["value"] for r in rows] == ["d", "dd"]
    assert all(r["status"] == "ok" and r["converged"] == "True" for r in rows)
    assert set(cli.SWEEP_COLUMNS) == set(rows[0])


def test_sweep_row_matches_run(capsys):
    _, out, _ = run_cli(capsys, "sweep", "--axis", "dim", "--values", "3", "--order", "4",
                        "--seed", "5")
    row = next(csv.DictReader(io.StringIO(out)))
    _, rep, _ = run_cli(capsys, "run", "--dim", "3", "--order", "4", "--seed", "5")
    rep = json.loads(rep)
    assert int(row["iterations"]) == rep["iterations"]
    assert row["forward_error"] == rep["forward_error"]["decimal"]
    assert int(row["total_ops"]) == rep["ledger"]["total_ops"]


def test_empty_sweep(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--axis", "order", "--values", "")
    assert code == 0
    assert out.strip() == ",".join(cli.SWEEP_COLUMNS)


def test_verify_all_pass(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4 and all("PASS" in line for line in lines)


def test_verify_detects_faulty_multiply(capsys, monkeypatch):
    real = multidouble.md_mul

    def faulty(a, b, p=None):
        r = real(a, b, p)
        return MultiDouble([r.limbs[0]] + [0.0] * (len(r.limbs) - 1))

    monkeypatch.setattr(multidouble, "md_mul", faulty)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    status = {line.split("  ")[0].strip(): ("PASS" in line) for line in out.strip().splitlines()}
    assert status["dyadic arithmetic"] is False
    assert status["dense Toeplitz"] and status["symbolic gradient"] and status["exp-product law"]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "mdnewton", "verify", "--suite", "gradient"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
