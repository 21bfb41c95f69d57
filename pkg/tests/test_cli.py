import csv
import io
import json
import shutil
import subprocess

import pytest

from degen_bergman.cli import effective_config, run
from degen_bergman.harness import CSV_COLUMNS

PERIODS = ["periods", "--family", "node", "--genus", "2", "--a", "2", "--b", "3",
           "--lambda", "1e-4"]


def test_periods_json(capsys):
    assert run(PERIODS) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sym_defect"] <= 1e-8 and doc["min_eig"] > 0


def test_constants_json(capsys):
    assert run(["constants", "--a", "2", "--b", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["c"][1] == pytest.approx(1.0) and len(doc) == 13


def test_sweep_csv(tmp_path):
    out = tmp_path / "s.csv"
    argv = ["sweep", "--family", "cusp2", "--genus", "2", "--a", "2", "--b", "3",
            "--lambda", "1e-2:1e-12:2", "--z", "0.3", "--format", "csv", "--out", str(out)]
    assert run(argv) == 0
    rows = list(csv.reader(io.StringIO(out.read_text(encoding="utf-8"))))
    assert tuple(rows[0]) == CSV_COLUMNS and len(rows) == 22
    # full round-trip precision
    first = rows[1]
    assert repr(float(first[5])) == first[5]


def test_sweep_json(capsys):
    assert run(["sweep", "--family", "node", "--a", "2", "--b", "3",
                "--lambda", "1e-3:1e-6:1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) >= {"rows", "fits", "verdicts"} and len(doc["rows"]) == 4


def test_kernel_rows(capsys):
    assert run(["kernel", "--family", "cusp1", "--a", "2", "--b", "3", "--lambda",
                "1e-6", "--z", "0.3", "0.2+0.25i", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 2 and all(r["k_lambda"] > 0 for r in rows)


def test_kernel_custom_curve(capsys):
    assert run(["kernel", "--family", "custom", "--proots", "0", "1", "2", "3", "4",
                "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["k0"] is None and rows[0]["k_lambda"] > 0


@pytest.mark.parametrize("argv", [
    ["periods", "--family", "node", "--a", "2"],
    ["periods", "--family", "nodal"],
    ["periods", "--family", "node", "--a", "2", "--b", "3", "--lambda", "1"],
    ["periods", "--family", "node", "--a", "2", "--b", "3", "--lambda", "1e-4+"],
    ["sweep", "--family", "node", "--a", "2", "--b", "3", "--lambda", "1e-2:1e-4"],
    ["constants", "--genus", "3", "--proots", "2", "3", "4", "5"],
    ["verify", "--suite", "nonsense"],
    ["frobnicate"],
])
def test_argument_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_verify_exit_status(capsys):
    assert run(["verify", "--suite", "lemmas"]) == 0
    assert "[PASS] criterion 9" in capsys.readouterr().out
    assert run(["verify", "--suite", "consistency"]) == 1


def test_config_file_layering(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"family": "node", "genus": 2, "a": 2, "b": "3",
                               "lambda": 1e-4, "z": [0.3]}), encoding="utf-8")
    sub, from_file, _ = effective_config(["periods", "--config", str(cfg)])
    _, from_flags, _ = effective_config(PERIODS)
    assert sub == "periods"
    assert {k: v for k, v in from_file.items() if k != "lambda"} == \
        {k: v for k, v in from_flags.items() if k != "lambda"}
    assert float(from_file["lambda"]) == float(from_flags["lambda"])
    # flags override the file
    _, over, _ = effective_config(["periods", "--config", str(cfg), "--lambda", "1e-6"])
    assert over["lambda"] == "1e-6"


def test_print_config_round_trip(tmp_path, capsys):
    assert run(PERIODS + ["--print-config"]) == 0
    text = capsys.readouterr().out
    path = tmp_path / "eff.json"
    path.write_text(text, encoding="utf-8")
    assert run(["periods", "--config", str(path), "--print-config"]) == 0
    assert capsys.readouterr().out == text
    assert run(["periods", "--config", str(path)]) == 0
    a = capsys.readouterr().out
    assert run(PERIODS) == 0
    assert capsys.readouterr().out == a


def test_unknown_config_key(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text('{"colour": 1}', encoding="utf-8")
    assert run(["periods", "--config", str(cfg)]) == 2


@pytest.mark.skipif(shutil.which("degen-bergman") is None, reason="console script not installed")
def test_console_script():
    r = subprocess.run(["degen-bergman", "constants", "--a", "2", "--b", "3"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and json.loads(r.stdout)["tau"][1] > 0
