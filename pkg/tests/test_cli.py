"""Command-line interface: argument handling, output schemas, exit codes.

Everything runs in-process through main(argv) so coverage tools see it;
one subprocess test at the end confirms the installed entry point works.
"""
import json
import math
import os
import subprocess
import sys

import pytest

from teambonus import CostFunction, EnvParams, solve_regime
from teambonus.cli import (
    CROSSOVER_SCHEMA,
    MAP_SCHEMA,
    SOLVE_SCHEMA,
    SWEEP_SCHEMA,
    UNTABLE_SCHEMA,
    VERIFY_SCHEMA,
    main,
)

QUAD = CostFunction.from_string("quadratic:1")


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def parse_csv(text):
    lines = text.rstrip("\n").split("\n")
    header = lines[0]
    columns = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return header, columns, rows


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def test_solve_json_payload(capsys):
    code, out, err = run(capsys, "solve", "--regime", "integrated",
                         "--n", "10", "--sigma", "0.3", "--delta", "0.7",
                         "--u", "0.1", "--u0", "0.5")
    assert code == 0
    assert err == ""
    payload = json.loads(out)
    assert payload["schema"] == SOLVE_SCHEMA
    assert payload["params"]["regime"] == "integrated"
    assert payload["params"]["sigma"] == 0.3
    assert payload["params"]["cost"] == "quadratic:1"
    sol = solve_regime("IntegratedManager",
                       EnvParams(n=10, sigma=0.3, delta=0.7, u_bar=0.1,
                                 u0_bar=0.5), QUAD)
    assert payload["solution"]["effort"] == pytest.approx(sol.effort,
                                                          abs=1e-12)
    assert payload["solution"]["owner_profit"] == pytest.approx(
        sol.owner_profit, abs=1e-12)
    assert payload["solution"]["feasible"] is True


def test_solve_infeasible_exits_3_but_still_reports(capsys):
    code, out, err = run(capsys, "solve", "--regime", "equal",
                         "--n", "6", "--sigma", "0.4")
    assert code == 3
    assert "infeasible" in err
    payload = json.loads(out)
    assert payload["solution"]["feasible"] is False


def test_solve_rejects_csv_format(capsys):
    code, out, err = run(capsys, "solve", "--regime", "equal",
                         "--format", "csv")
    assert code == 2
    assert "error:" in err


def test_bad_parameter_value_exits_2(capsys):
    code, out, err = run(capsys, "solve", "--regime", "equal",
                         "--sigma", "-1")
    assert code == 2
    assert "error:" in err


def test_unknown_subcommand_exits_2(capsys):
    code, out, err = run(capsys, "frobnicate")
    assert code == 2


def test_missing_required_flag_exits_2(capsys):
    code, out, err = run(capsys, "solve")
    assert code == 2


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_csv_schema_and_shape(capsys):
    code, out, err = run(capsys, "sweep", "--vary", "sigma",
                         "--from", "0", "--to", "0.4", "--steps", "11",
                         "--n", "6", "--u0", "0.1")
    assert code == 0
    header, columns, rows = parse_csv(out)
    assert header == "# " + SWEEP_SCHEMA
    assert columns == ["regime", "vary_name", "vary_value", "branch",
                       "effort", "surplus_pw", "owner_pw", "manager_pw",
                       "feasible"]
    assert len(rows) == 11 * 4
    assert {r[0] for r in rows} == {"ObservableBenchmark", "EqualBonus",
                                    "IntegratedManager", "SeparateManager"}
    assert all(r[1] == "sigma" for r in rows)
    assert all(r[8] in ("true", "false") for r in rows)


def test_sweep_regime_filter_and_json(capsys):
    code, out, err = run(capsys, "sweep", "--vary", "u0",
                         "--from", "0", "--to", "0.5", "--steps", "6",
                         "--regimes", "separate", "--format", "json",
                         "--n", "6", "--sigma", "0.2")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == SWEEP_SCHEMA
    assert len(payload["rows"]) == 6
    assert all(r["regime"] == "SeparateManager" for r in payload["rows"])


def test_sweep_unknown_regime_exits_2(capsys):
    code, out, err = run(capsys, "sweep", "--vary", "sigma",
                         "--from", "0", "--to", "0.4", "--steps", "5",
                         "--regimes", "sharded")
    assert code == 2
    assert "unknown regime" in err


def test_sweep_infeasible_rows_write_nan(capsys):
    code, out, err = run(capsys, "sweep", "--vary", "sigma",
                         "--from", "0.35", "--to", "0.45", "--steps", "3",
                         "--regimes", "equal", "--n", "6")
    assert code == 0
    _, columns, rows = parse_csv(out)
    i = columns.index("owner_pw")
    assert all(r[i] == "nan" for r in rows)
    assert all(r[-1] == "false" for r in rows)


# ---------------------------------------------------------------------------
# map
# ---------------------------------------------------------------------------

def test_map_csv_header_and_grid(capsys):
    code, out, err = run(capsys, "map",
                         "--axis1", "sigma:0:0.3:4",
                         "--axis2", "u0:0:0.4:3",
                         "--n", "6")
    assert code == 0
    header, columns, rows = parse_csv(out)
    assert header == "# %s axis1=sigma axis2=u0" % MAP_SCHEMA
    assert columns == ["axis1", "axis2", "regime_code", "owner_profit"]
    assert len(rows) == 4 * 3
    codes = {int(r[2]) for r in rows}
    assert codes <= {0, 1, 2, 3}
    for r in rows:
        if r[2] == "0":
            assert r[3] == "nan"
        else:
            assert math.isfinite(float(r[3]))


def test_map_bad_axis_spec_exits_2(capsys):
    code, out, err = run(capsys, "map", "--axis1", "sigma:0:0.3",
                         "--axis2", "u0:0:0.4:3")
    assert code == 2
    assert "axis" in err


# ---------------------------------------------------------------------------
# crossover
# ---------------------------------------------------------------------------

def test_crossover_json(capsys):
    code, out, err = run(capsys, "crossover", "--vary", "sigma",
                         "--regime-a", "equal", "--regime-b", "integrated",
                         "--from", "0.15", "--to", "0.21",
                         "--n", "6", "--u0", "0.06")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == CROSSOVER_SCHEMA
    assert payload["value"] == pytest.approx(0.20175247192382811, abs=1e-6)
    assert payload["profit_a"] == pytest.approx(payload["profit_b"],
                                                abs=1e-4)


def test_crossover_without_sign_change_exits_2(capsys):
    code, out, err = run(capsys, "crossover", "--vary", "sigma",
                         "--regime-a", "equal", "--regime-b", "integrated",
                         "--from", "0.01", "--to", "0.05",
                         "--n", "6", "--u0", "0.3")
    assert code == 2


# ---------------------------------------------------------------------------
# un-table
# ---------------------------------------------------------------------------

def test_untable_csv(capsys):
    code, out, err = run(capsys, "un-table", "--n-list", "3,6",
                         "--phi-list", "0,1")
    assert code == 0
    header, columns, rows = parse_csv(out)
    assert header == "# " + UNTABLE_SCHEMA
    assert columns == ["n", "phi", "sigma_star", "u_n"]
    assert len(rows) == 4
    # sigma* for quadratic cost: (delta/(1-delta)) (1 - sqrt(2u)) / sqrt(2 pi n)
    by_key = {(r[0], r[1]): r for r in rows}
    closed = (0.7 / 0.3) * (1 - math.sqrt(0.2)) / math.sqrt(12 * math.pi)
    assert float(by_key[("6", "0")][2]) == pytest.approx(closed, abs=1e-9)
    assert float(by_key[("6", "0")][3]) == pytest.approx(2.4, abs=1e-9)
    assert float(by_key[("6", "1")][3]) == pytest.approx(
        1.9888622090529648, abs=1e-7)


def test_untable_bad_list_exits_2(capsys):
    code, out, err = run(capsys, "un-table", "--n-list", "3,six")
    assert code == 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_battery_passes(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == VERIFY_SCHEMA
    assert payload["all_passed"] is True
    assert len(payload["checks"]) >= 6
    for check in payload["checks"]:
        assert check["passed"], check
        assert check["name"] and check["detail"]


# ---------------------------------------------------------------------------
# config file and output redirection
# ---------------------------------------------------------------------------

def test_config_file_seeds_params_and_flags_win(capsys, tmp_path):
    cfg = tmp_path / "point.cfg"
    cfg.write_text("# a comment\nsigma = 0.5\nn = 4\ndelta=0.8\n")
    code, out, _ = run(capsys, "solve", "--regime", "observable",
                       "--config", str(cfg))
    assert code == 0
    params = json.loads(out)["params"]
    assert params["sigma"] == 0.5
    assert params["n"] == 4
    assert params["delta"] == 0.8

    code, out, _ = run(capsys, "solve", "--regime", "observable",
                       "--config", str(cfg), "--sigma", "0.2")
    assert code == 0
    params = json.loads(out)["params"]
    assert params["sigma"] == 0.2
    assert params["n"] == 4


def test_config_unknown_key_exits_2(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("volatility = 0.5\n")
    code, out, err = run(capsys, "solve", "--regime", "observable",
                         "--config", str(cfg))
    assert code == 2
    assert "unknown key" in err


def test_config_missing_file_exits_2(capsys, tmp_path):
    code, out, err = run(capsys, "solve", "--regime", "observable",
                         "--config", str(tmp_path / "nope.cfg"))
    assert code == 2


def test_output_file_writes_and_silences_stdout(capsys, tmp_path):
    target = tmp_path / "sol.json"
    code, out, err = run(capsys, "solve", "--regime", "observable",
                         "--output", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["schema"] == SOLVE_SCHEMA


def test_relative_output_lands_under_outdir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TEAMBONUS_OUTDIR", str(tmp_path))
    code, out, err = run(capsys, "un-table", "--n-list", "2",
                         "--phi-list", "0", "--output", "runs/un.csv")
    assert code == 0
    assert (tmp_path / "runs" / "un.csv").exists()


def test_absolute_output_ignores_outdir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TEAMBONUS_OUTDIR", str(tmp_path / "elsewhere"))
    target = tmp_path / "direct.csv"
    code, out, err = run(capsys, "un-table", "--n-list", "2",
                         "--phi-list", "0", "--output", str(target))
    assert code == 0
    assert target.exists()
    assert not (tmp_path / "elsewhere").exists()


# ---------------------------------------------------------------------------
# installed entry point
# ---------------------------------------------------------------------------

def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "teambonus.cli", "un-table",
         "--n-list", "2", "--phi-list", "0"],
        capture_output=True, text=True,
        env={**os.environ, "PYTHONPATH": ""})
    assert proc.returncode == 0
    assert proc.stdout.startswith("# " + UNTABLE_SCHEMA)
