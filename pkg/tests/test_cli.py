"""End-to-end CLI coverage via cli.main(argv): exit codes, output shapes, JSON."""

import csv
import io
import json

import pytest

from ineqforge import cli

FAST = ["--samples", "801", "--refine-depth", "20"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- list ------------------------------------------------------------------------

def test_list_default_prints_all_sections(capsys):
    code, out, err = run(capsys, "list")
    assert code == 0 and err == ""
    assert "chains:" in out and "probes:" in out and "kernels:" in out
    assert "M1" in out and "M1-lower" in out and "sinc" in out


def test_list_single_section(capsys):
    code, out, err = run(capsys, "list", "--probes")
    assert code == 0
    assert "probes:" in out
    assert "chains:" not in out and "kernels:" not in out


# --- verify ---------------------------------------------------------------------

def test_verify_good_chain_exits_zero(capsys):
    code, out, err = run(capsys, "verify", "M1", *FAST)
    assert code == 0 and err == ""
    assert "chain M1 [kernel]: verified_numeric" in out
    assert "min margin" in out


def test_verify_mean_chain_reports_twin_margins(capsys):
    code, out, err = run(capsys, "verify", "M1c-i1", *FAST)
    assert code == 0
    assert "twin margins: max deviation" in out
    assert "(ok)" in out


def test_verify_unknown_chain_exits_two(capsys):
    code, out, err = run(capsys, "verify", "no-such-chain", *FAST)
    assert code == 2
    assert out == ""
    assert "error:" in err
    assert "M1" in err  # the message lists what is available


def test_verify_json_to_stdout_parses(capsys):
    code, out, err = run(capsys, "verify", "M23c", "--json", "-", *FAST)
    assert code == 0
    payload = json.loads(out[out.index("{"):])
    assert payload["chain"] == "M23c"
    assert payload["verdict"] == "verified_numeric"
    assert len(payload["links"]) >= 1


def test_verify_json_to_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, err = run(capsys, "verify", "M1", "--json", str(target), *FAST)
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["chain"] == "M1"


# --- sharpness --------------------------------------------------------------------

def test_sharpness_falsifies_and_exits_zero(capsys):
    code, out, err = run(capsys, "sharpness", "M1-lower", *FAST)
    assert code == 0 and err == ""
    assert "verdict: falsified" in out
    assert "witness:" in out


def test_sharpness_unknown_probe_exits_two(capsys):
    code, out, err = run(capsys, "sharpness", "nope", *FAST)
    assert code == 2
    assert "error:" in err


def test_sharpness_json(capsys, tmp_path):
    target = tmp_path / "probe.json"
    code, out, err = run(capsys, "sharpness", "M6a-p", "--json", str(target), *FAST)
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["verdict"] == "falsified"
    lo, hi = payload["interval"]
    assert lo <= payload["witness"]["t"] <= hi


# --- constants ----------------------------------------------------------------------

def test_constants_prints_values_and_residuals(capsys):
    code, out, err = run(capsys, "constants")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("p1 = 0.65055367") for line in lines)
    assert any(line.startswith("p0 = 0.34730724") for line in lines)
    assert all("(residual" in line for line in lines)
    assert any(line.startswith("ln3 = ") for line in lines)


def test_constants_json_residuals_are_small(capsys, tmp_path):
    target = tmp_path / "constants.json"
    code, out, err = run(capsys, "constants", "--json", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    byname = {entry["name"]: entry for entry in payload}
    assert len(byname) == 12
    assert abs(byname["p1"]["value"] - 0.6505536797606640) < 1e-15
    for entry in payload:
        assert abs(entry["residual"]) < 1e-13


# --- means -------------------------------------------------------------------------

def test_means_output_for_1_3(capsys):
    code, out, err = run(capsys, "means", "--a", "1", "--b", "3")
    assert code == 0
    assert "= 1.9098593171027438" in out  # first Seiffert mean of (1, 3)
    assert "power(r=2/3)" in out


def test_means_json_round_trip(capsys, tmp_path):
    target = tmp_path / "means.json"
    code, out, err = run(capsys, "means", "--a", "1", "--b", "3", "--json", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["A"] == 2.0
    assert payload["P"] == pytest.approx(1.9098593171027440292, rel=1e-15)
    assert "power(r=2/3)" in payload
    assert len(payload) == 12


def test_means_rejects_bad_pair(capsys):
    code, out, err = run(capsys, "means", "--a", "-1", "--b", "3")
    assert code == 2
    assert "error:" in err


# --- table --------------------------------------------------------------------------

def test_table_csv_shape_and_determinism(capsys, tmp_path):
    code, out, err = run(capsys, "table", "sinc", "--start", "0.1", "--stop", "1.0",
                         "--count", "10")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t", "value"]
    assert len(rows) == 11
    # values are full-precision reprs that survive a float round trip
    assert float(rows[1][0]) == 0.1
    assert rows[1][1] == repr(__import__("math").sin(0.1) / 0.1)
    code2, out2, err2 = run(capsys, "table", "sinc", "--start", "0.1", "--stop", "1.0",
                            "--count", "10")
    assert out2 == out


def test_table_to_file(capsys, tmp_path):
    target = tmp_path / "k.csv"
    code, out, err = run(capsys, "table", "u(p=-1)", "--count", "5",
                         "--csv", str(target))
    assert code == 0 and out == ""
    rows = list(csv.reader(target.open()))
    assert rows[0] == ["t", "value"]
    assert len(rows) == 6


def test_table_bad_range_and_count(capsys):
    code, out, err = run(capsys, "table", "sinc", "--start", "1.0", "--stop", "0.5")
    assert code == 2 and "empty range" in err
    code, out, err = run(capsys, "table", "sinc", "--count", "1")
    assert code == 2 and "--count" in err


def test_table_unknown_kernel(capsys):
    code, out, err = run(capsys, "table", "wat")
    assert code == 2
    assert "error:" in err and "sinc" in err


# --- suite ---------------------------------------------------------------------------

def test_suite_small_passes_with_one_line_per_check(capsys, tmp_path):
    target = tmp_path / "suite.json"
    code, out, err = run(capsys, "suite", *FAST, "--json", str(target))
    assert code == 0
    lines = out.splitlines()
    marks = [line.split()[0] for line in lines[:-1]]
    assert set(marks) == {"PASS"}
    assert any("chain:M1 " in line for line in lines)
    assert any(line.startswith("PASS probe:") for line in lines)
    assert "checks passed" in lines[-1]
    payload = json.loads(target.read_text())
    assert payload["passed"] is True
    assert len(payload["rows"]) == len(lines) - 1


# --- config file handling -------------------------------------------------------------

def test_config_file_is_read(capsys, tmp_path):
    cfg = tmp_path / "verify.cfg"
    cfg.write_text("samples = 801\nrefine_depth = 20  # comment\n\n")
    code, out, err = run(capsys, "verify", "M1", "--config", str(cfg))
    assert code == 0


def test_flag_beats_config_file(capsys, tmp_path):
    cfg = tmp_path / "verify.cfg"
    # samples=2 would be rejected by VerificationConfig; the flag must win
    cfg.write_text("samples = 2\n")
    code, out, err = run(capsys, "verify", "M1", "--config", str(cfg),
                         "--samples", "801", "--refine-depth", "20")
    assert code == 0


def test_config_file_errors(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "M1", "--config", str(tmp_path / "missing.cfg"))
    assert code == 2 and "cannot read config file" in err
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense\n")
    code, out, err = run(capsys, "verify", "M1", "--config", str(bad))
    assert code == 2 and "expected key=value" in err
    bad.write_text("volume = 11\n")
    code, out, err = run(capsys, "verify", "M1", "--config", str(bad))
    assert code == 2 and "unknown key" in err
    bad.write_text("samples = many\n")
    code, out, err = run(capsys, "verify", "M1", "--config", str(bad))
    assert code == 2 and "cannot parse value" in err


def test_invalid_config_value_is_a_clean_error(capsys):
    code, out, err = run(capsys, "verify", "M1", "--samples", "2")
    assert code == 2
    assert "error:" in err
