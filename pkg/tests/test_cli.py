"""Command-line interface: outputs, option handling, and exit codes."""

import csv
import json
import math
import subprocess
import sys

import pytest

from multibrot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- info -------------------------------------------------------------------------


def test_info_json_even_degree(capsys):
    code, out, _ = run(capsys, "info", "--p", "2")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 2
    assert data["lo"] == -2.0
    assert data["hi"] == 0.25
    assert data["t"] == -0.875
    assert data["l"] == 2.25
    assert data["edge"] == pytest.approx(9.0 * math.sqrt(2.0) / 8.0, rel=1e-15)
    assert data["hausdorff"] == 1.0


def test_info_omits_square_constants_for_odd_degrees(capsys):
    code, out, _ = run(capsys, "info", "--p", "3")
    assert code == 0
    data = json.loads(out)
    assert data["lo"] == pytest.approx(-0.3849001794597505, rel=1e-15)
    assert data["hi"] == -data["lo"]
    assert "t" not in data and "l" not in data and "hausdorff" not in data


def test_info_csv_to_file(tmp_path, capsys):
    path = tmp_path / "constants.csv"
    code, out, _ = run(capsys, "info", "--p", "4", "--format", "csv", "--out", str(path))
    assert code == 0
    assert f"wrote {path}" in out
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 1
    assert float(rows[0]["t"]) == pytest.approx(-0.3937253280921479, rel=1e-15)
    assert float(rows[0]["l"]) == pytest.approx(1.7323914436054508, rel=1e-15)


def test_info_rejects_out_of_range_degree(capsys):
    code, _, err = run(capsys, "info", "--p", "65")
    assert code == 2
    assert "error:" in err


# -- render -----------------------------------------------------------------------


def test_render_multibrot_writes_pgm(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "render", "multibrot", "--res", "24", "--max-iter", "80")
    assert code == 0
    assert "wrote multibrot_p2.pgm" in out
    raw = (tmp_path / "multibrot_p2.pgm").read_bytes()
    assert raw.startswith(b"P5\n24 24\n255\n")


def test_render_summary_json(tmp_path, capsys):
    path = tmp_path / "summary.json"
    code, out, _ = run(capsys, "render", "multibrot", "--res", "16",
                       "--max-iter", "60", "--window", "-2,0.5,-1.2,1.2",
                       "--format", "json", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["kind"] == "multibrot" and data["p"] == 2
    assert (data["x_lo"], data["x_hi"]) == (-2.0, 0.5)
    assert data["nx"] == data["ny"] == 16
    assert 0 < data["member_cells"] < 256
    assert data["member_fraction"] == data["member_cells"] / 256


def test_render_hyperbrot_uses_its_default_window(tmp_path, capsys):
    path = tmp_path / "h.csv"
    code, _, _ = run(capsys, "render", "hyperbrot", "--res", "32",
                     "--max-iter", "200", "--format", "csv", "--out", str(path))
    assert code == 0
    with open(path, newline="") as fh:
        row = next(csv.DictReader(fh))
    assert (float(row["x_lo"]), float(row["x_hi"])) == (-2.0, 1.0)
    assert (float(row["y_lo"]), float(row["y_hi"])) == (-1.5, 1.5)


def test_render_perplexbrot_writes_mesh_and_table(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "render", "perplexbrot", "--res", "20", "--max-iter", "150")
    assert code == 0
    assert "wrote perplexbrot_p2.obj" in out
    obj = (tmp_path / "perplexbrot_p2.obj").read_text()
    assert obj.count("\nv ") + obj.startswith("v ") == 6
    assert obj.count("\nf ") == 8
    with open(tmp_path / "perplexbrot_p2.csv", newline="") as fh:
        row = next(csv.DictReader(fh))
    assert row["kind"] == "perplexbrot"
    assert int(row["nx"]) == 20
    assert float(row["analytic_volume"]) == pytest.approx(2.25 ** 3 / 6.0, rel=1e-15)
    volume = float(row["estimated_volume"])
    assert volume == pytest.approx(2.25 ** 3 / 6.0, rel=0.2)


def test_render_perplexbrot_single_format(tmp_path, capsys):
    table = tmp_path / "cloud.json"
    code, _, _ = run(capsys, "render", "perplexbrot", "--p", "3", "--res", "16",
                     "--max-iter", "100", "--format", "json", "--out", str(table))
    assert code == 0
    data = json.loads(table.read_text())
    assert data["p"] == 3
    assert "analytic_volume" not in data  # no closed form for odd degrees
    assert not (tmp_path / "cloud.obj").exists()


def test_render_perplexbrot_mesh_needs_even_degree(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "render", "perplexbrot", "--p", "3", "--res", "8")
    assert code == 2
    assert "even degrees" in err


@pytest.mark.parametrize("argv", [
    ("render", "multibrot", "--box", "-1,1,-1,1,-1,1"),
    ("render", "multibrot", "--format", "obj"),
    ("render", "multibrot", "--window", "0,1,2"),
    ("render", "multibrot", "--window", "a,b,c,d"),
    ("render", "multibrot", "--res", "1"),
    ("render", "multibrot", "--res", "12,12,12"),
    ("render", "perplexbrot", "--window", "-1,1,-1,1"),
    ("render", "perplexbrot", "--format", "pgm"),
    ("render", "multibrot", "--p", "1"),
])
def test_render_usage_errors(tmp_path, monkeypatch, capsys, argv):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error:" in err


def test_unknown_subcommand_exits_2(capsys):
    assert main(["zoom"]) == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "render" in out and "verify" in out


# -- verify -----------------------------------------------------------------------


def test_verify_algebra_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--samples", "500")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("[PASS]") for line in lines[:-1])
    assert lines[-1].startswith("suite algebra: PASS")


def test_verify_report_file(tmp_path, capsys):
    path = tmp_path / "report.csv"
    code, _, _ = run(capsys, "verify", "--suite", "interval", "--p", "2",
                     "--max-iter", "20000", "--out", str(path))
    assert code == 0
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows and set(rows[0]) == {"suite", "check", "passed", "value", "threshold", "detail"}
    assert all(row["passed"] == "True" for row in rows)


def test_verify_failure_sets_exit_code(capsys):
    # two iterations cannot resolve the square, so the raster check must fail
    code, out, _ = run(capsys, "verify", "--suite", "square", "--p", "2",
                       "--res", "64", "--max-iter", "2")
    assert code == 1
    assert "[FAIL]" in out
    assert "suite square: FAIL" in out


def test_verify_rejects_misapplied_options(capsys):
    code, _, err = run(capsys, "verify", "--suite", "hausdorff", "--p", "2")
    assert code == 2
    assert "does not apply" in err
    code, _, err = run(capsys, "verify", "--suite", "interval", "--samples", "10")
    assert code == 2


# -- config files -----------------------------------------------------------------


def test_config_supplies_defaults_and_flags_override(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    config = tmp_path / "render.json"
    config.write_text(json.dumps({"res": 10, "max_iter": 60, "window": [-2, 0.5, -1, 1]}))
    code, out, _ = run(capsys, "render", "multibrot", "--config", str(config))
    assert code == 0
    assert (tmp_path / "multibrot_p2.pgm").read_bytes().startswith(b"P5\n10 10\n255\n")

    code, _, _ = run(capsys, "render", "multibrot", "--config", str(config),
                     "--res", "6", "--out", "override.pgm")
    assert code == 0
    assert (tmp_path / "override.pgm").read_bytes().startswith(b"P5\n6 6\n255\n")


def test_config_keys_for_other_subcommands_are_ignored(tmp_path, capsys):
    config = tmp_path / "mixed.json"
    config.write_text(json.dumps({"samples": 400, "format": "json"}))
    code, out, _ = run(capsys, "info", "--p", "2", "--config", str(config))
    assert code == 0
    assert json.loads(out)["p"] == 2  # "samples" belongs to verify and is skipped


def test_config_error_cases(tmp_path, capsys):
    bad_key = tmp_path / "bad.json"
    bad_key.write_text(json.dumps({"zoom": 3}))
    code, _, err = run(capsys, "info", "--config", str(bad_key))
    assert code == 2 and "unknown config key" in err

    not_obj = tmp_path / "list.json"
    not_obj.write_text(json.dumps([1, 2]))
    assert run(capsys, "info", "--config", str(not_obj))[0] == 2

    nested = tmp_path / "nested.json"
    nested.write_text(json.dumps({"config": "other.json"}))
    code, _, err = run(capsys, "info", "--config", str(nested))
    assert code == 2 and "nest" in err

    boolean = tmp_path / "bool.json"
    boolean.write_text(json.dumps({"format": True}))
    assert run(capsys, "info", "--config", str(boolean))[0] == 2

    assert run(capsys, "info", "--config", str(tmp_path / "missing.json"))[0] == 2


def test_unwritable_output_exits_2(tmp_path, capsys):
    path = tmp_path / "no" / "such" / "dir" / "x.json"
    code, _, err = run(capsys, "info", "--p", "2", "--out", str(path))
    assert code == 2
    assert "error:" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "multibrot", "info", "--p", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["t"] == -0.875
