import json
import subprocess
import sys

import numpy as np
import pytest

from heatwitness.cli import main, validate_report


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def parse_csv(text):
    lines = [l for l in text.strip().splitlines() if not l.startswith("#")]
    header = lines[0].split(",")
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    return header, np.array(rows)


def test_thermo_csv_shape_and_positivity(capsys):
    code, out, _ = run_cli(["thermo", "--model", "ising", "--n", "8", "--B", "2",
                            "--tmin", "0.1", "--tmax", "5", "--points", "100"], capsys)
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["T", "U_per_site", "C_per_site", "logZ_per_site"]
    assert rows.shape == (100, 4)
    assert np.all(rows[:, 2] >= 0)
    assert np.all(np.diff(rows[:, 0]) > 0)


def test_sepbound_single_field_value(capsys):
    code, out, _ = run_cli(["sepbound", "--model", "ising", "--B", "2"], capsys)
    assert code == 0
    header, rows = parse_csv(out)
    assert header[:2] == ["B", "min_variance_per_site"]
    assert rows[0, 1] == pytest.approx(0.4197, abs=5e-4)


def test_region_sweep_is_monotone(capsys):
    code, out, _ = run_cli(["region", "--B", "0.25:3:12"], capsys)
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["B", "T_c"]
    assert rows.shape == (12, 2)
    tcs = rows[:, 1]
    assert np.all(np.isfinite(tcs)) and np.all(tcs > 0)
    assert np.all(np.diff(tcs) >= -1e-9)


def test_determinism_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code = main(["sepbound", "--model", "ising", "--B-range", "0.5:2.5",
                     "--B-points", "5", "--output", str(path)])
        assert code == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_thread_count_does_not_change_output(tmp_path, capsys, monkeypatch):
    serial, threaded = tmp_path / "s.csv", tmp_path / "t.csv"
    assert main(["region", "--B", "0.5:2:4", "--output", str(serial)]) == 0
    monkeypatch.setenv("HEATWITNESS_THREADS", "4")
    assert main(["region", "--B", "0.5:2:4", "--output", str(threaded)]) == 0
    capsys.readouterr()
    assert serial.read_bytes() == threaded.read_bytes()


def test_witness_json_schema_and_margins(tmp_path, capsys):
    margins = tmp_path / "margins.csv"
    code, out, _ = run_cli(["witness", "--bound", "variance", "--curve", "katsura",
                            "--B", "2", "--points", "120",
                            "--margins-output", str(margins)], capsys)
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["bound"]["kind"] == "variance"
    assert 0.5 < doc["T_c"] < 2.0
    header, rows = parse_csv(margins.read_text())
    assert header == ["T", "C", "bound", "margin"]
    assert np.allclose(rows[:, 3], rows[:, 2] - rows[:, 1], atol=1e-12)


def test_witness_gapless_flags_window(capsys):
    code, out, _ = run_cli(["witness", "--bound", "gapless", "--curve", "ed",
                            "--model", "xxx", "--n", "8", "--E0", "-0.443",
                            "--EB", "-0.25", "--gamma", "2",
                            "--tmin", "0.02", "--tmax", "5", "--points", "200"], capsys)
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["validity"] in ("within-approximation-window", "approximation-limited")


def test_witness_from_file_round_trip(tmp_path, capsys):
    data = tmp_path / "curve.csv"
    code = main(["analytic", "--which", "katsura", "--B", "2",
                 "--tmin", "0.3", "--tmax", "5", "--points", "80",
                 "--output", str(data)])
    assert code == 0
    capsys.readouterr()
    code, out, _ = run_cli(["witness", "--bound", "variance",
                            "--bound-value", "0.4197",
                            "--curve", f"file={data}"], capsys)
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["curve_source"] == "file"
    assert doc["T_c"] == pytest.approx(1.1788, abs=5e-3)


def test_eigencheck_json(capsys):
    code, out, _ = run_cli(["eigencheck", "--n", "4", "--B", "1",
                            "--restarts", "32"], capsys)
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["verdict"] is True
    assert sum(lv["degeneracy"] for lv in doc["levels"]) == 16


def test_seed_recorded(capsys):
    code, out, _ = run_cli(["sepbound", "--model", "ising", "--B", "1",
                            "--seed", "7"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "# seed=7"
    code, out, _ = run_cli(["eigencheck", "--n", "2", "--B", "1", "--seed", "9"], capsys)
    assert json.loads(out)["seed"] == 9


def test_unit_rescaling(capsys):
    base = run_cli(["analytic", "--which", "xx", "--tmin", "0.1", "--tmax", "1",
                    "--points", "5"], capsys)[1]
    scaled = run_cli(["analytic", "--which", "xx", "--tmin", "0.1", "--tmax", "1",
                      "--points", "5", "--unit-J", "2"], capsys)[1]
    _, rows0 = parse_csv(base)
    _, rows1 = parse_csv(scaled)
    assert np.allclose(rows1[:, 0], 2 * rows0[:, 0])
    assert np.allclose(rows1[:, 1], 2 * rows0[:, 1])


def test_invalid_arguments_exit_2_with_json(capsys):
    code, _, err = run_cli(["thermo", "--model", "nope", "--n", "4",
                            "--tmin", "1", "--tmax", "2"], capsys)
    assert code == 2
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"]["type"] == "invalid-arguments"

    code, _, err = run_cli(["witness", "--bound", "gapless", "--curve", "katsura",
                            "--B", "2"], capsys)
    assert code == 2  # missing --E0/--EB
    payload = json.loads(err.strip().splitlines()[-1])
    assert "E0" in payload["error"]["message"]


def test_numerical_failure_exit_3_with_json(capsys):
    code, _, err = run_cli(["analytic", "--which", "katsura", "--B", "1",
                            "--tmin", "0.002", "--tmax", "0.003", "--points", "2",
                            "--max-subdivisions", "1"], capsys)
    assert code == 3
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"]["type"] == "numerical-failure"


def test_hamiltonian_dump(tmp_path, capsys):
    dump = tmp_path / "h.csv"
    code = main(["thermo", "--model", "ising", "--n", "2", "--B", "0",
                 "--tmin", "0.5", "--tmax", "2", "--points", "3",
                 "--dump-hamiltonian", str(dump)])
    assert code == 0
    capsys.readouterr()
    rows = [[float(x) for x in line.split(",")] for line in dump.read_text().splitlines()]
    assert np.allclose(rows, np.diag([2.0, -2.0, -2.0, 2.0]))


def test_repro_targets(tmp_path, capsys):
    out_csv = tmp_path / "fig.csv"
    code = main(["repro", "capacity-vs-bound", "--output", str(out_csv)])
    assert code == 0
    capsys.readouterr()
    header, rows = parse_csv(out_csv.read_text())
    assert header == ["T", "C_per_site", "bound"]
    assert rows.shape[0] == 200
    # the bound column is a/T^2 for a single constant a
    a = rows[0, 2] * rows[0, 0] ** 2
    assert np.allclose(rows[:, 2], a / rows[:, 0] ** 2, rtol=1e-9)


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "heatwitness", "sepbound", "--model", "ising",
         "--B", "0"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "B,min_variance_per_site,theta1,theta2"


def test_report_validation_rejects_bad_documents():
    with pytest.raises(ValueError):
        validate_report({"schema_version": 99})
    with pytest.raises(ValueError):
        validate_report({"schema_version": 1, "bound": {"kind": "variance"}})
    with pytest.raises(ValueError):
        validate_report([1, 2, 3])
