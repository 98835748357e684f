import csv
import io
import json
import os
import subprocess
import sys

import pytest

from semiphoton_lab import cli
from semiphoton_lab.constants import codata_2018


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "SEMIPHOTON_CONSTANTS"}
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "semiphoton_lab", *args], capture_output=True, text=True,
                          env=full_env, timeout=120)


@pytest.fixture
def bad_h_file(tmp_path):
    data = codata_2018().to_dict()
    data["h"] = 7e-34
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    return path


def test_constants_table():
    r = run("constants")
    assert r.returncode == 0
    assert "299792458" in r.stdout
    assert "default" in r.stdout


def test_constants_json():
    r = run("constants", "--format", "json")
    payload = json.loads(r.stdout)
    assert payload["constants"]["c"] == 299792458.0


def test_constants_bad_file(bad_h_file):
    r = run("--constants", str(bad_h_file), "constants")
    assert r.returncode == 2
    assert "h" in r.stderr and "error" in r.stderr


def test_constants_missing_file(tmp_path):
    r = run("constants", "--constants", str(tmp_path / "nope.json"))
    assert r.returncode == 2


def test_constants_from_env(tmp_path):
    data = codata_2018().to_dict()
    path = tmp_path / "k.json"
    path.write_text(json.dumps(data))
    r = run("constants", env={"SEMIPHOTON_CONSTANTS": str(path)})
    assert r.returncode == 0
    assert str(path) in r.stdout


def test_model_params_json():
    r = run("model-params", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["zeta"] == pytest.approx(0.10706378758097315, rel=1e-12)
    assert payload["phi0_over_h_over_e"] == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("suite", ["algebra", "all"])
def test_verify_passes(suite):
    r = run("verify", suite)
    assert r.returncode == 0, r.stdout
    assert not any(line.startswith("fail") for line in r.stdout.splitlines())
    assert "checks ok" in r.stdout


def test_verify_json():
    r = run("verify", "ring", "--format", "json")
    rows = json.loads(r.stdout)
    assert {row["status"] for row in rows} <= {"pass", "expected-discrepancy"}


def test_verify_unknown_suite():
    assert run("verify", "foo").returncode == 2


def test_fields_csv():
    r = run("fields", "--system", "prime", "--a0", "2", "--omega", "3", "--samples", "4")
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["t", "y", "Ex", "Ey", "Ez", "Hx", "Hy", "Hz", "Sx", "Sy", "Sz"]
    assert len(rows) == 5
    assert [float(v) for v in rows[1]] == [0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, -2.0, 0.0, 4.0, 0.0]
    assert all(float(row[9]) == pytest.approx(4.0, rel=1e-14) for row in rows[1:])


def test_fields_double_prime_reverses_flux():
    r = run("fields", "--system", "double_prime", "--a0", "1", "--omega", "1", "--format", "json")
    assert all(row["Sy"] == pytest.approx(-1.0) for row in json.loads(r.stdout))


def test_fields_rejects_one_sample():
    assert run("fields", "--system", "prime", "--a0", "1", "--omega", "1", "--samples", "1").returncode == 2


def test_ring_charge_circular_neutral():
    r = run("ring-charge", "--polarization", "circular", "--format", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["flag"] == "neutral"


def test_ring_charge_plane_charged():
    r = run("ring-charge", "--polarization", "plane", "--format", "json")
    payload = json.loads(r.stdout)
    assert payload["flag"] == "charged"
    assert payload["charge"] == pytest.approx(0.6366197723675789, rel=1e-12)
    assert payload["ratio_to_stated"] == pytest.approx(2.0, rel=1e-8)


def test_ring_charge_too_few_steps():
    assert run("ring-charge", "--polarization", "plane", "--steps", "50").returncode == 2


def test_ring_currents_csv():
    r = run("ring-currents", "--polarization", "plane", "--samples", "3")
    assert r.stdout.splitlines()[0] == "phase,j_n,j_tau,in_plane_projection"
    assert len(r.stdout.splitlines()) == 4


def test_audit_ok_and_json():
    r = run("audit", "--format", "json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert [row["id"] for row in rows][:2] == ["A.1", "A.2"]
    assert all(len(row) == 5 for row in rows)
    assert sum(row["status"] == "discrepant with stated factor" for row in rows) == 3


def test_audit_table_mentions_notes():
    r = run("audit")
    assert r.returncode == 0
    assert "note" in r.stdout.splitlines()[0]


def test_audit_bad_constants(bad_h_file):
    assert run("audit", "--constants", str(bad_h_file)).returncode == 2


def test_out_file(tmp_path):
    target = tmp_path / "out.json"
    r = run("model-params", "--format", "json", "--out", str(target))
    assert r.returncode == 0 and r.stdout == ""
    assert "zeta" in json.loads(target.read_text())


def test_precision_controls_digits():
    r = run("fields", "--system", "prime", "--a0", "1", "--omega", "1", "--samples", "3", "--precision", "6")
    row = r.stdout.splitlines()[2].split(",")
    assert row[0] == "2.0944"


@pytest.mark.parametrize("value", ["5", "18", "x"])
def test_precision_validation(value):
    assert run("constants", "--precision", value).returncode == 2


def test_main_in_process(capsys):
    assert cli.main(["model-params", "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("name,value,unit")
