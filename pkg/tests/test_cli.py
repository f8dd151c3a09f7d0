import csv
import io
import json
import subprocess
import sys

import pytest

from qft_infocalc.cli import main, run
from qft_infocalc.protocols import builtin_diagrams
from qft_infocalc.states import complex_to_json


def write_json(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_conditional_bell():
    code, out, _ = run(["conditional"])
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == pytest.approx(-1.0, abs=1e-10)
    assert doc["support_rank"] == 1


def test_conditional_werner_reports_both_methods():
    code, out, _ = run(["conditional", "--builtin", "werner", "--p", "0.5"])
    doc = json.loads(out)
    assert code == 0
    assert doc["methods_agree"] is True
    assert doc["operator_value"] == pytest.approx(doc["difference_value"], abs=1e-8)


def test_entropy_from_state_file(tmp_path):
    f = write_json(tmp_path, "s.json", {"amplitudes": complex_to_json([0.6, 0.8]), "dims": [2]})
    code, out, _ = run(["entropy", "--state", f])
    assert code == 0
    assert json.loads(out)["von_neumann_bits"] == pytest.approx(0.0, abs=1e-10)


def test_entropy_mixed_state_file(tmp_path):
    f = write_json(tmp_path, "s.json", {"density": complex_to_json([[0.25, 0], [0, 0.75]]), "dims": [2]})
    _, out, _ = run(["entropy", "--state", f])
    assert json.loads(out)["von_neumann_bits"] == pytest.approx(0.8112781244591328, abs=1e-12)


def test_ternary_ghz():
    code, out, _ = run(["ternary"])
    doc = json.loads(out)
    assert code == 0
    assert abs(doc["ternary_mutual"]) <= 1e-8
    assert doc["conditional_mutual"] == pytest.approx(1.0, abs=1e-12)
    assert doc["chain_rule"]["printed_form_residual"] == pytest.approx(1.0, abs=1e-12)


def test_teleport_seed_and_env(monkeypatch):
    monkeypatch.setenv("QFT_INFOCALC_SEED", "11")
    a = run(["teleport"])
    b = run(["teleport", "--seed", "11"])
    assert a == b
    assert json.loads(a[1])["seed"] == 11


def test_teleport_bad_env(monkeypatch):
    monkeypatch.setenv("QFT_INFOCALC_SEED", "abc")
    code, _, msg = run(["teleport"])
    assert code == 2 and "QFT_INFOCALC_SEED" in msg


def test_teleport_state_file(tmp_path):
    f = write_json(tmp_path, "q.json", {"amplitudes": [[0.6, 0], [0, 0.8]]})
    code, out, _ = run(["teleport", "--seed", "3", "--state", f])
    assert code == 0
    assert json.loads(out)["fidelity"] == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("bits", ["00", "01", "10", "11"])
def test_superdense(bits):
    code, out, _ = run(["superdense", "--bits", bits])
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and "".join(map(str, doc["recovered"])) == bits


def test_diagram_builtin():
    code, out, _ = run(["diagram", "--builtin", "fig1"])
    assert code == 0 and json.loads(out)["balanced"]


def test_diagram_file_violation(tmp_path):
    doc = builtin_diagrams()["fig1"].to_json()
    doc["edges"][0]["species"] = "c"
    doc["edges"][2]["multiplicity"] = 3
    code, out, msg = run(["diagram", "--file", write_json(tmp_path, "d.json", doc)])
    assert code == 1
    assert not json.loads(out)["balanced"]
    assert "unbalanced" in msg


def test_diagram_bad_species(tmp_path):
    doc = builtin_diagrams()["fig1"].to_json()
    doc["edges"][0]["species"] = "photon"
    code, _, msg = run(["diagram", "--file", write_json(tmp_path, "d.json", doc)])
    assert code == 2 and "species" in msg


def test_susy_linear():
    code, out, _ = run(["susy", "--potential", "linear", "--n", "400", "--levels", "10"])
    assert code == 0
    table = rows(out)
    paired = [r for r in table if r["level"] != "zero"]
    assert len(paired) == 10
    assert max(float(r["gap"]) for r in paired) <= 1e-2
    assert [r["level"] for r in table].count("zero") == 1


def test_sigma_csv():
    code, out, _ = run(["sigma", "--preset", "random", "--steps", "50", "--dt", "0.1", "--seed", "2"])
    table = rows(out)
    assert code == 0
    assert list(table[0]) == ["step", "time", "energy", "max_constraint_residual"]
    assert len(table) == 51
    assert max(float(r["max_constraint_residual"]) for r in table) <= 1e-10


def test_sigma_cfl_violation():
    code, out, msg = run(["sigma", "--dt", "1.5"])
    assert code == 2 and out == "" and "--dt" in msg


def test_decohere_default_state():
    code, out, _ = run(["decohere", "--t", "1", "--tau", "1"])
    rho = json.loads(out)["density"]
    assert code == 0
    assert rho[0][1][0] == pytest.approx(0.18393972058572117, abs=1e-12)


def test_decohere_bad_tau():
    code, _, msg = run(["decohere", "--t", "1", "--tau", "-2"])
    assert code == 2 and "--tau" in msg


def test_bound():
    code, out, _ = run(["bound", "--area", "1"])
    assert code == 0 and json.loads(out)["bits"] == pytest.approx(1.38e69, rel=1e-2)


def test_bound_negative_area():
    code, _, msg = run(["bound", "--area", "-1"])
    assert code == 2 and "--area" in msg


def test_selfcheck():
    code, out, _ = run(["selfcheck"])
    doc = json.loads(out)
    assert code == 0
    assert doc["clifford"]["max_deviation"] == 0.0
    assert all(v["passed"] for v in doc.values())


@pytest.mark.parametrize(
    "argv, field",
    [
        (["frobnicate"], None),
        (["superdense", "--bits", "2"], "--bits"),
        (["entropy", "--state", "/nonexistent.json"], "--state"),
        (["susy", "--n", "4"], "--n"),
        (["susy", "--n", "20", "--levels", "50"], "--levels"),
    ],
)
def test_input_errors_exit_2(argv, field, capsys):
    code, out, msg = run(argv)
    assert code == 2 and out == ""
    if field:
        assert field in msg


def test_malformed_state_names_field(tmp_path):
    f = write_json(tmp_path, "s.json", {"amplitudes": [1, 0], "dims": [2]})
    code, _, msg = run(["entropy", "--state", f])
    assert code == 2 and "amplitudes" in msg


def test_main_streams(capsys):
    assert main(["bound", "--area", "0"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["bits"] == 0.0
    assert "bits" in captured.err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "qft_infocalc", "superdense", "--bits", "11"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["recovered"] == [1, 1]
