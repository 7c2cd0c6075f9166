import io
import json
import subprocess
import sys

import pytest

from anyon_qutrit.circuit import Chrestenson, HardControlled, Measure, QutritCircuit, Sum
from anyon_qutrit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_metaplectic():
    code, out, _ = call("verify", "--model", "metaplectic")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["pentagon"] < 1e-9 and data["hexagon"] < 1e-9 and data["ribbon"] < 1e-9


def test_verify_su2k_requires_level():
    assert call("verify", "--model", "su2k")[0] == 2
    assert call("verify", "--model", "su2k", "--level", "3")[0] == 0


def test_truth_table_expected():
    code, out, _ = call("truth-table", "half-adder", "--expected")
    assert code == 0
    assert out.splitlines()[0] == "A,B,S,c_out"
    assert out.strip().endswith("9/9 rows match")


def test_truth_table_json():
    code, out, _ = call("truth-table", "multiplier", "--format", "json", "--expected")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == 81 and data["comparison"] == "81/81 rows match"


def test_bracket():
    assert call("bracket", "--braid", "", "--strands", "1")[:2] == (0, "1\n")
    assert call("bracket", "--braid", "1 1", "--strands", "2")[1] == "-1*A^4 + -1*A^-4\n"
    code, out, _ = call("bracket", "--braid", "1 1", "--strands", "2", "--format", "csv")
    assert out.splitlines() == ["exponent,coefficient", "4,-1", "-4,-1"]
    assert call("bracket", "--braid", "1 1 1", "--strands", "2", "--jones")[1] == "1*A^-4 + 1*A^-12 + -1*A^-16\n"


def test_bracket_bad_word_is_usage_error():
    assert call("bracket", "--braid", "3", "--strands", "2")[0] == 2


def test_braid_matrix():
    code, out, _ = call("braid", "--model", "metaplectic", "--anyons", "4", "--total", "Y", "--generator", "2")
    data = json.loads(out)
    assert code == 0 and len(data["matrix"]["real"]) == 3
    assert data["basis"] == [["1", "X"], ["Y", "X"], ["Y", "X'"]]
    assert call("braid", "--generator", "7")[0] == 2


def test_synth_check():
    code, out, _ = call("synth", "--gate", "hadamard", "--check")
    assert code == 0 and json.loads(out)["deviation"] < 1e-9
    code, out, _ = call("synth", "--gate", "swap", "--check", "--format", "csv")
    assert code == 0 and "# deviation" in out
    assert call("synth", "--gate", "toffoli")[0] == 2


def test_synth_mismatch_exits_one():
    # the square of p from the braid generators differs from its printed counterpart
    assert call("synth", "--gate", "p2", "--check")[0] == 1


def test_data_and_coeff():
    code, out, _ = call("data", "--level", "4")
    data = json.loads(out)
    assert code == 0 and data["charges"][1] == "1/2"
    code, out, _ = call("coeff", "1", "1", "0", "1", "1", "0", "--level", "1000")
    res = json.loads(out)
    assert abs(res["classical_six_j"] + 0.5) < 1e-12
    assert abs(res["q_six_j"][0] + 0.5) < 1e-4
    assert call("coeff", "1", "1", "0", "1", "1", "0", "--level", "0")[0] == 2


def _write_circuit(tmp_path, circ):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(circ.to_dict()))
    return str(path)


def test_simulate_and_determinism(tmp_path):
    circ = QutritCircuit(2, (Chrestenson(0), Sum(0, 1), Measure(0)))
    path = _write_circuit(tmp_path, circ)
    first = call("simulate", "-c", path, "--shots", "100", "--seed", "4")
    second = call("simulate", "-c", path, "--shots", "100", "--seed", "4")
    assert first == second and first[0] == 0
    data = json.loads(first[1])
    assert sum(data["counts"].values()) == 100
    assert len(data["probabilities"]) == 1


def test_simulate_csv(tmp_path):
    circ = QutritCircuit(2, (HardControlled("shift+1", ((0, 1),), 1),))
    path = _write_circuit(tmp_path, circ)
    code, out, _ = call("simulate", "-c", path, "--input", "1 0", "--format", "csv")
    assert code == 0 and out.splitlines() == ["basis,probability", "11,1.0"]
    assert call("simulate", "-c", path, "--input", "1")[0] == 2
    assert call("simulate", "-c", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv", [["verify", "--bogus"], ["nonsense"], [], ["truth-table", "divider"]])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "anyon_qutrit", "truth-table", "half-adder", "--expected"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "9/9 rows match" in proc.stdout
