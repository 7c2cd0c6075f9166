import numpy as np
import pytest

from anyon_qutrit import metaplectic_gates as mg

TOL = 1e-9


@pytest.fixture(scope="module")
def lib():
    return mg.build_gate_library()


@pytest.fixture(scope="module")
def gates(lib):
    return mg.synthesized_gates(lib)


def _close(a, b):
    return mg.phase_deviation(a, b) < TOL


@pytest.mark.parametrize("name", ["sigma1", "sigma2", "sigma3", "hadamard", "z", "perm12", "shift+1", "shift+2"])
def test_one_qutrit_gates_match_printed(gates, name):
    assert _close(gates[name], mg.PRINTED[name])


def test_sigma2_expanded_form_is_the_same_matrix():
    assert np.abs(mg.PRINTED["sigma2"] - mg.PRINTED["sigma2_expanded"]).max() < TOL


def test_z_is_exact_without_phase(lib):
    assert np.abs(lib.one.z_phase - np.diag([1, mg.OMEGA, mg.OMEGA**2])).max() < TOL


def test_minus_h_squared_is_perm12(lib):
    h = lib.one.hadamard
    assert np.abs(-(h @ h) - mg.PERM_12).max() < TOL


def test_hadamard_fourth_power(gates):
    h = gates["hadamard"]
    assert _close(np.linalg.matrix_power(h, 4), np.eye(3))


def test_p_and_q_squares(lib):
    # from the braid generators themselves: p^2 fixes |1>, q^2 fixes |2>
    p2, q2 = lib.one.permutations["p2"], lib.one.permutations["q2"]
    assert np.abs(p2 + mg.PERM_02).max() < TOL
    assert np.abs(q2 + mg.PERM_01).max() < TOL


def test_transposition_names(gates):
    assert np.abs(gates["perm01"] - mg.PERM_01).max() < TOL
    assert np.abs(gates["perm02"] - mg.PERM_02).max() < TOL


def test_h_from_swapped_p_q_unchanged(lib):
    s = [m / mg.GAMMA for m in lib.one.sigma]
    p, q = (mg.evaluate_word(s, w) for w in (mg.P_WORD, mg.Q_WORD))
    q2 = q @ q
    assert np.abs(q2 @ p @ q2 - lib.one.hadamard).max() < TOL


def test_shifts_are_conjugated_z(lib):
    h, z = lib.one.hadamard, lib.one.z_phase
    assert np.abs(h @ z.conj() @ h.conj().T - mg.SHIFT_1).max() < TOL
    assert np.abs(h @ z @ h.conj().T - mg.SHIFT_2).max() < TOL


def test_lambda_z(lib, gates):
    ref = mg.reference_gates()["lambda-z"]
    assert _close(gates["lambda-z"], ref)
    two = lib.two
    v = two.isometry
    leak = np.abs(two.lambda_z_full @ v - v @ two.lambda_z).max()
    assert leak < TOL


def test_restrict_refuses_leaky_operator(lib):
    with pytest.raises(mg.SubspaceLeakageError):
        lib.two.restrict(lib.two.sigma[3])


def test_sum_gates(lib):
    two = lib.two
    assert _close(two.sum1, mg.PRINTED["sum1"])
    assert np.abs(two.sum2 - two.sum1 @ two.sum1).max() < TOL
    assert _close(two.sum2, mg.PRINTED["sum2"])
    # control on the second qutrit: |a, b> -> |a + b, b>
    ref = np.zeros((9, 9))
    for a in range(3):
        for b in range(3):
            ref[3 * ((a + b) % 3) + b, 3 * a + b] = 1
    assert _close(two.sum1_control_second, ref)


def test_literal_sum_formula_orientation(lib):
    # (I⊗H) Λ(Z) (I⊗H^-1) produces the shift by -c, i.e. the second SUM form
    assert _close(lib.two.sum_formula, mg.PRINTED["sum2"])
    assert not _close(lib.two.sum_formula, mg.PRINTED["sum1"])


def test_swap(lib):
    s = mg.build_swap(lib.two)
    for i in range(3):
        for j in range(3):
            col = s[:, 3 * i + j]
            assert abs(abs(col[3 * j + i]) - 1) < TOL
    assert _close(s @ s, np.eye(9))
    assert _close(s, mg.reference_gates()["swap"])


def test_sum_word_is_a_pure_braid(lib):
    w = mg.sum_word(inverse_cz=True)
    assert all(1 <= abs(g) <= 7 for g in w)
    assert np.abs(lib.two.evaluate(w) - lib.two.sum1).max() < TOL


def test_word_helpers():
    assert mg.invert_word((1, -2, 3)) == (-3, 2, -1)
    assert mg.shift_word((1, -2), 4) == (5, -6)
    assert mg.power_word((1, 2), -2) == (-2, -1, -2, -1)
    gens = [np.diag([1, 1j])]
    assert np.allclose(mg.evaluate_word(gens, (1, -1)), np.eye(2))


def test_align_phase_reports_global_phase():
    m = np.diag([1, 2j])
    phase, dev = mg.align_phase(m * np.exp(0.3j), m)
    assert dev < TOL and abs(phase - np.exp(-0.3j)) < TOL


def test_reference_and_synthesized_keys(gates):
    ref = mg.reference_gates()
    for name in ("hadamard", "z", "sum", "sum2", "swap", "perm01", "perm02", "perm12", "lambda-z"):
        assert name in gates and name in ref
        assert _close(gates[name], ref[name])
