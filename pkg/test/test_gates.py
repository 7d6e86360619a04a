import numpy as np
import pytest
from .conftest import *
from feqtlib.exceptions import InvalidInputError
from feqtlib.gates import BELL_STATES, CNOT_21, H, I2, SWAP, X, Z, bloch_vector, embed, gate_zoo, hth_report, \
    identity_residual, phase_dist, phase_gate_solve, result_identity, results_suite, rx, rz
from feqtlib.harmonic_drive import HarmonicDrive
from feqtlib.qudit import pinem_eigenphases, pinem_qudit
from feqtlib.qudit_state import QuditState


def test_results_suite_all_hold():
    reports = results_suite(samples=20, seed=3)
    assert [r.name for r in reports] == ['I(a)', 'I(b)', 'II', 'III', 'IV', 'V', 'VI']
    for report in reports:
        assert report.passed, report.name
        assert report.residual < 1e-9


def test_result_i_b_needs_mirrored_phase():
    g1 = 0.9 * np.exp(1j * np.pi / 4)
    lhs = pinem_qudit(HarmonicDrive.from_couplings({1: g1}), 4).matrix
    rhs = np.kron(pinem_qudit(HarmonicDrive.from_couplings({1: 1j * g1.imag}), 2).matrix, I2)
    assert identity_residual(lhs, rhs) > 1e-3
    lhs, rhs = result_identity('I(b)', [0.9])
    assert identity_residual(lhs, rhs) < 1e-9


def test_result_identity_validation():
    with pytest.raises(InvalidInputError):
        result_identity('VII', [])
    with pytest.raises(InvalidInputError):
        result_identity('III', [0.1])


def test_hth_is_rx():
    report = hth_report()
    assert report.passed
    assert identity_residual(H @ rz(np.pi / 4) @ H, rx(np.pi / 4)) < 1e-12


def test_phase_dist():
    assert phase_dist(SWAP, np.exp(0.7j) * SWAP) == pytest.approx(0.0, abs=1e-15)
    assert phase_dist(np.eye(4), SWAP) == pytest.approx(0.5)
    assert phase_dist(np.eye(4), np.kron(Z, I2)) == pytest.approx(1.0, abs=1e-15)
    assert 0.0 <= phase_dist(CNOT_21, SWAP) <= 1.0
    with pytest.raises(InvalidInputError):
        phase_dist(np.eye(2), np.eye(4))


def test_embed():
    np.testing.assert_allclose(embed(X, 1, 2), np.kron(X, I2))
    np.testing.assert_allclose(embed(X, 2, 2), np.kron(I2, X))
    np.testing.assert_allclose(embed(SWAP, 2, 3), np.kron(I2, SWAP))


def test_gate_zoo_is_unitary():
    for name, gate in gate_zoo().items():
        if name.startswith('P_'):
            continue
        np.testing.assert_allclose(gate.conj().T @ gate, np.eye(gate.shape[0]), atol=1e-12, err_msg=name)


def test_cnot_21_flips_first_qubit():
    # |q1 q2> = |01> -> |11>
    np.testing.assert_allclose(CNOT_21 @ np.array([0, 1, 0, 0]), [0, 0, 0, 1])


def test_bloch_vectors():
    plus = np.array([1, 1]) / np.sqrt(2)
    state = QuditState(dim=4, alpha=np.kron([1, 0], plus))
    np.testing.assert_allclose(bloch_vector(state, 1), [0, 0, 1], atol=1e-15)
    np.testing.assert_allclose(bloch_vector(state, 2), [1, 0, 0], atol=1e-15)
    plus_plus = QuditState(dim=4, alpha=np.full(4, 0.5))
    for qubit in (1, 2):
        np.testing.assert_allclose(bloch_vector(plus_plus, qubit), [1, 0, 0], atol=1e-15)
    bell = QuditState(dim=4, alpha=BELL_STATES['BELL_00'])
    assert np.linalg.norm(bloch_vector(bell, 1)) < 1e-12
    with pytest.raises(InvalidInputError):
        bloch_vector(QuditState(dim=4, alpha=np.full(4, 0.4)), 1)


def test_phase_gate_solve_d4(rng):
    for _ in range(200):
        target = rng.uniform(-np.pi, np.pi, size=4)
        drive, residual = phase_gate_solve(target, 2)
        assert residual < 1e-9
        assert drive.harmonics == [1, 2]


def test_phase_gate_solve_rz_pair_couplings():
    target = np.kron(rz(np.pi / 2), rz(-np.pi / 2))
    drive, residual = phase_gate_solve(np.angle(np.diag(target)), 2)
    assert residual < 1e-12
    assert drive.coupling(1) == pytest.approx(np.pi / 8 * (-1 + 1j), abs=1e-12)
    assert drive.coupling(2) == pytest.approx(-1j * np.pi / 8, abs=1e-12)
    printed = HarmonicDrive.from_couplings({1: np.pi / 8 * (1 + 1j), 2: 15 * np.pi / 16 * 1j})
    assert phase_dist(np.diag(pinem_eigenphases(printed, 4)), target) == pytest.approx(0.5, abs=1e-9)


def test_phase_gate_solve_least_squares(rng):
    target = rng.uniform(-np.pi, np.pi, size=8)
    _, residual = phase_gate_solve(target, 4)
    assert residual < 1e-6
