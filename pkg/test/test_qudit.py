import numpy as np
import pytest
from fractions import Fraction
from .conftest import *
from feqtlib.constants import EigenphaseMethods
from feqtlib.exceptions import ClosureError, InvalidInputError
from feqtlib.fsp_steps import FspSteps
from feqtlib.gates import I2, identity_residual, rx
from feqtlib.harmonic_drive import HarmonicDrive
from feqtlib.ladder_state import LadderState
from feqtlib.qudit import apply_ladder_operator, closure_residual, decode_basis, dft_matrix, encode, \
    fsp_qudit, pinem_eigenphases, pinem_phases, pinem_qudit, printed_d4_diagonal, weighted_eigenphases
from feqtlib.qudit_state import QuditState
from feqtlib.qudit_unitary import QuditUnitary


def test_encode_mono_energetic():
    alpha = encode(LadderState.mono_energetic(), 4).alpha
    np.testing.assert_allclose(alpha, np.full(4, 0.5))


def test_encode_index_is_taken_mod_d():
    shifted = LadderState.from_values(values=[1.0], first_ell=-3)
    reference = LadderState.from_values(values=[1.0], first_ell=1)
    np.testing.assert_allclose(encode(shifted, 4).alpha, encode(reference, 4).alpha, atol=1e-15)


def test_decode_basis_round_trip():
    for d in (2, 4, 8):
        for k, state in enumerate(decode_basis(d)):
            np.testing.assert_allclose(encode(state, d).alpha, QuditState.basis(d, k).alpha, atol=1e-14)


def test_encode_rejects_bad_dimension():
    with pytest.raises(InvalidInputError):
        encode(LadderState.mono_energetic(), 6)


def test_encode_two_rung_superposition_is_not_normalized():
    # rungs 0 and 4 land on the same qudit index at d = 4
    state = LadderState.from_values(values=np.array([1, 0, 0, 0, 1]) / np.sqrt(2), first_ell=0)
    assert state.norm == pytest.approx(1.0)
    encoded = encode(state, 4)
    assert encoded.norm ** 2 == pytest.approx(2.0, abs=1e-12)
    np.testing.assert_allclose(encoded.alpha, np.full(4, 1 / np.sqrt(2)), atol=1e-14)


def test_dft_matrix_is_unitary():
    F = dft_matrix(8).matrix
    np.testing.assert_allclose(F.conj().T @ F, np.eye(8), atol=1e-12)


def test_dft_matrix_small_dimensions():
    np.testing.assert_allclose(dft_matrix(2).matrix, np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)
    np.testing.assert_allclose(dft_matrix(4).matrix[1], np.array([1, -1j, -1, 1j]) / 2, atol=1e-15)


def test_pinem_qudit_is_diagonal_and_matches_ladder(rng, random_drive):
    for d in (4, 8):
        for _ in range(10):
            drive = random_drive(rng, harmonics=tuple(range(1, d // 2 + 1)))
            U = pinem_qudit(drive, d)
            assert U.off_diagonal_mass < 1e-9
            projected = np.column_stack([encode(apply_ladder_operator(s, drive), d).alpha for s in decode_basis(d)])
            np.testing.assert_allclose(projected, U.matrix, atol=1e-9)


def test_eigenphase_methods_agree(rng, random_drive):
    drive = random_drive(rng, harmonics=(1, 2, 3))
    for d in (2, 4, 8):
        character_sum = pinem_eigenphases(drive, d, method=EigenphaseMethods.CHARACTER_SUM)
        closed_form = pinem_eigenphases(drive, d, method=EigenphaseMethods.CLOSED_FORM)
        np.testing.assert_allclose(character_sum, closed_form, atol=1e-9)
        np.testing.assert_allclose(np.abs(closed_form), 1.0, atol=1e-12)
        np.testing.assert_allclose(closed_form, np.exp(1j * pinem_phases(drive, d)), atol=1e-12)


def test_single_harmonic_phase_at_d4():
    # Phi_k = 2 (Re g sin(x) - Im g cos(x)), x = 2 pi k / 4
    g = 0.3 + 0.2j
    phases = pinem_phases(HarmonicDrive.from_couplings({1: g}), 4)
    np.testing.assert_allclose(phases, [-0.4, 0.6, 0.4, -0.6], atol=1e-14)


def test_second_harmonic_eigenphases_alternate_at_d4():
    drive = HarmonicDrive.from_couplings({2: 0.8 - 0.35j})
    for method in EigenphaseMethods.ALL:
        eigenphases = pinem_eigenphases(drive, 4, method=method)
        assert eigenphases[0] == pytest.approx(eigenphases[2], abs=1e-12)
        assert eigenphases[1] == pytest.approx(eigenphases[3], abs=1e-12)
        assert abs(eigenphases[0] - eigenphases[1]) > 0.1


def test_fsp_one_step_d4_matrix():
    expected = 0.5 * np.array([
        [np.exp(-1j * np.pi / 4), 1, np.exp(3j * np.pi / 4), 1],
        [1, np.exp(-1j * np.pi / 4), 1, np.exp(3j * np.pi / 4)],
        [np.exp(3j * np.pi / 4), 1, np.exp(-1j * np.pi / 4), 1],
        [1, np.exp(3j * np.pi / 4), 1, np.exp(-1j * np.pi / 4)]
    ])
    np.testing.assert_allclose(fsp_qudit(FspSteps(steps=1, dim=4)).matrix, expected, atol=1e-12)


def test_fsp_two_steps_is_rx_on_first_qubit():
    F2 = fsp_qudit(FspSteps(steps=2, dim=4)).matrix
    assert identity_residual(F2, np.kron(rx(-np.pi / 2), I2)) < 1e-12


def test_fsp_power_law():
    for d in (2, 4, 8):
        F1 = fsp_qudit(FspSteps(steps=1, dim=d)).matrix
        for n in range(2, 5):
            np.testing.assert_allclose(fsp_qudit(FspSteps(steps=n, dim=d)).matrix,
                                       np.linalg.matrix_power(F1, n), atol=1e-10)


def test_fsp_steps_reject_fractions():
    with pytest.raises(ClosureError):
        FspSteps(steps=1.5, dim=4)
    with pytest.raises(ClosureError):
        FspSteps(steps=Fraction(1, 3), dim=4)
    assert FspSteps(steps=3, dim=4).z_ratio == Fraction(3, 8)


def test_closure_dichotomy(rng, random_drive):
    for d in (2, 4, 8):
        drive = random_drive(rng, harmonics=tuple(range(1, d // 2 + 1)))
        assert closure_residual(drive, d, n_samples=10) < 1e-8
        assert closure_residual(FspSteps(steps=1, dim=d), d, n_samples=10) < 1e-8
        assert closure_residual(Fraction(1, 3 * d), d, n_samples=10) > 1e-3


def test_encoded_norm_preserved(rng, random_drive):
    state = decode_basis(4)[2]
    for _ in range(3):
        state = apply_ladder_operator(state, random_drive(rng))
        state = apply_ladder_operator(state, FspSteps(steps=int(rng.integers(1, 8)), dim=4))
    assert encode(state, 4).norm == pytest.approx(1.0, abs=1e-8)


def test_qudit_state_fidelity():
    state = QuditState(dim=4, alpha=np.array([1, 0, 0, 1]) / np.sqrt(2))
    assert state.fidelity([1, 0, 0, 1]) == pytest.approx(1.0)
    assert state.fidelity([0, 1, 0, 0]) == pytest.approx(0.0)
    assert state.n_qubits == 2
    with pytest.raises(InvalidInputError):
        QuditState(dim=4, alpha=np.zeros(3))


def test_qudit_unitary_algebra():
    F1 = fsp_qudit(FspSteps(steps=1, dim=4))
    np.testing.assert_allclose(F1.dagger.dot(F1).matrix, QuditUnitary.identity(4).matrix, atol=1e-12)
    np.testing.assert_allclose(F1.power(3).matrix, fsp_qudit(FspSteps(steps=3, dim=4)).matrix, atol=1e-12)
    F2 = fsp_qudit(FspSteps(steps=1, dim=2))
    assert F2.kron(QuditUnitary.identity(2)).dim == 4
    np.testing.assert_allclose(F2.kron(QuditUnitary.identity(2)).matrix, fsp_qudit(FspSteps(steps=2, dim=4)).matrix,
                               atol=1e-12)
    out = F1.apply(QuditState.basis(4, 0))
    assert out.norm == pytest.approx(1.0)
    with pytest.raises(InvalidInputError):
        QuditUnitary(dim=2, matrix=np.array([[1, 1], [0, 1]]))
    with pytest.raises(InvalidInputError):
        F1.dot(F2)


def test_printed_closed_forms():
    # the 1/j weight is invisible on the first harmonic alone
    single = HarmonicDrive.from_couplings({1: 0.4 - 0.9j})
    np.testing.assert_allclose(weighted_eigenphases(single, 8), pinem_eigenphases(single, 8), atol=1e-12)
    two = HarmonicDrive.from_couplings({1: 0.4 - 0.9j, 2: 0.3 + 0.1j})
    assert np.max(np.abs(weighted_eigenphases(two, 8) - pinem_eigenphases(two, 8))) > 1e-3
    g1, g2 = np.pi / 8 * (1 + 1j), 15 * np.pi / 16 * 1j
    printed = printed_d4_diagonal(g1, g2)
    np.testing.assert_allclose(np.abs(printed), 1.0, atol=1e-15)
    oracle = pinem_eigenphases(HarmonicDrive.from_couplings({1: g1, 2: g2}), 4)
    assert identity_residual(np.diag(printed), np.diag(oracle)) > 1e-3
