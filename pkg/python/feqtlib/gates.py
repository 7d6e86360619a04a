# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.



"""
The purpose of this python3 script is to implement qubit-level algebra over the qudit space:
the gate zoo, embeddings, phase-invariant comparisons, Bloch vectors, the qubit
factorization identities and the phase-gate solver.
"""


import numpy as np
from typing import Callable, Dict, List, Sequence, Tuple, Union
from .constants import EigenphaseMethods
from .default import IDENTITY_TOLERANCE, QUDIT_NORM_TOLERANCE, RANDOM_SEED, SAMPLE_COUNT
from .exceptions import InvalidInputError
from .fsp_steps import FspSteps
from .harmonic_drive import HarmonicDrive
from .identity_report import IdentityReport
from .logging import get_logger
from .qubit_embedding import QubitEmbedding
from .qudit import fsp_qudit, pinem_phases, pinem_qudit
from .qudit_state import QuditState
from .qudit_unitary import QuditUnitary
from .utilities import check_dimension, global_phase_residual, num_qubits


logger = get_logger(__name__)


Matrix = Union[np.ndarray, QuditUnitary]


I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
T = np.diag([1, np.exp(1j * np.pi / 4)]).astype(complex)
# big-endian: qubit 1 is the most significant bit of the qudit index
CNOT_12 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CNOT_21 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
BELL_STATES = {
    'BELL_00': np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2),
    'BELL_01': np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2),
    'BELL_10': np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2),
    'BELL_11': np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
}


def rx(theta: float) -> np.ndarray:
    return np.cos(theta / 2) * I2 - 1j * np.sin(theta / 2) * X


def ry(theta: float) -> np.ndarray:
    return np.cos(theta / 2) * I2 - 1j * np.sin(theta / 2) * Y


def rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-1j * theta / 2), np.exp(1j * theta / 2)])


def gate_zoo(angle: float = np.pi / 4) -> Dict[str, np.ndarray]:
    """
    Returns the named gates; rotations are evaluated at the given angle.
    """
    zoo = {
        'I': I2,
        'H': H,
        'X': X,
        'Y': Y,
        'Z': Z,
        'T': T,
        'RX': rx(angle),
        'RY': ry(angle),
        'RZ': rz(angle),
        'CNOT_12': CNOT_12,
        'CNOT_21': CNOT_21,
        'SWAP': SWAP
    }
    for name, state in BELL_STATES.items():
        zoo['P_' + name] = np.outer(state, state.conj())
    return zoo


def embed(gate: np.ndarray, position: int, n_qubits: int) -> np.ndarray:
    return QubitEmbedding(n_qubits=n_qubits, position=position).embed(gate)


def _as_matrix(U: Matrix) -> np.ndarray:
    return U.matrix if isinstance(U, QuditUnitary) else np.asarray(U, dtype=complex)


def phase_dist(U: Matrix, V: Matrix) -> float:
    """
    Global-phase-invariant infidelity 1 - |tr(V^dag U)| / d.
    """
    U = _as_matrix(U)
    V = _as_matrix(V)
    if U.shape != V.shape:
        raise InvalidInputError('Shape mismatch: %s vs %s' % (str(U.shape), str(V.shape)))
    d = U.shape[0]
    return float(min(1.0, max(0.0, 1.0 - abs(np.trace(V.conj().T @ U)) / d)))


def identity_residual(lhs: Matrix, rhs: Matrix) -> float:
    """
    Returns min over chi of max|lhs - e^{i chi} rhs|.
    """
    return global_phase_residual(_as_matrix(lhs), _as_matrix(rhs))


def bloch_vector(state: QuditState, qubit: int) -> np.ndarray:
    """
    Bloch vector (<X>, <Y>, <Z>) of one qubit from the reduced density matrix.

    Parameters:
        state   :   QuditState object with unit norm.
        qubit   :   Qubit position (1 = leftmost).

    Returns:
        numpy array of length 3
    """
    n = num_qubits(state.dim)
    if not 1 <= qubit <= n:
        raise InvalidInputError('Qubit %i outside a %i-qubit register.' % (qubit, n))
    if abs(state.norm - 1.0) > QUDIT_NORM_TOLERANCE:
        raise InvalidInputError('Bloch vectors need a normalized state; norm = %.12f' % state.norm)
    psi = np.moveaxis(state.alpha.reshape((2,) * n), qubit - 1, 0).reshape(2, -1)
    rho = psi @ psi.conj().T
    return np.array([2 * rho[0, 1].real, -2 * rho[0, 1].imag, (rho[0, 0] - rho[1, 1]).real])


def _random_coupling(rng: np.random.Generator, max_magnitude: float = np.pi) -> complex:
    return complex(rng.uniform(0, max_magnitude) * np.exp(1j * rng.uniform(-np.pi, np.pi)))


def _pinem(couplings: Dict[int, complex], d: int, method: str) -> np.ndarray:
    return pinem_qudit(HarmonicDrive.from_couplings(couplings), d, method=method).matrix


def _fsp(steps: int, d: int) -> np.ndarray:
    return fsp_qudit(FspSteps(steps=steps, dim=d)).matrix


I4 = np.eye(4, dtype=complex)


def _result_i_a(c: Sequence[complex], method: str):
    return _pinem({2: c[0]}, 4, method), np.kron(I2, _pinem({1: c[0]}, 2, method))


def _result_i_b(c: Sequence[complex], method: str):
    g1 = abs(c[0]) * np.exp(-1j * np.pi / 4)
    return _pinem({1: g1}, 4, method), np.kron(_pinem({1: 1j * g1.imag}, 2, method), I2)


def _result_iii(c: Sequence[complex], method: str):
    return _pinem({2: c[0], 4: c[1]}, 8, method), np.kron(I2, _pinem({1: c[0], 2: c[1]}, 4, method))


def _result_v(c: Sequence[complex], method: str):
    return _pinem({4: c[0]}, 8, method), np.kron(I4, _pinem({1: c[0]}, 2, method))


# name -> (lhs, rhs, number of random couplings, builder)
RESULT_IDENTITIES: Dict[str, Tuple[str, str, int, Callable]] = {
    'I(a)': ('PINEM{(2,g2)} d=4', 'I2 x PINEM{(1,g2)} d=2', 1, _result_i_a),
    'I(b)': ('PINEM{(1,|g1|e^{-i pi/4})} d=4', 'PINEM{(1,i Im g1)} d=2 x I2', 1, _result_i_b),
    'II': ('FSP(2) d=4', 'FSP(1) d=2 x I2', 0, lambda c, m: (_fsp(2, 4), np.kron(_fsp(1, 2), I2))),
    'III': ('PINEM{(2,g2),(4,g4)} d=8', 'I2 x PINEM{(1,g2),(2,g4)} d=4', 2, _result_iii),
    'IV': ('FSP(2) d=8', 'FSP(1) d=4 x I2', 0, lambda c, m: (_fsp(2, 8), np.kron(_fsp(1, 4), I2))),
    'V': ('PINEM{(4,g4)} d=8', 'I2 x I2 x PINEM{(1,g4)} d=2', 1, _result_v),
    'VI': ('FSP(4) d=8', 'FSP(1) d=2 x I2 x I2', 0, lambda c, m: (_fsp(4, 8), np.kron(_fsp(1, 2), I4)))
}


def result_identity(
        name: str,
        couplings: Sequence[complex] = (),
        method: str = EigenphaseMethods.CHARACTER_SUM
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns both sides of one factorization identity for the given couplings.
    """
    if name not in RESULT_IDENTITIES:
        raise InvalidInputError('Unknown identity %s; choose from %s' % (name, list(RESULT_IDENTITIES.keys())))
    _, _, n_couplings, builder = RESULT_IDENTITIES[name]
    if len(couplings) != n_couplings:
        raise InvalidInputError('Identity %s takes %i couplings, got %i.' % (name, n_couplings, len(couplings)))
    return builder(list(couplings), method)


def results_suite(
        tolerance: float = IDENTITY_TOLERANCE,
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        method: str = EigenphaseMethods.CHARACTER_SUM
) -> List[IdentityReport]:
    """
    Evaluates the qubit factorization identities of PINEM and FSP gates over random couplings.

    Parameters:
        tolerance   :   Residual below which an identity holds.
        samples     :   Random coupling draws per PINEM identity.
        seed        :   Random seed.
        method      :   Eigenphase method used for PINEM gates.

    Returns:
        List of IdentityReport objects
    """
    logger.info('Started evaluating %i factorization identities.' % len(RESULT_IDENTITIES))
    rng = np.random.default_rng(seed)
    reports = []
    for name, (lhs_name, rhs_name, n_couplings, builder) in RESULT_IDENTITIES.items():
        sample_count = samples if n_couplings > 0 else 1
        worst = 0.0
        for _ in range(sample_count):
            couplings = [_random_coupling(rng) for _ in range(n_couplings)]
            lhs, rhs = builder(couplings, method)
            worst = max(worst, identity_residual(lhs, rhs))
        notes = []
        if name == 'I(b)':
            notes.append('Holds for g1 = |g1| e^{-i pi/4} with the one-qubit coupling i Im g1; '
                         'the printed e^{+i pi/4} and coupling g2 do not factorize.')
        report = IdentityReport(name=name, lhs=lhs_name, rhs=rhs_name, residual=worst,
                                tolerance=tolerance, sample_count=sample_count, notes=notes)
        if not report.passed:
            logger.warning('Identity %s failed: residual %.3e' % (name, worst))
        reports.append(report)
    logger.info('Finished evaluating factorization identities.')
    return reports


def hth_report(tolerance: float = 1e-12) -> IdentityReport:
    return IdentityReport(
        name='HTH', lhs='H T H', rhs='R_x(pi/4)',
        residual=identity_residual(H @ T @ H, rx(np.pi / 4)),
        tolerance=tolerance
    )


def _wrap(phases: np.ndarray) -> np.ndarray:
    # into (-pi, pi]
    return np.pi - np.mod(np.pi - phases, 2 * np.pi)


def phase_gate_residual(drive: HarmonicDrive, target_phases: np.ndarray) -> float:
    d = len(target_phases)
    return global_phase_residual(np.exp(1j * pinem_phases(drive, d)), np.exp(1j * np.asarray(target_phases)))


def _solve_two_harmonics_d4(target_phases: np.ndarray) -> HarmonicDrive:
    # relative phases r_k = Phi_k - Phi_0:
    # r1 = 2 Re g1 + 2 Im g1 + 4 Im g2, r2 = 4 Im g1, r3 = -2 Re g1 + 2 Im g1 + 4 Im g2
    r = _wrap(target_phases - target_phases[0])
    im_g1 = r[2] / 4
    re_g1 = (r[1] - r[3]) / 4
    im_g2 = (r[1] + r[3] - r[2]) / 8
    return HarmonicDrive.from_couplings({1: complex(re_g1, im_g1), 2: complex(0.0, im_g2)})


def _solve_least_squares(target_phases: np.ndarray, n_harmonics: int, max_rounds: int = 20) -> HarmonicDrive:
    d = len(target_phases)
    x = 2 * np.pi * np.arange(d) / d
    columns = [np.ones(d)]
    for j in range(1, n_harmonics + 1):
        columns.append(2 * np.sin(j * x))
        columns.append(-2 * np.cos(j * x))
    design = np.column_stack(columns)
    targets = _wrap(target_phases)
    windings = np.zeros(d)
    solution = np.zeros(design.shape[1])
    for _ in range(max_rounds):
        solution, _, _, _ = np.linalg.lstsq(design, targets + 2 * np.pi * windings, rcond=None)
        new_windings = np.round((design @ solution - targets) / (2 * np.pi))
        if np.array_equal(new_windings, windings):
            break
        windings = new_windings
    couplings = {j: complex(solution[2 * j - 1], solution[2 * j]) for j in range(1, n_harmonics + 1)}
    return HarmonicDrive.from_couplings(couplings)


def phase_gate_solve(target_phases: Sequence[float], n_harmonics: int) -> Tuple[HarmonicDrive, float]:
    """
    Finds a single PINEM drive realizing diag(exp(i target_phases)) up to a global phase.
    At d = 4 with two harmonics the relative phases are a linear, invertible function of
    (Re g1, Im g1, Im g2) and the solve is exact; otherwise a least-squares fit over the
    sinusoidal parametrization with winding refinement is used.

    Parameters:
        target_phases   :   Real vector of length d.
        n_harmonics     :   Number of harmonics j = 1..n_harmonics.

    Returns:
        Tuple[HarmonicDrive,residual]
    """
    target_phases = np.asarray(target_phases, dtype=float).reshape(-1)
    d = check_dimension(len(target_phases))
    if n_harmonics < 0:
        raise InvalidInputError('Number of harmonics must be >= 0: %i' % n_harmonics)
    if d == 4 and n_harmonics == 2:
        drive = _solve_two_harmonics_d4(target_phases)
    else:
        drive = _solve_least_squares(target_phases, n_harmonics)
    return drive, phase_gate_residual(drive, target_phases)
