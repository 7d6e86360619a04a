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
The purpose of this python3 script is to project ladder states onto the d = 2^n qudit space
and to derive the qudit-space PINEM and FSP gates.
"""


import numpy as np
from fractions import Fraction
from typing import List, Union
from .constants import EigenphaseMethods
from .default import RANDOM_SEED, SAMPLE_COUNT
from .exceptions import InvalidInputError
from .fsp_steps import FspSteps
from .harmonic_drive import HarmonicDrive
from .ladder import apply_fsp, apply_pinem, pinem_amplitudes, required_half_width
from .ladder_state import LadderState
from .logging import get_logger
from .qudit_state import QuditState
from .qudit_unitary import QuditUnitary
from .utilities import check_dimension


logger = get_logger(__name__)


LadderOperator = Union[HarmonicDrive, FspSteps, Fraction]


def roots_of_unity(d: int) -> np.ndarray:
    """
    Returns zeta_d^m for m = 0..d-1 with zeta_d = exp(-2*pi*i/d).
    """
    return np.exp(-2j * np.pi * np.arange(d) / d)


def _character_table(d: int, ells: np.ndarray) -> np.ndarray:
    # zeta_d^(k * ell) indexed exactly through (k * ell) mod d
    return roots_of_unity(d)[np.mod(np.outer(np.arange(d), ells), d)]


def encode(state: LadderState, d: int) -> QuditState:
    """
    Projects a ladder state onto the qudit space:
    alpha_k = (1/sqrt(d)) sum_ell zeta_d^(k ell) psi_ell.
    The result is not renormalized; its norm is recorded on the QuditState.

    Parameters:
        state   :   LadderState object.
        d       :   Qudit dimension (power of two).

    Returns:
        QuditState
    """
    check_dimension(d)
    alpha = _character_table(d, state.ells) @ state.amplitudes / np.sqrt(d)
    return QuditState(dim=d, alpha=alpha)


def dft_matrix(d: int) -> QuditUnitary:
    check_dimension(d)
    return QuditUnitary(dim=d, matrix=_character_table(d, np.arange(d)) / np.sqrt(d))


def decode_basis(d: int) -> List[LadderState]:
    """
    Returns ladder states on rungs 0..d-1 that encode to the qudit basis states |k>:
    psi_ell = zeta_d^(-k ell) / sqrt(d).
    """
    check_dimension(d)
    ells = np.arange(d)
    states = []
    for k in range(d):
        values = np.conj(roots_of_unity(d)[np.mod(k * ells, d)]) / np.sqrt(d)
        states.append(LadderState.from_values(values=values, first_ell=0, half_width=max(1, d - 1)))
    return states


def pinem_phases(drive: HarmonicDrive, d: int) -> np.ndarray:
    """
    Real exponents Phi_k with lambda_k = exp(i Phi_k), from the Fourier diagonalization
    of the ladder generator:
    Phi_k = 2 sum_j (Re g_j sin(j x_k) - Im g_j cos(j x_k)),  x_k = 2 pi k / d.
    """
    check_dimension(d)
    x = 2 * np.pi * np.arange(d) / d
    phases = np.zeros(d)
    for j, g in drive.terms:
        phases += 2 * (g.real * np.sin(j * x) - g.imag * np.cos(j * x))
    return phases


def pinem_eigenphases(
        drive: HarmonicDrive,
        d: int,
        method: str = EigenphaseMethods.CHARACTER_SUM
) -> np.ndarray:
    """
    Returns the eigenvalues lambda_k of the qudit-space PINEM gate.

    Parameters:
        drive   :   HarmonicDrive object.
        d       :   Qudit dimension.
        method  :   'character_sum' sums f_m zeta_d^(k m) over the ladder amplitudes;
                    'closed_form' evaluates exp(i Phi_k).

    Returns:
        Complex vector of length d
    """
    check_dimension(d)
    if method == EigenphaseMethods.CLOSED_FORM:
        return np.exp(1j * pinem_phases(drive, d))
    if method != EigenphaseMethods.CHARACTER_SUM:
        raise InvalidInputError('Unknown eigenphase method: %s' % method)
    L = required_half_width(drive, 0)
    f, _ = pinem_amplitudes(drive, L)
    return _character_table(d, np.arange(-L, L + 1)) @ f


def pinem_qudit(
        drive: HarmonicDrive,
        d: int,
        method: str = EigenphaseMethods.CHARACTER_SUM
) -> QuditUnitary:
    return QuditUnitary(dim=d, matrix=np.diag(pinem_eigenphases(drive, d, method=method)))


def fsp_diagonal(steps: FspSteps) -> np.ndarray:
    """
    Returns exp(-i pi n k^2 / d) for k = 0..d-1, computed with exact modular arithmetic.
    """
    d = steps.dim
    k = np.arange(d)
    # exp(-i pi n k^2 / d) = zeta_{2d}^(n k^2)
    exponents = np.mod(steps.steps * k * k, 2 * d)
    return np.exp(-1j * np.pi * exponents / d)


def fsp_qudit(steps: FspSteps) -> QuditUnitary:
    """
    Returns U_DFT^dag . diag(exp(-i pi n k^2 / d)) . U_DFT for n integer steps of z_D/(2d).
    """
    F = dft_matrix(steps.dim).matrix
    return QuditUnitary(dim=steps.dim, matrix=F.conj().T @ np.diag(fsp_diagonal(steps)) @ F)


def printed_d4_diagonal(g1: complex, g2: complex) -> np.ndarray:
    """
    The d = 4 PINEM diagonal in its printed closed form, with theta = 2 Im g1,
    phi = 2 Re g1 and gamma = Im g2. Kept for the conventions report only.
    """
    theta, phi, gamma = 2 * g1.imag, 2 * g1.real, g2.imag
    return np.exp(1j * np.array([-(gamma + phi), gamma - phi, theta - gamma, phi + gamma]))


def weighted_eigenphases(drive: HarmonicDrive, d: int) -> np.ndarray:
    """
    The eigenvalue formula in its printed form, including the 1/r weight on |g_r|.
    Kept for the conventions report only.
    """
    x = 2 * np.pi * np.arange(d) / d
    exponent = np.zeros(d)
    for r, g in drive.terms:
        exponent += 2 * abs(g) / r * np.sin(r * x - np.angle(g))
    return np.exp(1j * exponent)


def apply_ladder_operator(state: LadderState, op: LadderOperator) -> LadderState:
    """
    Applies a PINEM drive, a quantized FSP or an arbitrary drift z/z_D to a ladder state,
    widening the window as required.
    """
    if isinstance(op, HarmonicDrive):
        state = state.widened(required_half_width(op, state.support_radius()))
        return apply_pinem(state, op)
    if isinstance(op, FspSteps):
        return apply_fsp(state, op.z_ratio)
    return apply_fsp(state, Fraction(op))


def random_ladder_state(rng: np.random.Generator, support: int) -> LadderState:
    values = rng.normal(size=2 * support + 1) + 1j * rng.normal(size=2 * support + 1)
    return LadderState.from_values(values=values, first_ell=-support, normalize=True)


def closure_residual(
        op: LadderOperator,
        d: int,
        n_samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED
) -> float:
    """
    Measures how far a ladder operator is from acting linearly on encoded states.
    A d x d matrix M is fitted from d + 1 random probe states, then the worst
    |encode(op psi) - M encode(psi)| over fresh random states is returned.

    Parameters:
        op          :   HarmonicDrive, FspSteps, or a drift z/z_D.
        d           :   Qudit dimension.
        n_samples   :   Number of fresh states.
        seed        :   Random seed.

    Returns:
        float
    """
    check_dimension(d)
    rng = np.random.default_rng(seed)
    support = 2 * d

    def encoded_pair(state: LadderState):
        before = encode(state, d).alpha
        after = encode(apply_ladder_operator(state, op), d).alpha
        return before, after

    probes = [encoded_pair(random_ladder_state(rng, support)) for _ in range(d + 1)]
    X = np.array([p[0] for p in probes])    # rows: encoded inputs
    Y = np.array([p[1] for p in probes])
    # Y = X M^T
    M_T, _, _, _ = np.linalg.lstsq(X, Y, rcond=None)
    residual = 0.0
    for _ in range(n_samples):
        before, after = encoded_pair(random_ladder_state(rng, support))
        residual = max(residual, float(np.linalg.norm(after - before @ M_T)))
    return residual
