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
The purpose of this python3 script is to simulate the electron on its energy ladder:
PINEM interactions, free-space propagation and the dispersion length.
"""


import math
import numpy as np
import pandas as pd
from fractions import Fraction
from functools import lru_cache
from scipy.linalg import eigh
from scipy.special import jv
from typing import Tuple, Union
from .default import TRUNCATION_BUDGET
from .exceptions import InvalidInputError, TruncationError
from .harmonic_drive import HarmonicDrive
from .ladder_state import LadderState
from .logging import get_logger
from .physical_params import PhysicalParams


logger = get_logger(__name__)


Ratio = Union[Fraction, int, float]


def build_pinem_generator(drive: HarmonicDrive, L: int) -> np.ndarray:
    """
    Builds the anti-Hermitian band generator A of U_PINEM = exp(A) on [-L, L].
    A[ell, ell + j] = conj(g_j) and A[ell, ell - j] = -g_j.

    Parameters:
        drive   :   HarmonicDrive object.
        L       :   Half width of the truncated ladder.

    Returns:
        (2L+1) x (2L+1) complex matrix
    """
    if L < 1:
        raise InvalidInputError('Half width must be >= 1: %i' % L)
    if drive.max_harmonic > L:
        raise InvalidInputError('Half width %i is smaller than harmonic %i.' % (L, drive.max_harmonic))
    n = 2 * L + 1
    A = np.zeros((n, n), dtype=complex)
    for j, g in drive.terms:
        A += np.diag(np.full(n - j, np.conj(g)), k=j)
        A += np.diag(np.full(n - j, -g), k=-j)
    return A


def pinem_unitary(drive: HarmonicDrive, L: int) -> np.ndarray:
    """
    Returns U = exp(A) via the eigendecomposition of the Hermitian matrix iA.
    """
    A = build_pinem_generator(drive=drive, L=L)
    if drive.is_empty:
        return np.eye(2 * L + 1, dtype=complex)
    w, V = eigh(1j * A)
    return (V * np.exp(-1j * w)) @ V.conj().T


@lru_cache(maxsize=256)
def _central_column(drive: HarmonicDrive, L: int) -> np.ndarray:
    column = pinem_unitary(drive=drive, L=L)[:, L]
    column.setflags(write=False)
    return column


def pinem_amplitudes(
        drive: HarmonicDrive,
        L: int,
        budget: float = TRUNCATION_BUDGET
) -> Tuple[np.ndarray, bool]:
    """
    Returns f_ell, the amplitudes of U_PINEM|0>, and whether the truncation budget held.

    Parameters:
        drive   :   HarmonicDrive object.
        L       :   Half width; f[L + ell] holds f_ell.
        budget  :   Allowed probability on the outermost max_j rungs of each side.

    Returns:
        Tuple[amplitudes,within_budget]
    """
    f = np.array(_central_column(drive, L))
    width = max(drive.max_harmonic, 1)
    outer_mass = float(np.sum(np.abs(f[:width]) ** 2) + np.sum(np.abs(f[-width:]) ** 2))
    within_budget = outer_mass < budget
    if not within_budget:
        logger.warning('PINEM amplitudes at L=%i leave %.3e probability at the truncation edges '
                       '(budget %.1e); use L >= %i.'
                       % (L, outer_mass, budget, required_half_width(drive, 0)))
    return f, within_budget


def bessel_amplitudes(drive: HarmonicDrive, L: int) -> np.ndarray:
    """
    Closed form of f_ell for a single harmonic j with g = |g| e^{ia}:
    f_{jn} = J_n(2|g|) (-e^{ia})^n, zero on rungs that are not multiples of j.
    """
    if len(drive.terms) > 1:
        raise InvalidInputError('The Bessel form holds for a single harmonic, got %i.' % len(drive.terms))
    f = np.zeros(2 * L + 1, dtype=complex)
    if drive.is_empty:
        f[L] = 1.0
        return f
    j, g = drive.terms[0]
    n = np.arange(-(L // j), L // j + 1)
    f[L + j * n] = jv(n, 2 * abs(g)) * (-np.exp(1j * np.angle(g))) ** n
    return f


def required_half_width(drive: HarmonicDrive, support: int) -> int:
    """
    Half width that keeps the edge mass of a state supported on [-support, support]
    below the truncation budget after one PINEM interaction.
    """
    spread = sum(j * (2 * abs(g) + 20) for j, g in drive.terms)
    return max(1, support + int(math.ceil(spread)))


def _minimal_half_width(probabilities: np.ndarray, budget: float) -> int:
    # probabilities over [-M, M]; smallest L' with mass at |ell| >= L' below budget
    M = (len(probabilities) - 1) // 2
    shell_mass = np.append(probabilities[M], probabilities[M + 1:] + probabilities[M - 1::-1])
    at_or_beyond = np.cumsum(shell_mass[::-1])[::-1]
    candidates = np.nonzero(at_or_beyond < budget)[0]
    return int(candidates[0]) if len(candidates) > 0 else M + 1


def apply_pinem(
        state: LadderState,
        drive: HarmonicDrive,
        budget: float = TRUNCATION_BUDGET
) -> LadderState:
    """
    Applies U_PINEM as a convolution with f_ell on the state's window.

    Parameters:
        state   :   LadderState object.
        drive   :   HarmonicDrive object.
        budget  :   Truncation budget for leaked plus edge probability.

    Returns:
        LadderState
    """
    if drive.is_empty:
        return state
    L = state.half_width
    L_f = required_half_width(drive, 0)
    f = _central_column(drive, L_f)
    full = np.convolve(state.amplitudes, f)   # rungs [-(L + L_f), L + L_f]
    probabilities = np.abs(full) ** 2
    kept = full[L_f:L_f + 2 * L + 1]
    leaked = float(np.sum(probabilities[:L_f]) + np.sum(probabilities[L_f + 2 * L + 1:]))
    edge = float(np.abs(kept[0]) ** 2 + np.abs(kept[-1]) ** 2)
    if leaked + edge >= budget:
        raise TruncationError(
            edge_mass=leaked + edge,
            budget=budget,
            required_half_width=_minimal_half_width(probabilities, budget)
        )
    return LadderState(half_width=L, amplitudes=kept)


def fsp_phase(z_ratio: Ratio, ell: int) -> float:
    """
    Returns the dispersion phase 2*pi*(z/z_D)*ell^2 reduced to [0, 2*pi).
    The reduction is exact for rational z/z_D.
    """
    turns = Fraction(z_ratio) * ell * ell
    return 2 * math.pi * float(turns - math.floor(turns))


def fsp_phases(z_ratio: Ratio, ells: np.ndarray) -> np.ndarray:
    return np.array([fsp_phase(z_ratio, int(ell)) for ell in ells])


def apply_fsp(state: LadderState, z_ratio: Ratio) -> LadderState:
    """
    Propagates the electron by z = z_ratio * z_D: psi_ell <- exp(-i phi_ell) psi_ell.
    """
    phases = fsp_phases(z_ratio, state.ells)
    return LadderState(half_width=state.half_width, amplitudes=np.exp(-1j * phases) * state.amplitudes)


def z_dispersion(params: PhysicalParams) -> float:
    """
    Returns z_D = 2 beta^2 gamma^3 omega_C v / omega^2 in meters
    (or the configured override).
    """
    if params.z_dispersion_override is not None:
        return float(params.z_dispersion_override)
    return 2 * params.beta ** 2 * params.lorentz_gamma ** 3 * params.omega_C * params.v / params.omega ** 2


def eels_spectrum(state: LadderState) -> pd.Series:
    """
    Returns the energy-loss spectrum |psi_ell|^2 indexed by ell.
    """
    return pd.Series(state.probabilities, index=pd.Index(state.ells, name='ell'), name='probability')
