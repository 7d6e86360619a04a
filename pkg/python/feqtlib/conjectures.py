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
The purpose of this python3 script is to gather numerical evidence for the conjectured
qubit structure of PINEM/FSP gates: factorization onto qubit subsets, universality of
PINEM as a phase gate, and nearest-neighbor SWAP synthesis.
"""


import numpy as np
from typing import Dict, Optional, Tuple
from .compile_report import CompileReport
from .compiler import compile
from .constants import EigenphaseMethods
from .default import *
from .exceptions import InvalidInputError
from .fsp_steps import FspSteps
from .gates import SWAP, embed, identity_residual, phase_gate_solve
from .harmonic_drive import HarmonicDrive
from .identity_report import IdentityReport
from .logging import get_logger
from .qudit import fsp_qudit, pinem_qudit
from .template import Template


logger = get_logger(__name__)


def conjecture1_check(
        n: int,
        k: int,
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        max_terms: int = 2,
        method: str = EigenphaseMethods.CHARACTER_SUM
) -> Tuple[IdentityReport, IdentityReport]:
    """
    Checks, for d = 2^n, that
    (a) a PINEM drive using only harmonics that are multiples of 2^k equals
        I_2^{(x)k} (x) PINEM(harmonics / 2^k) at dimension d / 2^k, and
    (b) FSP by 2^k steps equals FSP(1 step) at dimension d / 2^k (x) I_2^{(x)k}.

    Parameters:
        n           :   Number of qubits.
        k           :   Number of qubits left untouched (1 <= k <= n - 1).
        samples     :   Random drives for (a).
        seed        :   Random seed.
        max_terms   :   Harmonics per random drive.
        method      :   Eigenphase method for PINEM gates.

    Returns:
        Tuple[pinem_report,fsp_report]
    """
    if not 1 <= k <= n - 1:
        raise InvalidInputError('Need 1 <= k <= n - 1, got n=%i, k=%i.' % (n, k))
    d = 2 ** n
    factor = 2 ** k
    small = d // factor
    identity = np.eye(factor, dtype=complex)
    # multiples of 2^k up to d/2
    multiples = list(range(1, max(1, small // 2) + 1))
    rng = np.random.default_rng([seed, n, k])
    worst = 0.0
    for _ in range(samples):
        n_terms = min(max_terms, len(multiples))
        chosen = sorted(rng.choice(multiples, size=n_terms, replace=False).tolist())
        couplings = {m: complex(rng.uniform(0, np.pi) * np.exp(1j * rng.uniform(-np.pi, np.pi))) for m in chosen}
        drive = HarmonicDrive.from_couplings(couplings)
        lhs = pinem_qudit(drive.scaled_harmonics(factor), d, method=method).matrix
        rhs = np.kron(identity, pinem_qudit(drive, small, method=method).matrix)
        worst = max(worst, identity_residual(lhs, rhs))
    pinem_report = IdentityReport(
        name='conjecture1_pinem(n=%i,k=%i)' % (n, k),
        lhs='PINEM{(2^k m, g_m)} d=%i' % d,
        rhs='I2^%i x PINEM{(m, g_m)} d=%i' % (k, small),
        residual=worst,
        tolerance=CLOSURE_PASS_TOLERANCE,
        sample_count=samples,
        evidence_only=True
    )
    lhs = fsp_qudit(FspSteps(steps=factor, dim=d)).matrix
    rhs = np.kron(fsp_qudit(FspSteps(steps=1, dim=small)).matrix, identity)
    fsp_report = IdentityReport(
        name='conjecture1_fsp(n=%i,k=%i)' % (n, k),
        lhs='FSP(%i) d=%i' % (factor, d),
        rhs='FSP(1) d=%i x I2^%i' % (small, k),
        residual=identity_residual(lhs, rhs),
        tolerance=CLOSURE_PASS_TOLERANCE,
        evidence_only=True
    )
    return pinem_report, fsp_report


def conjecture2_sweep(
        d: int,
        n_harmonics: int,
        n_targets: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        tolerance: float = CONJECTURE2_SUCCESS_TOLERANCE
) -> Dict:
    """
    Solves random diagonal phase gates with one PINEM interaction and summarizes how often
    the residual stays below the tolerance.

    Returns:
        dict with success_rate, worst_residual and a log10-residual histogram
    """
    rng = np.random.default_rng([seed, d, n_harmonics])
    residuals = np.zeros(n_targets)
    for i in range(n_targets):
        target = rng.uniform(-np.pi, np.pi, size=d)
        _, residuals[i] = phase_gate_solve(target, n_harmonics)
    edges = np.arange(-17, 2, dtype=float)
    counts, _ = np.histogram(np.log10(np.maximum(residuals, 1e-17)), bins=edges)
    summary = {
        'dim': d,
        'n_harmonics': n_harmonics,
        'n_targets': n_targets,
        'tolerance': tolerance,
        'success_rate': float(np.mean(residuals < tolerance)) if n_targets > 0 else 0.0,
        'worst_residual': float(np.max(residuals)) if n_targets > 0 else 0.0,
        'histogram': {
            'log10_edges': edges.tolist(),
            'counts': counts.tolist()
        }
    }
    logger.info('Phase-gate sweep d=%i with %i harmonics: success rate %.3f, worst residual %.3e.'
                % (d, n_harmonics, summary['success_rate'], summary['worst_residual']))
    return summary


def conjecture3_check(
        n: int,
        pair: Tuple[int, int],
        n_starts: Optional[int] = None,
        seed: int = RANDOM_SEED,
        num_threads: int = NUM_THREADS,
        threshold: float = CONVERGENCE_THRESHOLD
) -> CompileReport:
    """
    Compiles SWAP on qubits (i, i+1) of an n-qubit register. The 6-PINEM drift pattern of the
    two-qubit SWAP is scaled by d/4 and harmonics 1..d/2 are used. Evidence only.
    """
    i, i_next = pair
    if i_next != i + 1 or not 1 <= i < n:
        raise InvalidInputError('Pair must be nearest neighbors (i, i+1) within %i qubits: %s' % (n, str(pair)))
    d = 2 ** n
    target = embed(SWAP, i, n)
    template = Template(
        n_pinem=6,
        fsp_pattern=tuple(s * (d // 4) for s in (2, 1, 2, 2, 1, 2)),
        harmonics=tuple(range(1, d // 2 + 1)),
        trailing_fsp=True
    )
    if n_starts is None:
        n_starts = NUM_STARTS if n == 2 else 8
    logger.info('Started nearest-neighbor SWAP search on qubits %s of %i.' % (str(pair), n))
    report = compile(target=target, template=template, n_starts=n_starts, seed=seed,
                     threshold=threshold, num_threads=num_threads,
                     target_name='swap(%i,%i)/n=%i' % (i, i_next, n))
    logger.info('Finished nearest-neighbor SWAP search; best infidelity %.3e.' % report.infidelity)
    return report
