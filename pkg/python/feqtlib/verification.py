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
The purpose of this python3 script is to run the invariant suites behind 'feqt verify'
and to report where printed closed forms deviate from the ladder-derived gates.
"""


import numpy as np
from fractions import Fraction
from typing import Dict, List, Optional, Sequence
from .conjectures import conjecture1_check, conjecture2_sweep, conjecture3_check
from .constants import EigenphaseMethods, VerificationSuites
from .default import *
from .exceptions import InvalidInputError
from .fsp_steps import FspSteps
from .gates import hth_report, identity_residual, phase_dist, phase_gate_solve, result_identity, results_suite
from .harmonic_drive import HarmonicDrive
from .identity_report import IdentityReport
from .ladder import apply_fsp, apply_pinem, bessel_amplitudes, eels_spectrum, fsp_phases, \
    pinem_amplitudes, pinem_unitary, required_half_width
from .ladder_state import LadderState
from .logging import get_logger
from .qudit import closure_residual, decode_basis, encode, printed_d4_diagonal, weighted_eigenphases, \
    fsp_diagonal, fsp_qudit, pinem_eigenphases, pinem_phases, apply_ladder_operator
from .utilities import check_dimension, num_qubits


logger = get_logger(__name__)


def random_drive(
        rng: np.random.Generator,
        max_harmonic: int,
        max_coupling: float = np.pi
) -> HarmonicDrive:
    """
    Random drive on a random non-empty subset of harmonics 1..max_harmonic with |g| <= max_coupling.
    """
    if max_coupling <= 0 or max_harmonic < 1:
        return HarmonicDrive.empty()
    n_terms = int(rng.integers(1, max_harmonic + 1))
    harmonics = sorted(rng.choice(np.arange(1, max_harmonic + 1), size=n_terms, replace=False).tolist())
    return HarmonicDrive.from_couplings({
        j: complex(rng.uniform(0, max_coupling) * np.exp(1j * rng.uniform(-np.pi, np.pi))) for j in harmonics
    })


def _interior(L: int, margin: int) -> slice:
    return slice(L - margin, L + margin + 1)


def ladder_suite(
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        max_harmonic: int = 4,
        max_coupling: float = np.pi
) -> List[IdentityReport]:
    """
    Checks unitarity, commutativity and translation invariance of PINEM, the Bessel oracle,
    FSP additivity, spectrum invariance under FSP and truncation sizing on random drives.
    max_coupling = 0 runs every check on the empty drive.
    """
    logger.info('Started ladder suite (%i samples).' % samples)
    rng = np.random.default_rng(seed)
    margin = 8
    worst = {name: 0.0 for name in ['unitarity', 'commutativity', 'translation_invariance', 'bessel_oracle',
                                    'apply_norm', 'fsp_additivity', 'eels_fsp_invariance', 'truncation_sizing']}
    witness = np.inf
    for _ in range(samples):
        drive = random_drive(rng, max_harmonic, max_coupling)
        other = random_drive(rng, max_harmonic, max_coupling)
        L = required_half_width(drive, 0)
        U = pinem_unitary(drive, L)
        worst['unitarity'] = max(worst['unitarity'], float(np.max(np.abs(U.conj().T @ U - np.eye(2 * L + 1)))))

        L2 = required_half_width(drive, 0) + required_half_width(other, 0) + margin
        U1 = pinem_unitary(drive, L2)
        U2 = pinem_unitary(other, L2)
        block = _interior(L2, margin)
        commutator = (U1 @ U2 - U2 @ U1)[:, block]
        worst['commutativity'] = max(worst['commutativity'], float(np.max(np.abs(commutator))))
        shift = np.abs(U1[1:, 1:] - U1[:-1, :-1])[:, block]
        worst['translation_invariance'] = max(worst['translation_invariance'], float(np.max(shift)))

        single = HarmonicDrive(terms=drive.terms[:1])
        f, _ = pinem_amplitudes(single, required_half_width(single, 0))
        oracle = bessel_amplitudes(single, required_half_width(single, 0))
        worst['bessel_oracle'] = max(worst['bessel_oracle'], float(np.max(np.abs(f - oracle))))

        state = LadderState.mono_energetic(half_width=L)
        after = apply_pinem(state, drive)
        worst['apply_norm'] = max(worst['apply_norm'], abs(after.norm - 1.0))

        z1 = Fraction(int(rng.integers(0, 64)), 64)
        z2 = Fraction(int(rng.integers(0, 64)), 48)
        both = apply_fsp(apply_fsp(after, z1), z2)
        once = apply_fsp(after, z1 + z2)
        worst['fsp_additivity'] = max(worst['fsp_additivity'], float(np.max(np.abs(both.amplitudes - once.amplitudes))))
        spectrum = eels_spectrum(both).values - eels_spectrum(after).values
        worst['eels_fsp_invariance'] = max(worst['eels_fsp_invariance'], float(np.max(np.abs(spectrum))))

        wide = LadderState.mono_energetic(half_width=2 * L)
        outside = apply_pinem(wide, drive).probabilities
        outside_mass = float(np.sum(outside[:L]) + np.sum(outside[3 * L + 1:]))
        worst['truncation_sizing'] = max(worst['truncation_sizing'], outside_mass)

        if not drive.is_empty:
            generic = HarmonicDrive.from_couplings({1: 0.7 + 0.4j})
            L3 = required_half_width(generic, 0) + margin
            U_P = pinem_unitary(generic, L3)
            U_F = np.diag(np.exp(-1j * fsp_phases(Fraction(1, 8), np.arange(-L3, L3 + 1))))
            block3 = _interior(L3, margin)
            witness = min(witness, float(np.max(np.abs((U_P @ U_F - U_F @ U_P)[block3, block3]))))

    tolerances = {
        'unitarity': 1e-9,
        'commutativity': 1e-9,
        'translation_invariance': 1e-9,
        'bessel_oracle': 1e-9,
        'apply_norm': 1e-10,
        'fsp_additivity': 1e-12,
        'eels_fsp_invariance': 1e-12,
        'truncation_sizing': TRUNCATION_BUDGET
    }
    reports = [IdentityReport(name=name, lhs=name, rhs='0', residual=worst[name], tolerance=tolerances[name],
                              sample_count=samples) for name in worst.keys()]
    if np.isfinite(witness):
        reports.append(IdentityReport(name='pinem_fsp_noncommutation', lhs='[U_PINEM, U_FSP(z_D/8)]', rhs='0',
                                      residual=witness, tolerance=0.1, sample_count=1, witness=True))
    logger.info('Finished ladder suite.')
    return reports


def _circulant_fsp(steps: FspSteps) -> np.ndarray:
    # c_m = (1/d) sum_r p_r zeta^(m r), U[j, l] = c_{l - j}
    d = steps.dim
    p = fsp_diagonal(steps)
    zeta = np.exp(-2j * np.pi / d)
    c = np.array([np.sum(p * zeta ** (m * np.arange(d))) / d for m in range(d)])
    return np.array([[c[(l - j) % d] for l in range(d)] for j in range(d)])


FSP_D4_ONE_STEP = 0.5 * np.array([
    [np.exp(-1j * np.pi / 4), 1, np.exp(3j * np.pi / 4), 1],
    [1, np.exp(-1j * np.pi / 4), 1, np.exp(3j * np.pi / 4)],
    [np.exp(3j * np.pi / 4), 1, np.exp(-1j * np.pi / 4), 1],
    [1, np.exp(3j * np.pi / 4), 1, np.exp(-1j * np.pi / 4)]
])


def qudit_suite(
        dims: Sequence[int] = (2, 4, 8),
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        drive_count: int = DRIVE_COUNT
) -> List[IdentityReport]:
    """
    Checks closure of PINEM and quantized FSP in the qudit space (and its failure off the
    quantized distances), diagonality and eigenphase agreement, the FSP power law and circulant
    form, the d = 4 FSP matrix, and norm preservation of gate-evolved encoded states.

    Parameters:
        dims        :   Qudit dimensions.
        samples     :   Random ladder states per closure check.
        seed        :   Random seed.
        drive_count :   Random PINEM drives per dimension.

    Returns:
        List of IdentityReport objects
    """
    if samples < 1 or drive_count < 1:
        raise InvalidInputError('samples and drive_count must be positive (got %i, %i).' % (samples, drive_count))
    logger.info('Started qudit suite for dimensions %s (%i drives, %i states).'
                % (str(list(dims)), drive_count, samples))
    reports = []
    for d in dims:
        check_dimension(d, minimum=2)
        rng = np.random.default_rng([seed, d])

        pinem_closure = 0.0
        diagonality = 0.0
        eigenphase_match = 0.0
        harmonic_leakage = 0.0
        for s in range(drive_count):
            drive = random_drive(rng, max(1, d // 2))
            pinem_closure = max(pinem_closure, closure_residual(drive, d, n_samples=samples, seed=seed + s))
            projected = np.column_stack([
                encode(apply_ladder_operator(state, drive), d).alpha for state in decode_basis(d)])
            diagonality = max(diagonality, float(np.max(np.abs(projected - np.diag(np.diag(projected))))))
            character_sum = pinem_eigenphases(drive, d, method=EigenphaseMethods.CHARACTER_SUM)
            closed_form = pinem_eigenphases(drive, d, method=EigenphaseMethods.CLOSED_FORM)
            eigenphase_match = max(eigenphase_match,
                                   float(np.max(np.abs(character_sum - np.diag(projected)))),
                                   float(np.max(np.abs(character_sum - closed_form))))
            # the phase sequence only carries the drive's harmonics (aliased mod d)
            spectrum = np.fft.fft(pinem_phases(drive, d)) / d
            allowed = set()
            for j in drive.harmonics:
                allowed.update({j % d, (-j) % d})
            leak = [abs(spectrum[m]) for m in range(d) if m not in allowed]
            harmonic_leakage = max([harmonic_leakage] + leak)

        fsp_closure = max(closure_residual(FspSteps(steps=n, dim=d), d, n_samples=samples, seed=seed)
                          for n in (1, 2, 3))
        non_closure = closure_residual(Fraction(1, 3 * d), d, n_samples=samples, seed=seed)
        F1 = fsp_qudit(FspSteps(steps=1, dim=d)).matrix
        power_law = max(float(np.max(np.abs(fsp_qudit(FspSteps(steps=n, dim=d)).matrix
                                            - np.linalg.matrix_power(F1, n)))) for n in range(2, 5))
        circulant = float(np.max(np.abs(F1 - _circulant_fsp(FspSteps(steps=1, dim=d)))))

        norm_drift = 0.0
        for state in decode_basis(d):
            for _ in range(3):
                op = random_drive(rng, max(1, d // 2)) if rng.uniform() < 0.5 else \
                    FspSteps(steps=int(rng.integers(1, 2 * d)), dim=d)
                state = apply_ladder_operator(state, op)
            norm_drift = max(norm_drift, abs(encode(state, d).norm - 1.0))

        reports.extend([
            IdentityReport(name='pinem_closure(d=%i)' % d, lhs='encode(U_PINEM psi)', rhs='M encode(psi)',
                           residual=pinem_closure, tolerance=CLOSURE_PASS_TOLERANCE,
                           sample_count=drive_count * samples),
            IdentityReport(name='fsp_closure(d=%i)' % d, lhs='encode(U_FSP(n z_D/2d) psi)', rhs='M encode(psi)',
                           residual=fsp_closure, tolerance=CLOSURE_PASS_TOLERANCE, sample_count=3 * samples),
            IdentityReport(name='fsp_non_closure(d=%i)' % d, lhs='encode(U_FSP(z_D/3d) psi)', rhs='M encode(psi)',
                           residual=non_closure, tolerance=CLOSURE_FAIL_THRESHOLD, sample_count=samples,
                           witness=True),
            IdentityReport(name='pinem_diagonality(d=%i)' % d, lhs='projected PINEM', rhs='diagonal',
                           residual=diagonality, tolerance=1e-9, sample_count=drive_count),
            IdentityReport(name='eigenphase_oracle(d=%i)' % d, lhs='character sum', rhs='projection, closed form',
                           residual=eigenphase_match, tolerance=1e-9, sample_count=drive_count),
            IdentityReport(name='eigenphase_harmonics(d=%i)' % d, lhs='DFT(Phi)', rhs='drive harmonics only',
                           residual=harmonic_leakage, tolerance=1e-9, sample_count=drive_count),
            IdentityReport(name='fsp_power_law(d=%i)' % d, lhs='U_FSP(n)', rhs='U_FSP(1)^n',
                           residual=power_law, tolerance=1e-10, sample_count=3),
            IdentityReport(name='fsp_circulant(d=%i)' % d, lhs='U_DFT^dag D U_DFT', rhs='circulant',
                           residual=circulant, tolerance=1e-12),
            IdentityReport(name='encoded_norm(d=%i)' % d, lhs='|alpha|', rhs='1', residual=norm_drift,
                           tolerance=QUDIT_NORM_TOLERANCE, sample_count=d)
        ])
        if d == 4:
            reports.append(IdentityReport(name='fsp_d4_matrix', lhs='U_FSP(1) d=4', rhs='displayed matrix',
                                          residual=float(np.max(np.abs(F1 - FSP_D4_ONE_STEP))), tolerance=1e-12))
    logger.info('Finished qudit suite.')
    return reports


def conjectures_suite(
        dims: Sequence[int] = (8,),
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        swap_search: bool = False,
        num_threads: int = NUM_THREADS
) -> Dict:
    """
    Evidence for the factorization, phase-gate and nearest-neighbor SWAP conjectures.
    Never fails: every report is marked evidence-only.
    """
    logger.info('Started conjecture sweeps for dimensions %s.' % str(list(dims)))
    reports = []
    sweeps = []
    swaps = []
    for d in dims:
        n = num_qubits(check_dimension(d, minimum=2))
        for k in range(1, n):
            reports.extend(conjecture1_check(n, k, samples=samples, seed=seed))
        sweeps.append(conjecture2_sweep(d, max(1, d // 2), n_targets=samples, seed=seed))
        if swap_search and n >= 2:
            report = conjecture3_check(n, (n - 1, n), seed=seed, num_threads=num_threads)
            swaps.append(report.to_dict())
    logger.info('Finished conjecture sweeps.')
    return {'factorization': [r.to_dict() for r in reports], 'phase_gate': sweeps, 'swap': swaps}


def conventions_report() -> Dict:
    """
    Residuals between printed closed forms and the gates derived from the ladder generator.
    """
    printed_g1, printed_g2 = np.pi / 8 * (1 + 1j), 15 * np.pi / 16 * 1j
    printed_drive = HarmonicDrive.from_couplings({1: printed_g1, 2: printed_g2})
    oracle = pinem_eigenphases(printed_drive, 4)
    weighting_drive = HarmonicDrive.from_couplings({1: 0.3 + 0.2j, 2: 0.1 - 0.4j, 3: -0.25 + 0.05j})
    weighting_oracle = pinem_eigenphases(weighting_drive, 8)
    printed_single = HarmonicDrive.from_couplings({1: 0.9 * np.exp(1j * np.pi / 4)})
    lhs_printed = np.diag(pinem_eigenphases(printed_single, 4))
    rhs_printed = np.kron(np.diag(pinem_eigenphases(HarmonicDrive.from_couplings({1: 1j * (0.9 * np.exp(1j * np.pi / 4)).imag}), 2)),
                          np.eye(2))
    lhs, rhs = result_identity('I(b)', [0.9])
    rz_target = np.diag([1, -1j, 1j, 1])
    solved, _ = phase_gate_solve(np.angle(np.diag(rz_target)), 2)
    return {
        'd4_diagonal': {
            'oracle_phases': np.angle(oracle / oracle[0]).tolist(),
            'printed_phases': np.angle(printed_d4_diagonal(printed_g1, printed_g2) / printed_d4_diagonal(printed_g1, printed_g2)[0]).tolist(),
            'residual': identity_residual(np.diag(oracle), np.diag(printed_d4_diagonal(printed_g1, printed_g2)))
        },
        'harmonic_weighting': {
            'residual_with_1_over_r': identity_residual(np.diag(weighting_oracle), np.diag(weighted_eigenphases(weighting_drive, 8))),
            'residual_closed_form': identity_residual(
                np.diag(weighting_oracle), np.diag(pinem_eigenphases(weighting_drive, 8, method=EigenphaseMethods.CLOSED_FORM)))
        },
        'two_to_one_qubit': {
            'residual_printed_phase': identity_residual(lhs_printed, rhs_printed),
            'residual_mirrored_phase': identity_residual(lhs, rhs)
        },
        'rz_pair_couplings': {
            'printed_infidelity': phase_dist(np.diag(oracle), rz_target),
            'solver_g1': [solved.coupling(1).real, solved.coupling(1).imag],
            'solver_g2': [solved.coupling(2).real, solved.coupling(2).imag]
        }
    }


def run_suite(
        suite: str,
        dims: Optional[Sequence[int]] = None,
        samples: int = SAMPLE_COUNT,
        seed: int = RANDOM_SEED,
        swap_search: bool = False,
        num_threads: int = NUM_THREADS,
        max_coupling: float = np.pi,
        drive_count: int = DRIVE_COUNT
) -> Dict:
    """
    Runs one verification suite and returns its JSON-ready report.

    Parameters:
        suite           :   One of VerificationSuites.ALL.
        dims            :   Qudit dimensions (qudit and conjectures suites).
        samples         :   Random samples per check.
        seed            :   Random seed.
        swap_search     :   Include the nearest-neighbor SWAP search in the conjectures suite.
        num_threads     :   Number of worker processes for the SWAP search.
        max_coupling    :   Largest |g| of random ladder drives (0 = empty drive).
        drive_count     :   Random PINEM drives per dimension (qudit suite).

    Returns:
        dict with per-check results and 'passed'
    """
    if suite not in VerificationSuites.ALL:
        raise InvalidInputError('Unknown suite %s; choose from %s' % (suite, VerificationSuites.ALL))
    report = {'suite': suite, 'samples': samples, 'seed': seed}
    if suite == VerificationSuites.LADDER:
        checks = ladder_suite(samples=samples, seed=seed, max_coupling=max_coupling)
    elif suite == VerificationSuites.QUDIT:
        dims = list(dims) if dims is not None else [2, 4, 8]
        report['dims'] = dims
        report['drive_count'] = drive_count
        checks = qudit_suite(dims=dims, samples=samples, seed=seed, drive_count=drive_count)
    elif suite == VerificationSuites.RESULTS:
        checks = results_suite(samples=samples, seed=seed) + [hth_report()]
        report['conventions'] = conventions_report()
    else:
        dims = list(dims) if dims is not None else [8]
        report['dims'] = dims
        evidence = conjectures_suite(dims=dims, samples=samples, seed=seed, swap_search=swap_search,
                                     num_threads=num_threads)
        report.update(evidence)
        report['passed'] = True
        report['evidence_only'] = True
        return report
    report['checks'] = [check.to_dict() for check in checks]
    report['passed'] = all(check.passed for check in checks)
    for check in checks:
        if not check.passed:
            logger.warning('Check %s failed: residual %.3e (tolerance %.1e).'
                           % (check.name, check.residual, check.tolerance))
    return report
