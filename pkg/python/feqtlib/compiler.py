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
The purpose of this python3 script is to synthesize PINEM/FSP schedules that realize
target qudit unitaries, to evaluate schedules at qudit and ladder level, and to
export schedules in physical units.
"""


import multiprocessing as mp
import numpy as np
import time
from fractions import Fraction
from functools import lru_cache
from scipy.optimize import minimize
from typing import List, Optional, Sequence, Tuple, Union
from .compile_report import CompileReport
from .constants import EigenphaseMethods, NamedGates
from .default import *
from .exceptions import InvalidInputError
from .fsp_steps import FspSteps
from .gate_schedule import FspStep, GateSchedule, PinemStep
from .gates import CNOT_12, CNOT_21, H, SWAP, I2, phase_dist, phase_gate_solve, rz
from .harmonic_drive import HarmonicDrive
from .ladder import apply_fsp, apply_pinem, required_half_width, z_dispersion
from .ladder_state import LadderState
from .logging import get_logger
from .physical_params import PhysicalParams
from .physical_schedule import LaserHarmonic, PhysicalDrift, PhysicalInteraction, PhysicalSchedule
from .qudit import decode_basis, encode, fsp_qudit, pinem_eigenphases
from .qudit_unitary import QuditUnitary
from .template import Template


logger = get_logger(__name__)


Target = Union[np.ndarray, QuditUnitary]


@lru_cache(maxsize=128)
def _fsp_matrix(steps: int, dim: int) -> np.ndarray:
    matrix = fsp_qudit(FspSteps(steps=steps, dim=dim)).matrix
    matrix.setflags(write=False)
    return matrix


def step_matrix(step: Union[PinemStep, FspStep], dim: int,
                method: str = EigenphaseMethods.CLOSED_FORM) -> np.ndarray:
    if isinstance(step, PinemStep):
        return np.diag(pinem_eigenphases(step.drive, dim, method=method))
    return _fsp_matrix(step.steps, dim)


def schedule_unitary(schedule: GateSchedule, method: str = EigenphaseMethods.CLOSED_FORM) -> QuditUnitary:
    """
    Returns the qudit-space unitary of a schedule (later steps multiply from the left).
    """
    U = np.eye(schedule.dim, dtype=complex)
    for step in schedule.steps:
        U = step_matrix(step, schedule.dim, method=method) @ U
    return QuditUnitary(dim=schedule.dim, matrix=U)


def evolve_ladder(
        state: LadderState,
        schedule: GateSchedule,
        auto_widen: bool = True,
        budget: float = TRUNCATION_BUDGET
) -> Tuple[LadderState, List[LadderState]]:
    """
    Runs a schedule on the energy ladder.

    Parameters:
        state       :   Initial LadderState.
        schedule    :   GateSchedule object.
        auto_widen  :   If True, widen the window before each PINEM interaction
                        so that the truncation budget holds.
        budget      :   Truncation budget.

    Returns:
        Tuple[final_state,trajectory] where trajectory[0] is the initial state
        and trajectory[i] the state after step i.
    """
    logger.debug('Started ladder evolution of %i steps.' % len(schedule.steps))
    trajectory = [state]
    for step in schedule.steps:
        if isinstance(step, PinemStep):
            if auto_widen:
                state = state.widened(required_half_width(step.drive, state.support_radius()))
            state = apply_pinem(state, step.drive, budget=budget)
        else:
            state = apply_fsp(state, Fraction(step.steps, 2 * schedule.dim))
        trajectory.append(state)
    logger.debug('Finished ladder evolution; final half width %i.' % state.half_width)
    return state, trajectory


def cross_level_residual(schedule: GateSchedule) -> float:
    """
    Largest difference between encoding the ladder-level evolution of each decode_basis
    state and the corresponding column of the qudit-level schedule unitary.
    """
    U = schedule_unitary(schedule, method=EigenphaseMethods.CHARACTER_SUM).matrix
    residual = 0.0
    for k, basis_state in enumerate(decode_basis(schedule.dim)):
        final_state, _ = evolve_ladder(basis_state, schedule)
        alpha = encode(final_state, schedule.dim).alpha
        residual = max(residual, float(np.linalg.norm(alpha - U[:, k])))
    return residual


@lru_cache(maxsize=32)
def _sinusoid_tables(dim: int, harmonics: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    # dPhi_k/dRe(g_j) and dPhi_k/dIm(g_j)
    x = 2 * np.pi * np.arange(dim) / dim
    S = np.column_stack([2 * np.sin(j * x) for j in harmonics])
    C = np.column_stack([-2 * np.cos(j * x) for j in harmonics])
    return S, C


def build_schedule(
        x: np.ndarray,
        template: Template,
        pattern: Sequence[int],
        dim: int
) -> GateSchedule:
    """
    Returns the schedule for parameters x = (Re g_j, Im g_j) per harmonic per PINEM.
    """
    params = np.asarray(x, dtype=float).reshape(template.n_pinem, len(template.harmonics), 2)
    steps = []
    for p in range(template.n_pinem):
        drive = HarmonicDrive(terms=tuple(
            (j, complex(params[p, i, 0], params[p, i, 1])) for i, j in enumerate(template.harmonics)))
        steps.append(PinemStep(drive=drive))
        if p < template.n_gaps:
            steps.append(FspStep(steps=int(pattern[p])))
    return GateSchedule(dim=dim, steps=tuple(steps), max_harmonic=max(max(template.harmonics), dim // 2))


def infidelity_and_gradient(
        x: np.ndarray,
        target: np.ndarray,
        template: Template,
        pattern: Sequence[int]
) -> Tuple[float, np.ndarray]:
    """
    Infidelity 1 - |tr(V^dag U(x))|/d of the templated schedule and its analytic gradient.

    Parameters:
        x           :   Flattened (n_pinem, n_harmonics, 2) couplings.
        target      :   Target matrix V.
        template    :   Template object.
        pattern     :   FSP step counts of the gaps.

    Returns:
        Tuple[infidelity,gradient]
    """
    dim = target.shape[0]
    n_harmonics = len(template.harmonics)
    params = np.asarray(x, dtype=float).reshape(template.n_pinem, n_harmonics, 2)
    S, C = _sinusoid_tables(dim, template.harmonics)

    # time-ordered step matrices; PINEM entries remember their index
    matrices = []
    pinem_slots = []
    for p in range(template.n_pinem):
        phases = S @ params[p, :, 0] + C @ params[p, :, 1]
        pinem_slots.append((len(matrices), p))
        matrices.append(np.diag(np.exp(1j * phases)))
        if p < template.n_gaps:
            matrices.append(_fsp_matrix(int(pattern[p]), dim))

    n = len(matrices)
    prefix = [np.eye(dim, dtype=complex)]
    for M in matrices:
        prefix.append(M @ prefix[-1])
    suffix = [np.eye(dim, dtype=complex)] * (n + 1)
    for i in range(n - 1, 0, -1):
        suffix[i - 1] = suffix[i] @ matrices[i]

    V_dag = target.conj().T
    t = np.trace(V_dag @ prefix[n])
    abs_t = max(abs(t), 1e-300)
    infidelity = 1.0 - abs(t) / dim

    gradient = np.zeros_like(params)
    for i, p in pinem_slots:
        # w_k = (R_i V^dag L_i)[k, k]
        w = np.sum(prefix[i] * (V_dag @ suffix[i]).T, axis=1)
        wD = 1j * w * np.diag(matrices[i])
        dt_re = wD @ S
        dt_im = wD @ C
        gradient[p, :, 0] = -np.real(np.conj(t) * dt_re) / (abs_t * dim)
        gradient[p, :, 1] = -np.real(np.conj(t) * dt_im) / (abs_t * dim)
    return float(infidelity), gradient.reshape(-1)


def run_start(
        target: np.ndarray,
        template: Template,
        pattern: Tuple[int, ...],
        seed: int,
        pattern_index: int,
        start_index: int,
        max_iterations: int = MAX_ITERATIONS
) -> Tuple[float, np.ndarray, int]:
    """
    One seeded BFGS run. Returns (infidelity, parameters, iterations).
    """
    rng = np.random.default_rng([seed, pattern_index, start_index])
    x0 = rng.uniform(-START_SCALE, START_SCALE, size=template.n_parameters)
    result = minimize(
        infidelity_and_gradient,
        x0,
        args=(target, template, pattern),
        jac=True,
        method='BFGS',
        options={'gtol': 1e-12, 'maxiter': max_iterations}
    )
    infidelity, _ = infidelity_and_gradient(result.x, target, template, pattern)
    return infidelity, result.x, int(result.nit)


def compile(
        target: Target,
        template: Template,
        n_starts: int = NUM_STARTS,
        seed: int = RANDOM_SEED,
        threshold: float = CONVERGENCE_THRESHOLD,
        num_threads: int = NUM_THREADS,
        max_iterations: int = MAX_ITERATIONS,
        target_name: str = 'target'
) -> CompileReport:
    """
    Searches PINEM couplings (and FSP patterns) realizing a target unitary up to global phase.

    Patterns are tried in enumeration order; for each, n_starts seeded BFGS runs are made
    and the search stops after the first pattern whose best run reaches the threshold.
    Ties are broken by (pattern index, start index), so the report does not depend on num_threads.

    Parameters:
        target          :   Target unitary.
        template        :   Template object.
        n_starts        :   Number of starts per FSP pattern.
        seed            :   Random seed (>= 0).
        threshold       :   Infidelity below which the search has converged.
        num_threads     :   Number of worker processes.
        max_iterations  :   BFGS iteration limit per start.
        target_name     :   Name recorded in the report.

    Returns:
        CompileReport
    """
    V = target.matrix if isinstance(target, QuditUnitary) else np.asarray(target, dtype=complex)
    dim = V.shape[0]
    QuditUnitary(dim=dim, matrix=V)
    if seed < 0:
        raise InvalidInputError('Seed must be non-negative: %i' % seed)
    if n_starts < 1:
        raise InvalidInputError('Number of starts must be >= 1: %i' % n_starts)
    start_time = time.time()

    if template.n_pinem == 0:
        schedule = GateSchedule(dim=dim)
        infidelity = phase_dist(schedule_unitary(schedule), V)
        return CompileReport(target_name=target_name, schedule=schedule, infidelity=infidelity,
                             converged=infidelity < threshold, threshold=threshold, n_starts=0,
                             n_iterations=0, rng_seed=seed, fsp_pattern=(),
                             wall_time=time.time() - start_time)

    best = None     # (infidelity, pattern_index, start_index, x, pattern)
    total_iterations = 0
    total_starts = 0
    pool = mp.Pool(processes=num_threads) if num_threads > 1 else None
    try:
        for pattern_index, pattern in enumerate(template.patterns()):
            logger.info('Started %s search with FSP pattern %s (%i starts).'
                        % (target_name, str(pattern), n_starts))
            if pool is not None:
                async_results = [pool.apply_async(run_start, args=(V, template, pattern, seed, pattern_index,
                                                                    start_index, max_iterations))
                                 for start_index in range(n_starts)]
                results = [async_result.get() for async_result in async_results]
            else:
                results = [run_start(V, template, pattern, seed, pattern_index, start_index, max_iterations)
                           for start_index in range(n_starts)]
            total_starts += n_starts
            for start_index, (infidelity, x, iterations) in enumerate(results):
                total_iterations += iterations
                if best is None or infidelity < best[0]:
                    best = (infidelity, pattern_index, start_index, x, pattern)
            pattern_best = min(r[0] for r in results)
            logger.info('Finished FSP pattern %s; best infidelity %.3e.' % (str(pattern), pattern_best))
            if pattern_best < threshold:
                break
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    _, _, _, x, pattern = best
    schedule = build_schedule(x, template, pattern, dim)
    infidelity = phase_dist(schedule_unitary(schedule), V)
    converged = infidelity < threshold
    if not converged:
        logger.warning('Compilation of %s did not converge: best infidelity %.3e (threshold %.1e).'
                       % (target_name, infidelity, threshold))
    return CompileReport(
        target_name=target_name,
        schedule=schedule,
        infidelity=infidelity,
        converged=converged,
        threshold=threshold,
        n_starts=total_starts,
        n_iterations=total_iterations,
        rng_seed=seed,
        fsp_pattern=tuple(int(n) for n in pattern),
        wall_time=time.time() - start_time
    )


def default_template(name: str) -> Template:
    if name == NamedGates.HADAMARD_1:
        return Template(n_pinem=2)
    if name == NamedGates.CNOT_21:
        return Template(n_pinem=3)
    if name == NamedGates.SWAP:
        return Template(n_pinem=6, fsp_pattern=(2, 1, 2, 2, 1, 2), trailing_fsp=True)
    raise InvalidInputError('Gate %s has no search template.' % name)


DEFAULT_ANGLES = {
    NamedGates.RZ_PAIR: (np.pi / 2, -np.pi / 2),
    NamedGates.RX_1: (np.pi / 4,)
}


def named_target(name: str, angles: Optional[Sequence[float]] = None) -> np.ndarray:
    """
    Returns the 4 x 4 matrix of a named gate.
    """
    angles = _check_angles(name, angles)
    if name == NamedGates.HADAMARD_1:
        return np.kron(H, I2)
    if name == NamedGates.HADAMARD_2:
        return np.kron(I2, H)
    if name == NamedGates.CNOT_21:
        return CNOT_21
    if name == NamedGates.CNOT_12:
        return CNOT_12
    if name == NamedGates.SWAP:
        return SWAP
    if name == NamedGates.RZ_PAIR:
        return np.kron(rz(angles[0]), rz(angles[1]))
    if name == NamedGates.RX_1:
        return np.kron(H @ rz(angles[0]) @ H, I2)
    raise InvalidInputError('Unknown gate %s; choose from %s' % (name, NamedGates.ALL))


def _check_angles(name: str, angles: Optional[Sequence[float]]) -> Tuple[float, ...]:
    expected = len(DEFAULT_ANGLES.get(name, ()))
    if angles is None:
        return DEFAULT_ANGLES.get(name, ())
    if len(angles) != expected:
        raise InvalidInputError('Gate %s takes %i angles, got %i.' % (name, expected, len(angles)))
    return tuple(float(a) for a in angles)


def _composite_report(
        name: str,
        parts: List[CompileReport],
        angles: Sequence[float],
        threshold: float,
        seed: int,
        start_time: float
) -> CompileReport:
    schedule = parts[0].schedule
    for part in parts[1:]:
        schedule = schedule.then(part.schedule)
    infidelity = phase_dist(schedule_unitary(schedule), named_target(name, angles))
    # errors of the parts add in amplitude
    threshold = threshold * len(parts) ** 2
    return CompileReport(
        target_name=name,
        schedule=schedule,
        infidelity=infidelity,
        converged=infidelity < threshold and all(part.converged for part in parts),
        threshold=threshold,
        n_starts=sum(part.n_starts for part in parts),
        n_iterations=sum(part.n_iterations for part in parts),
        rng_seed=seed,
        fsp_pattern=schedule.fsp_pattern,
        wall_time=time.time() - start_time
    )


def compile_named(
        name: str,
        angles: Optional[Sequence[float]] = None,
        n_starts: int = NUM_STARTS,
        seed: int = RANDOM_SEED,
        threshold: float = CONVERGENCE_THRESHOLD,
        num_threads: int = NUM_THREADS,
        template: Optional[Template] = None
) -> CompileReport:
    """
    Compiles one of the named two-qubit gates at d = 4.

    hadamard_1, cnot_21 and swap are searched with their default templates; hadamard_2 and
    cnot_12 conjugate hadamard_1 and cnot_21 with swap; rz_pair is a single PINEM from the
    phase-gate solver; rx_1 is hadamard_1, R_z, hadamard_1 (H R_z(t) H = R_x(t)).

    Parameters:
        name        :   One of NamedGates.ALL (or an alias).
        angles      :   (t1, t2) for rz_pair, (t,) for rx_1.
        n_starts    :   Starts per FSP pattern.
        seed        :   Random seed.
        threshold   :   Convergence threshold.
        num_threads :   Number of worker processes.
        template    :   Template override for hadamard_1, cnot_21 and swap.

    Returns:
        CompileReport
    """
    name = NamedGates.ALIASES.get(name, name)
    if name not in NamedGates.ALL:
        raise InvalidInputError('Unknown gate %s; choose from %s' % (name, NamedGates.ALL))
    angles = _check_angles(name, angles)
    start_time = time.time()
    if template is not None and name not in (NamedGates.HADAMARD_1, NamedGates.CNOT_21, NamedGates.SWAP):
        raise InvalidInputError('Gate %s is composed from other gates; templates apply to %s only.'
                                % (name, [NamedGates.HADAMARD_1, NamedGates.CNOT_21, NamedGates.SWAP]))

    def search(gate: str) -> CompileReport:
        return compile(
            target=named_target(gate),
            template=template if template is not None and gate == name else default_template(gate),
            n_starts=n_starts,
            seed=seed,
            threshold=threshold,
            num_threads=num_threads,
            target_name=gate
        )

    if name in (NamedGates.HADAMARD_1, NamedGates.CNOT_21, NamedGates.SWAP):
        return search(name)
    if name == NamedGates.RZ_PAIR:
        target = named_target(name, angles)
        drive, residual = phase_gate_solve(np.angle(np.diag(target)), n_harmonics=2)
        schedule = GateSchedule(dim=4, steps=(PinemStep(drive=drive),))
        infidelity = phase_dist(schedule_unitary(schedule), target)
        logger.info('R_z pair (%f, %f) realized by one PINEM; phase residual %.3e.'
                    % (angles[0], angles[1], residual))
        return CompileReport(target_name=name, schedule=schedule, infidelity=infidelity,
                             converged=infidelity < threshold, threshold=threshold, n_starts=0,
                             n_iterations=0, rng_seed=seed, fsp_pattern=(),
                             wall_time=time.time() - start_time)
    if name == NamedGates.RX_1:
        h1 = search(NamedGates.HADAMARD_1)
        rz_part = compile_named(NamedGates.RZ_PAIR, angles=(angles[0], 0.0), seed=seed, threshold=threshold)
        return _composite_report(name, [h1, rz_part, h1], angles, threshold, seed, start_time)
    swap = search(NamedGates.SWAP)
    inner = search(NamedGates.HADAMARD_1 if name == NamedGates.HADAMARD_2 else NamedGates.CNOT_21)
    return _composite_report(name, [swap, inner, swap], angles, threshold, seed, start_time)


def export_physical(schedule: GateSchedule, params: PhysicalParams) -> PhysicalSchedule:
    """
    Converts drift steps to meters and annotates every laser harmonic.

    Parameters:
        schedule    :   GateSchedule object.
        params      :   PhysicalParams object.

    Returns:
        PhysicalSchedule
    """
    z_d = z_dispersion(params)
    physical = PhysicalSchedule(dim=schedule.dim, params=params, z_dispersion=z_d)
    for i, step in enumerate(schedule.steps):
        if isinstance(step, FspStep):
            physical.steps.append(PhysicalDrift(steps=step.steps, length=step.steps * z_d / (2 * schedule.dim)))
            continue
        harmonics = []
        for j, g in step.drive.terms:
            harmonics.append(LaserHarmonic(j=j, angular_frequency=j * params.omega,
                                           magnitude=abs(g), argument=float(np.angle(g))))
            if abs(g) > FEASIBILITY_COUPLING_LIMIT:
                message = 'Step %i harmonic %i: |g| = %.3f exceeds %.3f.' % (i, j, abs(g), FEASIBILITY_COUPLING_LIMIT)
                logger.warning(message)
                physical.warnings.append(message)
        physical.steps.append(PhysicalInteraction(harmonics=tuple(harmonics)))
    if params.is_valid_regime is False:
        message = 'Electron parameters violate E0 >> hbar*omega > dE0.'
        logger.warning(message)
        physical.warnings.append(message)
    return physical
