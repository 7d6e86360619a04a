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
The purpose of this python3 script is to implement main APIs.
"""


import numpy as np
import pandas as pd
from typing import Dict, Optional, Sequence
from .compile_report import CompileReport
from .compiler import compile_named, evolve_ladder, export_physical
from .constants import Programs, ScheduleStepTypes
from .default import *
from .gate_schedule import GateSchedule, PinemStep
from .logging import get_logger
from .physical_params import PhysicalParams
from .physical_schedule import PhysicalSchedule
from .programs import bell_program, bloch_row, fig2_program
from .qudit import encode
from .run_config import RunConfig
from .simulation_result import SimulationResult
from .template import Template
from .verification import run_suite


logger = get_logger(__name__)


def simulate(
        config: RunConfig,
        n_starts: int = NUM_STARTS,
        num_threads: int = NUM_THREADS
) -> SimulationResult:
    """
    Runs a schedule (or a built-in program) on the energy ladder.

    Parameters:
        config      :   RunConfig object.
        n_starts    :   Starts per FSP pattern when a program compiles its gates.
        num_threads :   Number of worker processes for program compilation.

    Returns:
        SimulationResult
    """
    d = config.dimension
    if config.program is not None:
        logger.info('Running program %s.' % config.program)
        if config.program == Programs.BELL:
            program = bell_program(n_starts=n_starts, seed=config.seed, num_threads=num_threads)
        else:
            program = fig2_program(n_starts=n_starts, seed=config.seed, num_threads=num_threads)
        fidelity = program.fidelity
        if config.target_state is not None:
            fidelity = program.final_state.fidelity(config.target_state)
        return SimulationResult(
            final_state=program.ladder_state,
            qudit_state=program.final_state,
            trajectory=program.trajectory,
            fidelity=fidelity,
            checks=program.checks,
            notes=program.notes
        )

    schedule = config.schedule if config.schedule is not None else GateSchedule(dim=d)
    initial = config.initial_state.build(dimension=d, half_width=config.half_width)
    logger.info('Simulating %i PINEM and %i FSP steps at dimension %i.' % (schedule.n_pinem, schedule.n_fsp, d))
    final_state, states = evolve_ladder(initial, schedule, auto_widen=config.half_width is None)
    qudit_state = encode(final_state, d)

    trajectory = None
    if d == 4:
        encoded = [encode(state, d) for state in states]
        if all(abs(e.norm - 1.0) < QUDIT_NORM_TOLERANCE for e in encoded):
            labels = ['initial'] + [ScheduleStepTypes.PINEM if isinstance(step, PinemStep) else ScheduleStepTypes.FSP
                                    for step in schedule.steps]
            trajectory = pd.DataFrame([bloch_row(label, e) for label, e in zip(labels, encoded)])
            trajectory.insert(0, 'step', np.arange(len(encoded)))
        else:
            logger.warning('The encoded state is not normalized (norm %.6f); Bloch trajectory skipped.'
                           % encoded[0].norm)

    fidelity = None
    if config.target_state is not None:
        fidelity = qudit_state.fidelity(config.target_state)
    return SimulationResult(final_state=final_state, qudit_state=qudit_state, trajectory=trajectory,
                            fidelity=fidelity)


def compile_gate(
        name: str,
        angles: Optional[Sequence[float]] = None,
        template: Optional[Template] = None,
        n_starts: int = NUM_STARTS,
        seed: int = RANDOM_SEED,
        threshold: float = CONVERGENCE_THRESHOLD,
        num_threads: int = NUM_THREADS
) -> CompileReport:
    """
    Compiles a named two-qubit gate into a PINEM/FSP schedule at d = 4.

    Parameters:
        name        :   Gate name or alias (e.g. 'cnot21', 'swap', 'rz').
        angles      :   Rotation angles of parameterized gates.
        template    :   Template override.
        n_starts    :   Starts per FSP pattern.
        seed        :   Random seed.
        threshold   :   Convergence threshold.
        num_threads :   Number of worker processes.

    Returns:
        CompileReport
    """
    return compile_named(name=name, angles=angles, n_starts=n_starts, seed=seed, threshold=threshold,
                         num_threads=num_threads, template=template)


def verify(
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
    Runs one verification suite ('ladder', 'qudit', 'results' or 'conjectures').

    Returns:
        Report dict with 'passed'
    """
    return run_suite(suite=suite, dims=dims, samples=samples, seed=seed, swap_search=swap_search,
                     num_threads=num_threads, max_coupling=max_coupling, drive_count=drive_count)


def export_schedule(
        schedule: GateSchedule,
        params: PhysicalParams
) -> PhysicalSchedule:
    """
    Converts a schedule into physical drift lengths and laser harmonics.
    """
    return export_physical(schedule=schedule, params=params)
