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
The purpose of this python3 script is to implement the RunConfig dataclass.
"""


import os
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, List, Optional
from .constants import InitialStateTypes, Programs
from .default import DIMENSION, RANDOM_SEED
from .exceptions import ConfigError, InvalidInputError
from .gate_schedule import GateSchedule
from .ladder_state import LadderState
from .logging import get_logger
from .utilities import check_dimension, pairs_to_complex, read_json_file


logger = get_logger(__name__)


RUN_CONFIG_KEYS = {'dimension', 'initial_state', 'schedule', 'program', 'half_width', 'target_state', 'out_dir', 'seed'}
INITIAL_STATE_KEYS = {
    InitialStateTypes.MONO_ENERGETIC: {'type'},
    InitialStateTypes.BASIS: {'type', 'index'},
    InitialStateTypes.EXPLICIT: {'type', 'amplitudes', 'first_ell'}
}


@dataclass(frozen=True)
class InitialStateSpec:
    type: str = InitialStateTypes.MONO_ENERGETIC
    index: Optional[int] = None
    amplitudes: Optional[List[List[float]]] = None
    first_ell: int = 0

    @classmethod
    def from_dict(cls, data: Dict) -> 'InitialStateSpec':
        if not isinstance(data, dict) or data.get('type') not in InitialStateTypes.ALL:
            raise ConfigError('initial_state.type must be one of %s.' % InitialStateTypes.ALL)
        unknown = set(data.keys()) - INITIAL_STATE_KEYS[data['type']]
        if len(unknown) > 0:
            raise ConfigError('Unknown initial_state fields: %s' % sorted(unknown))
        if data['type'] == InitialStateTypes.BASIS and not isinstance(data.get('index'), int):
            raise ConfigError('initial_state.index must be an integer for basis states.')
        if data['type'] == InitialStateTypes.EXPLICIT:
            if not isinstance(data.get('amplitudes'), list) or len(data['amplitudes']) == 0:
                raise ConfigError('initial_state.amplitudes must be a non-empty list of [re, im] pairs.')
            if not isinstance(data.get('first_ell', 0), int):
                raise ConfigError('initial_state.first_ell must be an integer.')
        return cls(
            type=data['type'],
            index=data.get('index'),
            amplitudes=data.get('amplitudes'),
            first_ell=data.get('first_ell', 0)
        )

    def build(self, dimension: int, half_width: Optional[int] = None) -> LadderState:
        """
        Returns the initial ladder state. Explicit amplitudes are normalized.
        """
        from .qudit import decode_basis
        try:
            if self.type == InitialStateTypes.MONO_ENERGETIC:
                state = LadderState.mono_energetic(half_width=1)
            elif self.type == InitialStateTypes.BASIS:
                if not 0 <= self.index < dimension:
                    raise ConfigError('Basis index %i out of range for dimension %i.' % (self.index, dimension))
                state = decode_basis(dimension)[self.index]
            else:
                state = LadderState.from_values(
                    values=pairs_to_complex(self.amplitudes),
                    first_ell=self.first_ell,
                    normalize=True
                )
            if half_width is not None:
                if half_width < state.half_width:
                    raise ConfigError('half_width %i is smaller than the initial state support %i.'
                                      % (half_width, state.half_width))
                state = state.widened(half_width)
        except InvalidInputError as e:
            raise ConfigError(str(e))
        return state

    def to_dict(self) -> Dict:
        data = {'type': self.type}
        if self.type == InitialStateTypes.BASIS:
            data['index'] = self.index
        elif self.type == InitialStateTypes.EXPLICIT:
            data['amplitudes'] = self.amplitudes
            data['first_ell'] = self.first_ell
        return data


@dataclass(frozen=True, eq=False)
class RunConfig:
    dimension: int = DIMENSION
    initial_state: InitialStateSpec = field(default_factory=InitialStateSpec)
    schedule: Optional[GateSchedule] = None
    program: Optional[str] = None
    half_width: Optional[int] = None
    target_state: Optional[np.ndarray] = None
    out_dir: Optional[str] = None
    seed: int = RANDOM_SEED

    @classmethod
    def from_dict(cls, data: Dict, base_dir: str = '.') -> 'RunConfig':
        """
        Validates a run configuration.

        Parameters:
            data        :   Parsed JSON object.
            base_dir    :   Directory against which a schedule path is resolved.

        Returns:
            RunConfig
        """
        if not isinstance(data, dict):
            raise ConfigError('A run configuration must be a JSON object.')
        unknown = set(data.keys()) - RUN_CONFIG_KEYS
        if len(unknown) > 0:
            raise ConfigError('Unknown configuration fields: %s' % sorted(unknown))
        dimension = data.get('dimension', DIMENSION)
        try:
            dimension = check_dimension(dimension, minimum=2)
        except InvalidInputError as e:
            raise ConfigError(str(e))
        initial_state = InitialStateSpec.from_dict(data.get('initial_state', {'type': InitialStateTypes.MONO_ENERGETIC}))
        program = data.get('program')
        if program is not None and program not in Programs.ALL:
            raise ConfigError('program must be one of %s.' % Programs.ALL)
        if program is not None and data.get('schedule') is not None:
            raise ConfigError('Specify either a schedule or a program, not both.')
        if program is not None and dimension != 4:
            raise ConfigError('Programs %s run at dimension 4.' % Programs.ALL)
        schedule = None
        if data.get('schedule') is not None:
            try:
                if isinstance(data['schedule'], str):
                    schedule = GateSchedule.read_json_file(os.path.join(base_dir, data['schedule']))
                else:
                    schedule = GateSchedule.from_dict(data['schedule'])
            except (InvalidInputError, OSError, ValueError) as e:
                raise ConfigError('Invalid schedule: %s' % str(e))
            if schedule.dim != dimension:
                raise ConfigError('Schedule dimension %i does not match dimension %i.' % (schedule.dim, dimension))
        half_width = data.get('half_width')
        if half_width is not None and (isinstance(half_width, bool) or not isinstance(half_width, int) or half_width < 1):
            raise ConfigError('half_width must be an integer >= 1.')
        target_state = None
        if data.get('target_state') is not None:
            try:
                target_state = pairs_to_complex(data['target_state'])
            except (InvalidInputError, TypeError, ValueError) as e:
                raise ConfigError('Invalid target_state: %s' % str(e))
            if len(target_state) != dimension or np.linalg.norm(target_state) == 0:
                raise ConfigError('target_state must hold %i non-zero [re, im] pairs.' % dimension)
        seed = data.get('seed', RANDOM_SEED)
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise ConfigError('seed must be an integer.')
        out_dir = data.get('out_dir')
        if out_dir is not None and not isinstance(out_dir, str):
            raise ConfigError('out_dir must be a string.')
        return cls(
            dimension=dimension,
            initial_state=initial_state,
            schedule=schedule,
            program=program,
            half_width=half_width,
            target_state=target_state,
            out_dir=out_dir,
            seed=seed
        )

    @classmethod
    def read_json_file(cls, json_file: str) -> 'RunConfig':
        try:
            data = read_json_file(json_file)
        except ValueError as e:
            raise ConfigError('Cannot parse %s: %s' % (json_file, str(e)))
        return cls.from_dict(data, base_dir=os.path.dirname(os.path.abspath(json_file)))
