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
The purpose of this python3 script is to implement the GateSchedule dataclass.
"""


from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union
from .constants import ScheduleStepTypes
from .exceptions import InvalidInputError
from .harmonic_drive import HarmonicDrive
from .logging import get_logger
from .utilities import check_dimension, read_json_file, write_json_file


logger = get_logger(__name__)


@dataclass(frozen=True)
class PinemStep:
    drive: HarmonicDrive

    def to_dict(self) -> Dict:
        return {ScheduleStepTypes.PINEM: self.drive.to_dict()}


@dataclass(frozen=True)
class FspStep:
    steps: int

    def __post_init__(self):
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 0:
            raise InvalidInputError('FSP step counts must be non-negative integers: %s' % str(self.steps))

    def to_dict(self) -> Dict:
        return {ScheduleStepTypes.FSP: {'steps': self.steps}}


ScheduleStep = Union[PinemStep, FspStep]


@dataclass(frozen=True)
class GateSchedule:
    """
    Time-ordered PINEM interactions and quantized drifts (steps[0] acts first).
    FSP counts are in units of z_D / (2 * dim).
    """
    dim: int
    steps: Tuple[ScheduleStep, ...] = field(default_factory=tuple)
    max_harmonic: Optional[int] = None

    def __post_init__(self):
        check_dimension(self.dim, minimum=2)
        object.__setattr__(self, 'steps', tuple(self.steps))
        limit = self.harmonic_limit
        for step in self.steps:
            if isinstance(step, PinemStep):
                if step.drive.max_harmonic > limit:
                    raise InvalidInputError('Harmonic %i exceeds the limit %i for dimension %i.'
                                            % (step.drive.max_harmonic, limit, self.dim))
            elif not isinstance(step, FspStep):
                raise InvalidInputError('Unknown schedule step: %s' % str(step))

    @property
    def harmonic_limit(self) -> int:
        return self.max_harmonic if self.max_harmonic is not None else self.dim // 2

    @property
    def n_pinem(self) -> int:
        return sum(1 for step in self.steps if isinstance(step, PinemStep))

    @property
    def n_fsp(self) -> int:
        return sum(1 for step in self.steps if isinstance(step, FspStep))

    @property
    def drives(self) -> List[HarmonicDrive]:
        return [step.drive for step in self.steps if isinstance(step, PinemStep)]

    @property
    def fsp_pattern(self) -> Tuple[int, ...]:
        return tuple(step.steps for step in self.steps if isinstance(step, FspStep))

    def then(self, other: 'GateSchedule') -> 'GateSchedule':
        """
        Returns the schedule running self and then other. Adjacent PINEM steps
        merge into one (couplings add per harmonic) and adjacent FSP steps add.
        """
        if other.dim != self.dim:
            raise InvalidInputError('Cannot concatenate schedules of dimension %i and %i.' % (self.dim, other.dim))
        steps = list(self.steps)
        for step in other.steps:
            if len(steps) > 0 and isinstance(step, PinemStep) and isinstance(steps[-1], PinemStep):
                steps[-1] = PinemStep(drive=steps[-1].drive.combine(step.drive))
            elif len(steps) > 0 and isinstance(step, FspStep) and isinstance(steps[-1], FspStep):
                steps[-1] = FspStep(steps=steps[-1].steps + step.steps)
            else:
                steps.append(step)
        max_harmonic = None
        if self.max_harmonic is not None or other.max_harmonic is not None:
            max_harmonic = max(self.harmonic_limit, other.harmonic_limit)
        return GateSchedule(dim=self.dim, steps=tuple(steps), max_harmonic=max_harmonic)

    def to_dict(self) -> Dict:
        data = {
            'dim': self.dim,
            'steps': [step.to_dict() for step in self.steps]
        }
        if self.max_harmonic is not None:
            data['max_harmonic'] = self.max_harmonic
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'GateSchedule':
        if not isinstance(data, dict):
            raise InvalidInputError('A schedule must be a JSON object.')
        unknown = set(data.keys()) - {'dim', 'steps', 'max_harmonic'}
        if len(unknown) > 0 or 'dim' not in data or 'steps' not in data:
            raise InvalidInputError('A schedule needs "dim" and "steps" only; unknown keys: %s' % sorted(unknown))
        if isinstance(data['dim'], bool) or not isinstance(data['dim'], int):
            raise InvalidInputError('Schedule "dim" must be an integer.')
        steps = []
        for entry in data['steps']:
            if not isinstance(entry, dict) or len(entry) != 1:
                raise InvalidInputError('Each schedule step must be {"pinem": ...} or {"fsp": ...}: %s' % str(entry))
            kind, body = next(iter(entry.items()))
            if kind == ScheduleStepTypes.PINEM:
                steps.append(PinemStep(drive=HarmonicDrive.from_dict(body)))
            elif kind == ScheduleStepTypes.FSP:
                if not isinstance(body, dict) or set(body.keys()) != {'steps'}:
                    raise InvalidInputError('An FSP step needs exactly "steps": %s' % str(body))
                steps.append(FspStep(steps=body['steps']))
            else:
                raise InvalidInputError('Unknown schedule step type: %s' % kind)
        return cls(dim=data['dim'], steps=tuple(steps), max_harmonic=data.get('max_harmonic'))

    @classmethod
    def read_json_file(cls, json_file: str) -> 'GateSchedule':
        return cls.from_dict(read_json_file(json_file))

    def write_json_file(self, json_file: str):
        write_json_file(self.to_dict(), json_file)
