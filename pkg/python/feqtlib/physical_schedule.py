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
The purpose of this python3 script is to implement the PhysicalSchedule dataclass.
"""


import pandas as pd
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union
from .physical_params import PhysicalParams


@dataclass(frozen=True)
class LaserHarmonic:
    j: int
    angular_frequency: float    # rad/s
    magnitude: float            # |g_j|
    argument: float             # arg g_j (rad)

    def to_dict(self) -> Dict:
        return {
            'j': self.j,
            'angular_frequency': self.angular_frequency,
            'magnitude': self.magnitude,
            'argument': self.argument
        }


@dataclass(frozen=True)
class PhysicalInteraction:
    harmonics: Tuple[LaserHarmonic, ...]

    def to_dict(self) -> Dict:
        return {'pinem': {'harmonics': [h.to_dict() for h in self.harmonics]}}


@dataclass(frozen=True)
class PhysicalDrift:
    steps: int
    length: float               # m

    def to_dict(self) -> Dict:
        return {'fsp': {'steps': self.steps, 'length': self.length}}


@dataclass
class PhysicalSchedule:
    dim: int
    params: PhysicalParams
    z_dispersion: float
    steps: List[Union[PhysicalInteraction, PhysicalDrift]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def total_drift_length(self) -> float:
        return sum(step.length for step in self.steps if isinstance(step, PhysicalDrift))

    def to_dict(self) -> Dict:
        return {
            'dim': self.dim,
            'params': self.params.to_dict(),
            'z_dispersion': self.z_dispersion,
            'steps': [step.to_dict() for step in self.steps],
            'warnings': list(self.warnings)
        }

    def to_dataframe(self) -> pd.DataFrame:
        rows = []
        for i, step in enumerate(self.steps):
            if isinstance(step, PhysicalDrift):
                rows.append({'step': i, 'kind': 'fsp', 'j': None, 'magnitude': None,
                             'argument': None, 'length': step.length})
            else:
                for harmonic in step.harmonics:
                    rows.append({'step': i, 'kind': 'pinem', 'j': harmonic.j, 'magnitude': harmonic.magnitude,
                                 'argument': harmonic.argument, 'length': None})
        return pd.DataFrame(rows, columns=['step', 'kind', 'j', 'magnitude', 'argument', 'length'])
