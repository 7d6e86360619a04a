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
The purpose of this python3 script is to implement the CompileReport dataclass.
"""


from dataclasses import dataclass, field
from typing import Dict, Tuple
from .gate_schedule import GateSchedule
from .utilities import read_json_file, write_json_file


@dataclass
class CompileReport:
    """
    Best schedule found for a target and how it was found.
    wall_time is informational only and excluded from equality and serialization.
    """
    target_name: str
    schedule: GateSchedule
    infidelity: float
    converged: bool
    threshold: float
    n_starts: int
    n_iterations: int
    rng_seed: int
    fsp_pattern: Tuple[int, ...] = ()
    wall_time: float = field(default=0.0, compare=False)

    @property
    def n_pinem(self) -> int:
        return self.schedule.n_pinem

    def to_dict(self) -> Dict:
        return {
            'target_name': self.target_name,
            'infidelity': float(self.infidelity),
            'converged': self.converged,
            'threshold': float(self.threshold),
            'n_starts': self.n_starts,
            'n_iterations': self.n_iterations,
            'rng_seed': self.rng_seed,
            'fsp_pattern': list(self.fsp_pattern),
            'n_pinem': self.n_pinem,
            'schedule': self.schedule.to_dict()
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CompileReport':
        return cls(
            target_name=data['target_name'],
            schedule=GateSchedule.from_dict(data['schedule']),
            infidelity=float(data['infidelity']),
            converged=bool(data['converged']),
            threshold=float(data['threshold']),
            n_starts=int(data['n_starts']),
            n_iterations=int(data['n_iterations']),
            rng_seed=int(data['rng_seed']),
            fsp_pattern=tuple(data['fsp_pattern'])
        )

    @classmethod
    def read_json_file(cls, json_file: str) -> 'CompileReport':
        return cls.from_dict(read_json_file(json_file))

    def write_json_file(self, json_file: str):
        write_json_file(self.to_dict(), json_file)
