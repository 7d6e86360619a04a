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
The purpose of this python3 script is to implement the SimulationResult dataclass.
"""


import pandas as pd
from dataclasses import dataclass
from typing import Dict, List, Optional
from .ladder_state import LadderState
from .qudit_state import QuditState


@dataclass
class SimulationResult:
    """
    Output of one 'simulate' run.

    final_state :   Ladder state after the last step.
    qudit_state :   Encoded final state.
    trajectory  :   Per-step Bloch vectors (d = 4 only).
    fidelity    :   |<target|alpha>|^2 when a target state or program is given.
    """
    final_state: LadderState
    qudit_state: QuditState
    trajectory: Optional[pd.DataFrame] = None
    fidelity: Optional[float] = None
    checks: Optional[Dict[str, float]] = None
    notes: Optional[List[str]] = None

    def spectrum_dataframe(self) -> pd.DataFrame:
        return self.final_state.to_dataframe()

    def qudit_state_dict(self) -> Dict:
        data = self.qudit_state.to_dict()
        if self.fidelity is not None:
            data['fidelity'] = self.fidelity
        if self.checks is not None:
            data['checks'] = dict(self.checks)
        if self.notes is not None:
            data['notes'] = list(self.notes)
        return data
