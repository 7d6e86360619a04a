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
The purpose of this python3 script is to implement the ProgramResult dataclass.
"""


import pandas as pd
from dataclasses import dataclass, field
from typing import Dict, List, Optional
from .gate_schedule import GateSchedule
from .ladder_state import LadderState
from .qudit_state import QuditState


@dataclass
class ProgramResult:
    """
    Outcome of a gate program run at ladder level.

    trajectory  :   Bloch vectors of both qubits after each gate (one row per gate).
    checks      :   Named residuals and fidelities.
    ladder_state:   Final state on the energy ladder.
    """
    name: str
    schedule: GateSchedule
    final_state: QuditState
    fidelity: float
    trajectory: pd.DataFrame
    checks: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    ladder_state: Optional[LadderState] = None
