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
The purpose of this python3 script is to implement the IdentityReport dataclass.
"""


from dataclasses import dataclass, field
from typing import Dict, List


@dataclass
class IdentityReport:
    """
    Outcome of one numerical identity or invariant check.

    residual is the worst value over sample_count samples. A witness check
    passes when the residual exceeds the tolerance instead (non-closure, non-commutation).
    """
    name: str
    lhs: str
    rhs: str
    residual: float
    tolerance: float
    sample_count: int = 1
    witness: bool = False
    evidence_only: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.witness:
            return self.residual > self.tolerance
        return self.residual < self.tolerance

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'residual': float(self.residual),
            'tolerance': float(self.tolerance),
            'sample_count': self.sample_count,
            'witness': self.witness,
            'evidence_only': self.evidence_only,
            'passed': self.passed,
            'notes': list(self.notes)
        }
