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
The purpose of this python3 script is to implement the QuditState dataclass.
"""


import numpy as np
from dataclasses import dataclass, field
from typing import Dict
from .exceptions import InvalidInputError
from .logging import get_logger
from .utilities import check_dimension, num_qubits


logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class QuditState:
    """
    Encoded state alpha_k of the d = 2^n dimensional synthetic space.
    The norm is recorded as found, never forced to 1.
    """
    dim: int
    alpha: np.ndarray
    norm: float = field(init=False)

    def __post_init__(self):
        check_dimension(self.dim)
        alpha = np.array(self.alpha, dtype=complex).reshape(-1)
        if len(alpha) != self.dim:
            raise InvalidInputError('Expected %i amplitudes, got %i.' % (self.dim, len(alpha)))
        alpha.setflags(write=False)
        object.__setattr__(self, 'dim', int(self.dim))
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'norm', float(np.linalg.norm(alpha)))

    @classmethod
    def basis(cls, dim: int, k: int) -> 'QuditState':
        alpha = np.zeros(dim, dtype=complex)
        alpha[k] = 1.0
        return cls(dim=dim, alpha=alpha)

    @property
    def n_qubits(self) -> int:
        return num_qubits(self.dim)

    def normalized(self) -> 'QuditState':
        if self.norm == 0:
            raise InvalidInputError('Cannot normalize a zero qudit state.')
        return QuditState(dim=self.dim, alpha=self.alpha / self.norm)

    def fidelity(self, target: np.ndarray) -> float:
        """
        Returns |<target|alpha>|^2 with target normalized.
        """
        target = np.asarray(target, dtype=complex).reshape(-1)
        if len(target) != self.dim:
            raise InvalidInputError('Target has %i amplitudes, expected %i.' % (len(target), self.dim))
        target = target / np.linalg.norm(target)
        return float(abs(np.vdot(target, self.alpha)) ** 2)

    def to_dict(self) -> Dict:
        return {
            'dim': self.dim,
            'alpha': [{'k': k, 're': float(a.real), 'im': float(a.imag)} for k, a in enumerate(self.alpha)],
            'norm': self.norm
        }
