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
The purpose of this python3 script is to implement the QuditUnitary dataclass.
"""


import numpy as np
from dataclasses import dataclass
from .default import UNITARITY_TOLERANCE
from .exceptions import InvalidInputError
from .logging import get_logger
from .qudit_state import QuditState
from .utilities import check_dimension


logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class QuditUnitary:
    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        check_dimension(self.dim)
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (self.dim, self.dim):
            raise InvalidInputError('Expected a %ix%i matrix, got shape %s.' % (self.dim, self.dim, str(matrix.shape)))
        deviation = unitarity_deviation(matrix)
        if deviation > UNITARITY_TOLERANCE:
            raise InvalidInputError('Matrix is not unitary: max|U^dag U - I| = %.3e' % deviation)
        matrix.setflags(write=False)
        object.__setattr__(self, 'dim', int(self.dim))
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def identity(cls, dim: int) -> 'QuditUnitary':
        return cls(dim=dim, matrix=np.eye(dim, dtype=complex))

    @property
    def dagger(self) -> 'QuditUnitary':
        return QuditUnitary(dim=self.dim, matrix=self.matrix.conj().T)

    @property
    def off_diagonal_mass(self) -> float:
        return float(np.max(np.abs(self.matrix - np.diag(np.diag(self.matrix))), initial=0.0))

    def dot(self, other: 'QuditUnitary') -> 'QuditUnitary':
        """
        Returns self . other (other acts first).
        """
        if other.dim != self.dim:
            raise InvalidInputError('Dimension mismatch: %i vs %i' % (self.dim, other.dim))
        return QuditUnitary(dim=self.dim, matrix=self.matrix @ other.matrix)

    def kron(self, other: 'QuditUnitary') -> 'QuditUnitary':
        return QuditUnitary(dim=self.dim * other.dim, matrix=np.kron(self.matrix, other.matrix))

    def power(self, n: int) -> 'QuditUnitary':
        return QuditUnitary(dim=self.dim, matrix=np.linalg.matrix_power(self.matrix, n))

    def apply(self, state: QuditState) -> QuditState:
        if state.dim != self.dim:
            raise InvalidInputError('Dimension mismatch: %i vs %i' % (self.dim, state.dim))
        return QuditState(dim=self.dim, alpha=self.matrix @ state.alpha)


def unitarity_deviation(matrix: np.ndarray) -> float:
    matrix = np.asarray(matrix, dtype=complex)
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))))
