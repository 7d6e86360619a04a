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
The purpose of this python3 script is to implement the QubitEmbedding dataclass.
"""


import numpy as np
from dataclasses import dataclass
from .exceptions import InvalidInputError


@dataclass(frozen=True)
class QubitEmbedding:
    """
    Places a gate on qubits position..position+m-1 of an n-qubit register
    (position 1 is the leftmost, most significant qubit).
    """
    n_qubits: int
    position: int

    def __post_init__(self):
        if self.n_qubits < 1 or not 1 <= self.position <= self.n_qubits:
            raise InvalidInputError('Position %i is outside a %i-qubit register.' % (self.position, self.n_qubits))

    def embed(self, gate: np.ndarray) -> np.ndarray:
        gate = np.asarray(gate, dtype=complex)
        m = int(gate.shape[0]).bit_length() - 1
        if gate.shape != (2 ** m, 2 ** m) or m < 1:
            raise InvalidInputError('Gate must act on a whole number of qubits: shape %s' % str(gate.shape))
        trailing = self.n_qubits - self.position - m + 1
        if trailing < 0:
            raise InvalidInputError('A %i-qubit gate at position %i does not fit %i qubits.'
                                    % (m, self.position, self.n_qubits))
        left = np.eye(2 ** (self.position - 1), dtype=complex)
        right = np.eye(2 ** trailing, dtype=complex)
        return np.kron(np.kron(left, gate), right)
