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
The purpose of this python3 script is to implement the LadderState dataclass.
"""


import numpy as np
import pandas as pd
from dataclasses import dataclass
from typing import Sequence
from .default import NORM_TOLERANCE
from .exceptions import InvalidInputError
from .logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class LadderState:
    """
    Electron state on the energy ladder truncated to ell in [-half_width, half_width].
    amplitudes[half_width + ell] holds psi_ell.
    """
    half_width: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if isinstance(self.half_width, bool) or not isinstance(self.half_width, (int, np.integer)) \
                or self.half_width < 1:
            raise InvalidInputError('Half width must be an integer >= 1: %s' % str(self.half_width))
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if len(amplitudes) != 2 * self.half_width + 1:
            raise InvalidInputError('Expected %i amplitudes for half width %i, got %i.'
                                    % (2 * self.half_width + 1, self.half_width, len(amplitudes)))
        norm_squared = float(np.sum(np.abs(amplitudes) ** 2))
        if abs(norm_squared - 1.0) > NORM_TOLERANCE:
            raise InvalidInputError('Ladder state is not normalized: sum |psi|^2 = %.15f' % norm_squared)
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'half_width', int(self.half_width))
        object.__setattr__(self, 'amplitudes', amplitudes)

    @classmethod
    def mono_energetic(cls, half_width: int = 1) -> 'LadderState':
        amplitudes = np.zeros(2 * half_width + 1, dtype=complex)
        amplitudes[half_width] = 1.0
        return cls(half_width=half_width, amplitudes=amplitudes)

    @classmethod
    def from_values(
            cls,
            values: Sequence[complex],
            first_ell: int = 0,
            half_width: int = None,
            normalize: bool = False
    ) -> 'LadderState':
        """
        Builds a state from consecutive amplitudes starting at rung first_ell.

        Parameters:
            values      :   Amplitudes psi_{first_ell}, psi_{first_ell + 1}, ...
            first_ell   :   Rung of the first value.
            half_width  :   Truncation half width (default: smallest window holding the values).
            normalize   :   If True, rescale to unit norm.

        Returns:
            LadderState
        """
        values = np.asarray(values, dtype=complex).reshape(-1)
        last_ell = first_ell + len(values) - 1
        minimum = max(1, abs(first_ell), abs(last_ell))
        if half_width is None:
            half_width = minimum
        elif half_width < minimum:
            raise InvalidInputError('Half width %i cannot hold rungs %i..%i.' % (half_width, first_ell, last_ell))
        if normalize:
            norm = np.linalg.norm(values)
            if norm == 0:
                raise InvalidInputError('Cannot normalize a zero state.')
            values = values / norm
        amplitudes = np.zeros(2 * half_width + 1, dtype=complex)
        amplitudes[half_width + first_ell:half_width + last_ell + 1] = values
        return cls(half_width=half_width, amplitudes=amplitudes)

    @property
    def ells(self) -> np.ndarray:
        return np.arange(-self.half_width, self.half_width + 1)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def edge_mass(self) -> float:
        return float(self.probabilities[0] + self.probabilities[-1])

    def amplitude(self, ell: int) -> complex:
        if abs(ell) > self.half_width:
            return 0j
        return complex(self.amplitudes[self.half_width + ell])

    def support_radius(self, tail_mass: float = 1e-24) -> int:
        """
        Smallest R such that the probability outside [-R, R] is below tail_mass.
        """
        probabilities = self.probabilities
        # mass on rungs +-r for r = 1..L
        shell_mass = probabilities[self.half_width + 1:] + probabilities[self.half_width - 1::-1]
        # outside_mass[r] = mass strictly outside [-r, r]
        outside_mass = np.append(np.cumsum(shell_mass[::-1])[::-1], 0.0)
        return int(np.argmax(outside_mass < tail_mass))

    def widened(self, half_width: int) -> 'LadderState':
        if half_width <= self.half_width:
            return self
        pad = half_width - self.half_width
        return LadderState(half_width=half_width, amplitudes=np.pad(self.amplitudes, (pad, pad)))

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame({
            'ell': self.ells,
            'probability': self.probabilities,
            'phase': np.angle(self.amplitudes)
        })
