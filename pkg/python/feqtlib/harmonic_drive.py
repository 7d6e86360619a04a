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
The purpose of this python3 script is to implement the HarmonicDrive dataclass.
"""


import numpy as np
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
from .exceptions import InvalidInputError
from .logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class HarmonicDrive:
    """
    Laser harmonics and their dimensionless complex couplings for one PINEM interaction.
    Terms are kept sorted by harmonic index.
    """
    terms: Tuple[Tuple[int, complex], ...] = field(default_factory=tuple)

    def __post_init__(self):
        terms = []
        for term in self.terms:
            if len(term) != 2:
                raise InvalidInputError('Harmonic terms are (j, g) pairs: %s' % str(term))
            j, g = term
            if isinstance(j, (bool, np.bool_)) or not isinstance(j, (int, np.integer)) or j <= 0:
                raise InvalidInputError('Harmonic index must be a positive integer: %s' % str(j))
            terms.append((int(j), complex(g)))
        indices = [j for j, _ in terms]
        if len(set(indices)) != len(indices):
            raise InvalidInputError('Harmonic indices must be pairwise distinct: %s' % str(indices))
        object.__setattr__(self, 'terms', tuple(sorted(terms, key=lambda t: t[0])))

    @classmethod
    def from_couplings(cls, couplings: Dict[int, complex]) -> 'HarmonicDrive':
        return cls(terms=tuple(couplings.items()))

    @classmethod
    def empty(cls) -> 'HarmonicDrive':
        return cls(terms=())

    @property
    def couplings(self) -> Dict[int, complex]:
        return dict(self.terms)

    @property
    def harmonics(self) -> List[int]:
        return [j for j, _ in self.terms]

    @property
    def is_empty(self) -> bool:
        return len(self.terms) == 0

    @property
    def max_harmonic(self) -> int:
        return max(self.harmonics) if len(self.terms) > 0 else 0

    def coupling(self, j: int) -> complex:
        return self.couplings.get(j, 0j)

    def combine(self, other: 'HarmonicDrive') -> 'HarmonicDrive':
        """
        Returns the drive of two consecutive PINEM interactions (couplings add per harmonic).
        """
        couplings = self.couplings
        for j, g in other.terms:
            couplings[j] = couplings.get(j, 0j) + g
        return HarmonicDrive.from_couplings(couplings)

    def scaled_harmonics(self, factor: int) -> 'HarmonicDrive':
        return HarmonicDrive(terms=tuple((j * factor, g) for j, g in self.terms))

    def to_dict(self) -> Dict:
        return {
            'harmonics': [{'j': j, 'g_re': float(g.real), 'g_im': float(g.imag)} for j, g in self.terms]
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'HarmonicDrive':
        if not isinstance(data, dict) or set(data.keys()) != {'harmonics'}:
            raise InvalidInputError('A PINEM entry must contain exactly a "harmonics" list: %s' % str(data))
        terms = []
        for harmonic in data['harmonics']:
            if not isinstance(harmonic, dict) or set(harmonic.keys()) != {'j', 'g_re', 'g_im'}:
                raise InvalidInputError('Harmonic entries need exactly "j", "g_re" and "g_im": %s' % str(harmonic))
            if not isinstance(harmonic['j'], int):
                raise InvalidInputError('Harmonic index must be an integer: %s' % str(harmonic['j']))
            terms.append((harmonic['j'], complex(float(harmonic['g_re']), float(harmonic['g_im']))))
        return cls(terms=tuple(terms))
