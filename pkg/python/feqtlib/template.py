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
The purpose of this python3 script is to implement the Template dataclass.
"""


import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple
from .default import FSP_STEP_CHOICES, HARMONICS
from .exceptions import InvalidInputError


@dataclass(frozen=True)
class Template:
    """
    Alternation structure searched by the compiler: n_pinem interactions separated
    by drifts (and followed by one more drift when trailing_fsp is set).
    A fixed fsp_pattern pins the drifts; otherwise every pattern over fsp_choices is enumerated.
    """
    n_pinem: int
    fsp_pattern: Optional[Tuple[int, ...]] = None
    fsp_choices: Tuple[int, ...] = FSP_STEP_CHOICES
    harmonics: Tuple[int, ...] = HARMONICS
    trailing_fsp: bool = False

    def __post_init__(self):
        if self.n_pinem < 0:
            raise InvalidInputError('Number of PINEM interactions must be >= 0: %i' % self.n_pinem)
        if len(set(self.harmonics)) != len(self.harmonics) or any(j <= 0 for j in self.harmonics):
            raise InvalidInputError('Template harmonics must be distinct positive integers: %s' % str(self.harmonics))
        if self.fsp_pattern is not None:
            object.__setattr__(self, 'fsp_pattern', tuple(int(n) for n in self.fsp_pattern))
            if len(self.fsp_pattern) != self.n_gaps:
                raise InvalidInputError('FSP pattern %s needs %i entries for %i PINEM interactions.'
                                        % (str(self.fsp_pattern), self.n_gaps, self.n_pinem))
            if any(n < 0 for n in self.fsp_pattern):
                raise InvalidInputError('FSP steps must be non-negative: %s' % str(self.fsp_pattern))
        object.__setattr__(self, 'fsp_choices', tuple(int(n) for n in self.fsp_choices))
        object.__setattr__(self, 'harmonics', tuple(int(j) for j in self.harmonics))

    @property
    def n_gaps(self) -> int:
        if self.n_pinem == 0:
            return 0
        return self.n_pinem if self.trailing_fsp else self.n_pinem - 1

    @property
    def n_parameters(self) -> int:
        return 2 * len(self.harmonics) * self.n_pinem

    def patterns(self) -> List[Tuple[int, ...]]:
        if self.fsp_pattern is not None:
            return [self.fsp_pattern]
        return list(itertools.product(self.fsp_choices, repeat=self.n_gaps))
