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
The purpose of this python3 script is to implement the FspSteps dataclass.
"""


from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from .exceptions import ClosureError
from .utilities import check_dimension


@dataclass(frozen=True)
class FspSteps:
    """
    Free-space propagation by steps * z_D / (2 * dim), the only drifts closed in the qudit space.
    """
    steps: int
    dim: int

    def __post_init__(self):
        check_dimension(self.dim, minimum=2)
        steps = self.steps
        if isinstance(steps, bool) or not isinstance(steps, (Real, Fraction)):
            raise ClosureError('FSP steps must be an integer: %s' % str(steps))
        if Fraction(steps).denominator != 1:
            raise ClosureError('FSP by %s steps of z_D/%i is not closed in the qudit space.'
                               % (str(steps), 2 * self.dim))
        object.__setattr__(self, 'steps', int(steps))

    @property
    def z_ratio(self) -> Fraction:
        return Fraction(self.steps, 2 * self.dim)
