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
The purpose of this python3 script is to define FEQT exceptions.
"""


class FeqtError(Exception):
    """Base class of all FEQT errors."""


class InvalidInputError(FeqtError, ValueError):
    pass


class ClosureError(InvalidInputError):
    """Raised for FSP distances that are not closed in the qudit space."""


class TruncationError(FeqtError):

    def __init__(self, edge_mass: float, budget: float, required_half_width: int):
        self.edge_mass = edge_mass
        self.budget = budget
        self.required_half_width = required_half_width
        super().__init__(
            'Edge mass %.3e exceeds truncation budget %.1e; required half width L >= %i.'
            % (edge_mass, budget, required_half_width)
        )


class ConfigError(FeqtError):
    pass


class CompilationError(FeqtError):
    pass


class VerificationError(FeqtError):
    """Raised by the CLI layer when a verification suite has failing checks."""
