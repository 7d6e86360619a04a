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
The purpose of this python3 script is to define FEQT default parameters.
"""


import math


CLOSURE_PASS_TOLERANCE = 1e-8       # commuting-diagram residual for closed operators
CLOSURE_FAIL_THRESHOLD = 1e-3       # non-closure witness
CONJECTURE2_SUCCESS_TOLERANCE = 1e-6
CONVERGENCE_THRESHOLD = 1e-8        # compiler infidelity
DIMENSION = 4
DRIVE_COUNT = 100                   # random drives per dimension in the qudit suite
FEASIBILITY_COUPLING_LIMIT = 2 * math.pi
FSP_STEP_CHOICES = (1, 2, 3)
HARMONICS = (1, 2)
IDENTITY_TOLERANCE = 1e-9
MAX_ITERATIONS = 500
NORM_TOLERANCE = 1e-9
NUM_STARTS = 64
NUM_THREADS = 1
QUDIT_NORM_TOLERANCE = 1e-8
RANDOM_SEED = 1
SAMPLE_COUNT = 100
START_SCALE = math.pi / 2           # starts drawn uniformly from [-START_SCALE, START_SCALE]
TRUNCATION_BUDGET = 1e-10
UNITARITY_TOLERANCE = 1e-10
OUT_DIR_ENV_VAR = 'FEQT_OUT_DIR'
KINETIC_ENERGY_EV = 200e3
PHOTON_ENERGY_EV = 1.0
ENERGY_SPREAD_EV = 0.5
