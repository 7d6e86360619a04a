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
The purpose of this python3 script is to define constants.
"""


class EigenphaseMethods:
    CHARACTER_SUM = 'character_sum'
    CLOSED_FORM = 'closed_form'
    ALL = [
        CHARACTER_SUM,
        CLOSED_FORM
    ]


class ExitCodes:
    SUCCESS = 0
    CONFIG_ERROR = 1
    NUMERIC_BUDGET = 2
    NOT_CONVERGED = 3
    ALL = [
        SUCCESS,
        CONFIG_ERROR,
        NUMERIC_BUDGET,
        NOT_CONVERGED
    ]


class InitialStateTypes:
    MONO_ENERGETIC = 'mono_energetic'
    BASIS = 'basis'
    EXPLICIT = 'explicit'
    ALL = [
        MONO_ENERGETIC,
        BASIS,
        EXPLICIT
    ]


class NamedGates:
    HADAMARD_1 = 'hadamard_1'
    HADAMARD_2 = 'hadamard_2'
    CNOT_21 = 'cnot_21'
    CNOT_12 = 'cnot_12'
    SWAP = 'swap'
    RZ_PAIR = 'rz_pair'
    RX_1 = 'rx_1'
    ALL = [
        HADAMARD_1,
        HADAMARD_2,
        CNOT_21,
        CNOT_12,
        SWAP,
        RZ_PAIR,
        RX_1
    ]
    ALIASES = {
        'h1': HADAMARD_1,
        'h2': HADAMARD_2,
        'cnot21': CNOT_21,
        'cnot12': CNOT_12,
        'rz': RZ_PAIR,
        'rx': RX_1
    }


class Programs:
    BELL = 'bell'
    FIG2 = 'fig2'
    ALL = [
        BELL,
        FIG2
    ]


class ScheduleStepTypes:
    PINEM = 'pinem'
    FSP = 'fsp'
    ALL = [
        PINEM,
        FSP
    ]


class VerificationSuites:
    LADDER = 'ladder'
    QUDIT = 'qudit'
    RESULTS = 'results'
    CONJECTURES = 'conjectures'
    ALL = [
        LADDER,
        QUDIT,
        RESULTS,
        CONJECTURES
    ]


class PhysicalConstants:
    SPEED_OF_LIGHT = 299792458.0            # m/s
    COMPTON_ANGULAR_FREQUENCY = 7.8e20      # rad/s
    HBAR_EV_S = 6.582119569e-16             # eV*s
    ELECTRON_REST_ENERGY_EV = 510998.95     # eV
