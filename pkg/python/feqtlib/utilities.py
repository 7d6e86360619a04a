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
The purpose of this python3 script is to implement general-purpose utility functions.
"""


import json
import math
import os
import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar
from typing import Any, Dict, List, Optional, Sequence
from .default import OUT_DIR_ENV_VAR
from .exceptions import InvalidInputError
from .logging import get_logger


logger = get_logger(__name__)


def str2bool(v):
    if v.lower() in ('yes', 'true', 't', 'y', '1'):
        return True
    elif v.lower() in ('no', 'false', 'f', 'n', '0'):
        return False
    else:
        raise InvalidInputError('Boolean value expected.')


def is_power_of_two(d: int) -> bool:
    return isinstance(d, (int, np.integer)) and d >= 1 and (d & (d - 1)) == 0


def num_qubits(d: int) -> int:
    """
    Returns n such that d = 2^n.
    """
    if not is_power_of_two(d):
        raise InvalidInputError('Dimension must be a power of two: %s' % str(d))
    return int(d).bit_length() - 1


def check_dimension(d: int, minimum: int = 1) -> int:
    if not is_power_of_two(d) or d < minimum:
        raise InvalidInputError('Dimension must be a power of two >= %i: %s' % (minimum, str(d)))
    return int(d)


def parse_int_list(value: str) -> List[int]:
    """
    Parses a comma-separated list of integers (e.g. '4,8').
    """
    try:
        return [int(x) for x in value.split(',') if x.strip() != '']
    except ValueError:
        raise InvalidInputError('Expected a comma-separated list of integers: %s' % value)


def pairs_to_complex(pairs: Sequence[Sequence[float]]) -> np.ndarray:
    values = []
    for pair in pairs:
        if len(pair) != 2:
            raise InvalidInputError('Complex values are encoded as [re, im] pairs: %s' % str(pair))
        values.append(complex(float(pair[0]), float(pair[1])))
    return np.asarray(values, dtype=complex)


def global_phase_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """
    Returns min over chi of max|lhs - e^{i chi} rhs|.

    Parameters:
        lhs :   Complex array.
        rhs :   Complex array of the same shape.

    Returns:
        float
    """
    lhs = np.asarray(lhs, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    if lhs.shape != rhs.shape:
        raise InvalidInputError('Shape mismatch: %s vs %s' % (str(lhs.shape), str(rhs.shape)))
    overlap = np.vdot(rhs, lhs)
    chi0 = float(np.angle(overlap)) if abs(overlap) > 0 else 0.0

    def residual(chi: float) -> float:
        return float(np.max(np.abs(lhs - np.exp(1j * chi) * rhs)))

    best = residual(chi0)
    result = minimize_scalar(residual, bounds=(chi0 - 0.1, chi0 + 0.1), method='bounded',
                             options={'xatol': 1e-14})
    return min(best, float(result.fun))


def _to_json_text(value: Any, indent: int, level: int) -> str:
    """
    Serializes with sorted keys and floats at %.17g so that equal inputs give byte-identical files.
    """
    pad = ' ' * (indent * (level + 1))
    end_pad = ' ' * (indent * level)
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if value is None:
        return 'null'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'NaN'
        if math.isinf(value):
            return 'Infinity' if value > 0 else '-Infinity'
        text = '%.17g' % value
        if all(c in '-0123456789' for c in text):
            text += '.0'
        return text
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if len(value) == 0:
            return '{}'
        items = ['%s%s: %s' % (pad, json.dumps(str(k)), _to_json_text(value[k], indent, level + 1))
                 for k in sorted(value.keys(), key=str)]
        return '{\n' + ',\n'.join(items) + '\n' + end_pad + '}'
    if isinstance(value, (list, tuple, np.ndarray)):
        if len(value) == 0:
            return '[]'
        items = ['%s%s' % (pad, _to_json_text(v, indent, level + 1)) for v in value]
        return '[\n' + ',\n'.join(items) + '\n' + end_pad + ']'
    raise InvalidInputError('Cannot serialize value of type %s' % type(value).__name__)


def to_canonical_json(data: Dict) -> str:
    """
    Serializes data with sorted keys and floats at 17 significant digits,
    so identical inputs always yield byte-identical text.
    """
    return _to_json_text(data, indent=2, level=0) + '\n'


def write_json_file(data: Dict, json_file: str):
    with open(json_file, 'w') as f:
        f.write(to_canonical_json(data))
    logger.info('Wrote %s' % json_file)


def read_json_file(json_file: str) -> Dict:
    with open(json_file, 'r') as f:
        return json.load(f)


def write_csv_file(df: pd.DataFrame, csv_file: str):
    df.to_csv(csv_file, index=False, float_format='%.17g')
    logger.info('Wrote %s' % csv_file)


def resolve_out_dir(out_dir: Optional[str] = None, config_out_dir: Optional[str] = None) -> str:
    """
    Output directory: the command-line value, else the config value,
    else the FEQT_OUT_DIR environment variable, else the working directory.
    """
    for candidate in (out_dir, config_out_dir, os.environ.get(OUT_DIR_ENV_VAR)):
        if candidate is not None and candidate != '':
            os.makedirs(candidate, exist_ok=True)
            return candidate
    return '.'
