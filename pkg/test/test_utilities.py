import numpy as np
import os
import pytest
from .conftest import *
from feqtlib.exceptions import InvalidInputError
from feqtlib.utilities import check_dimension, global_phase_residual, num_qubits, parse_int_list, \
    resolve_out_dir, str2bool, to_canonical_json


def test_canonical_json():
    text = to_canonical_json({'b': 0.1, 'a': [1, 2.0, None, True]})
    assert text == '{\n  "a": [\n    1,\n    2.0,\n    null,\n    true\n  ],\n  "b": 0.10000000000000001\n}\n'


def test_canonical_json_ignores_insertion_order_and_numpy_types():
    first = to_canonical_json({'phase': np.float64(np.pi), 'dim': np.int64(4), 'ok': np.bool_(True)})
    second = to_canonical_json({'ok': True, 'dim': 4, 'phase': float(np.pi)})
    assert first == second
    assert '"phase": 3.1415926535897931' in first


def test_str2bool():
    assert str2bool('yes') and not str2bool('No')
    with pytest.raises(InvalidInputError):
        str2bool('maybe')


def test_parse_int_list():
    assert parse_int_list('4,8') == [4, 8]
    with pytest.raises(InvalidInputError):
        parse_int_list('4,eight')


def test_dimensions():
    assert num_qubits(8) == 3
    assert check_dimension(4, minimum=2) == 4
    with pytest.raises(InvalidInputError):
        check_dimension(1, minimum=2)
    with pytest.raises(InvalidInputError):
        num_qubits(12)


def test_global_phase_residual(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert global_phase_residual(a, np.exp(-2.3j) * a) < 1e-12
    assert global_phase_residual(a, -a.conj()) > 1e-3


def test_resolve_out_dir(tmp_path, monkeypatch):
    monkeypatch.setenv('FEQT_OUT_DIR', str(tmp_path / 'env'))
    assert resolve_out_dir(str(tmp_path / 'cli'), str(tmp_path / 'config')) == str(tmp_path / 'cli')
    assert resolve_out_dir(None, str(tmp_path / 'config')) == str(tmp_path / 'config')
    assert resolve_out_dir() == str(tmp_path / 'env')
    assert os.path.isdir(str(tmp_path / 'env'))
    monkeypatch.delenv('FEQT_OUT_DIR')
    assert resolve_out_dir() == '.'
