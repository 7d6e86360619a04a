import numpy as np
import pytest
from .conftest import *
from feqtlib.exceptions import ConfigError
from feqtlib.run_config import InitialStateSpec, RunConfig
from .data import get_data_path


def test_read_config_with_schedule_file():
    config = RunConfig.read_json_file(get_data_path('basis_zero_with_schedule_file.json'))
    assert config.dimension == 4
    assert config.seed == 7
    assert config.schedule.steps == ()
    state = config.initial_state.build(config.dimension)
    np.testing.assert_allclose(state.probabilities[state.half_width:state.half_width + 4], 0.25)


def test_unknown_fields_rejected():
    with pytest.raises(ConfigError):
        RunConfig.read_json_file(get_data_path('unknown_field.json'))
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'initial_state': {'type': 'basis', 'index': 0, 'phase': 1.0}})


def test_invalid_values_rejected():
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'dimension': 6})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'dimension': 8, 'program': 'bell'})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'program': 'bell', 'schedule': {'dim': 4, 'steps': []}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'program': 'teleport'})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'dimension': 8, 'schedule': {'dim': 4, 'steps': []}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'half_width': 0})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'target_state': [[1.0, 0.0]]})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'seed': 'one'})


def test_initial_state_build():
    explicit = InitialStateSpec.from_dict({'type': 'explicit', 'amplitudes': [[3.0, 0.0], [0.0, 4.0]],
                                           'first_ell': -1})
    state = explicit.build(4)
    assert state.norm == pytest.approx(1.0)
    assert state.amplitude(0) == pytest.approx(0.8j)
    with pytest.raises(ConfigError):
        InitialStateSpec.from_dict({'type': 'basis', 'index': 4}).build(4)
    with pytest.raises(ConfigError):
        InitialStateSpec.from_dict({'type': 'basis', 'index': 0}).build(4, half_width=2)
    assert InitialStateSpec().build(4, half_width=5).half_width == 5
