import numpy as np
import pytest
from .conftest import *
from feqtlib.constants import Programs
from feqtlib.main import simulate
from feqtlib.programs import run_gates
from feqtlib.qudit import decode_basis
from feqtlib.run_config import RunConfig


@pytest.fixture(scope='module')
def bell_simulation():
    return simulate(RunConfig.from_dict({'dimension': 4, 'program': Programs.BELL}))


@pytest.fixture(scope='module')
def fig2_simulation():
    return simulate(RunConfig.from_dict({'dimension': 4, 'program': Programs.FIG2}))


def test_bell_program(bell_simulation):
    assert bell_simulation.fidelity > 1 - 1e-6
    assert bell_simulation.checks['intermediate_residual'] < 1e-6
    assert bell_simulation.checks['bloch_norm_q1'] < 1e-3
    assert bell_simulation.checks['bloch_norm_q2'] < 1e-3
    assert bell_simulation.qudit_state.norm == pytest.approx(1.0, abs=1e-8)
    assert bell_simulation.qudit_state_dict()['fidelity'] > 0.999999


def test_bell_trajectory(bell_simulation):
    trajectory = bell_simulation.trajectory
    assert list(trajectory['label']) == ['initial', 'hadamard_2', 'cnot_21']
    # |00>: both qubits point up
    np.testing.assert_allclose(trajectory.loc[0, ['q1_z', 'q2_z']].values.astype(float), [1, 1], atol=1e-9)
    # after H_2 qubit 2 points along +x
    assert trajectory.loc[1, 'q2_x'] == pytest.approx(1.0, abs=1e-6)


def test_fig2_program(fig2_simulation):
    assert fig2_simulation.fidelity > 1 - 1e-6
    assert fig2_simulation.checks['net_state_residual'] < 1e-6
    assert fig2_simulation.checks['printed_coupling_infidelity'] == pytest.approx(0.5, abs=1e-9)
    assert fig2_simulation.checks['rz_pair_infidelity'] < 1e-9
    assert len(fig2_simulation.notes) == 2


def test_fig2_trajectory(fig2_simulation):
    trajectory = fig2_simulation.trajectory
    assert len(trajectory) == 4
    # |+>|+> initially, qubit 2 ends on -y, qubit 1 on +z
    assert trajectory.loc[0, 'q1_x'] == pytest.approx(1.0, abs=1e-9)
    assert trajectory.loc[3, 'q2_y'] == pytest.approx(-1.0, abs=1e-6)
    assert trajectory.loc[3, 'q1_z'] == pytest.approx(1.0, abs=1e-6)


def test_run_gates_without_gates():
    state = decode_basis(4)[1]
    final_state, schedule, trajectory, encoded = run_gates(state, [])
    assert final_state is state
    assert schedule.steps == ()
    assert len(trajectory) == 1
    assert len(encoded) == 1
