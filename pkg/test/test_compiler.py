import numpy as np
import pytest
from .conftest import *
from feqtlib.compile_report import CompileReport
from feqtlib.compiler import build_schedule, compile, compile_named, cross_level_residual, evolve_ladder, \
    export_physical, infidelity_and_gradient, named_target, schedule_unitary
from feqtlib.exceptions import InvalidInputError
from feqtlib.gate_schedule import FspStep, GateSchedule, PinemStep
from feqtlib.gates import CNOT_21, SWAP, phase_dist
from feqtlib.harmonic_drive import HarmonicDrive
from feqtlib.ladder_state import LadderState
from feqtlib.physical_params import PhysicalParams
from feqtlib.template import Template
from .data import get_data_path


def test_empty_schedule_is_identity():
    schedule = GateSchedule(dim=4)
    np.testing.assert_allclose(schedule_unitary(schedule).matrix, np.eye(4))
    state = LadderState.mono_energetic()
    final_state, trajectory = evolve_ladder(state, schedule)
    assert final_state is state
    assert len(trajectory) == 1


def test_schedule_rejects_high_harmonics():
    with pytest.raises(InvalidInputError):
        GateSchedule(dim=4, steps=(PinemStep(drive=HarmonicDrive.from_couplings({3: 0.1})),))
    schedule = GateSchedule(dim=4, steps=(PinemStep(drive=HarmonicDrive.from_couplings({3: 0.1})),), max_harmonic=3)
    assert schedule.harmonic_limit == 3
    with pytest.raises(InvalidInputError):
        FspStep(steps=-1)


def test_schedule_then_merges_adjacent_steps():
    a = GateSchedule(dim=4, steps=(FspStep(steps=1), PinemStep(drive=HarmonicDrive.from_couplings({1: 0.1}))))
    b = GateSchedule(dim=4, steps=(PinemStep(drive=HarmonicDrive.from_couplings({1: 0.2j, 2: 0.3})),
                                   FspStep(steps=2)))
    tail = GateSchedule(dim=4, steps=(FspStep(steps=3),))
    c = a.then(b).then(tail)
    assert c.n_pinem == 1 and c.n_fsp == 2
    assert c.drives[0].couplings == {1: 0.1 + 0.2j, 2: 0.3}
    assert c.fsp_pattern == (1, 5)
    expected = schedule_unitary(tail).matrix @ schedule_unitary(b).matrix @ schedule_unitary(a).matrix
    np.testing.assert_allclose(schedule_unitary(c).matrix, expected, atol=1e-12)


def test_schedule_json_round_trip(tmp_path):
    schedule = GateSchedule(dim=4, steps=(
        PinemStep(drive=HarmonicDrive.from_couplings({1: 0.1 - 0.7j, 2: 1 / 3})),
        FspStep(steps=2),
        PinemStep(drive=HarmonicDrive.from_couplings({2: np.pi * 1j}))
    ))
    json_file = str(tmp_path / 'schedule.json')
    schedule.write_json_file(json_file)
    assert GateSchedule.read_json_file(json_file) == schedule
    with open(json_file) as f:
        text = f.read()
    schedule.write_json_file(json_file)
    with open(json_file) as f:
        assert f.read() == text


def test_schedule_json_rejects_unknown_keys():
    with pytest.raises(InvalidInputError):
        GateSchedule.from_dict({'dim': 4, 'steps': [], 'truncation': 3})
    with pytest.raises(InvalidInputError):
        GateSchedule.from_dict({'dim': 4, 'steps': [{'drift': {'steps': 1}}]})


def test_template_validation():
    with pytest.raises(InvalidInputError):
        Template(n_pinem=3, fsp_pattern=(1, 2, 3))
    with pytest.raises(InvalidInputError):
        Template(n_pinem=2, harmonics=(1, 1))
    template = Template(n_pinem=3)
    assert template.n_gaps == 2
    assert len(template.patterns()) == 9
    assert template.n_parameters == 12


def test_gradient_matches_finite_differences(rng):
    template = Template(n_pinem=3)
    pattern = (2, 1)
    x = rng.uniform(-1, 1, size=template.n_parameters)
    value, gradient = infidelity_and_gradient(x, CNOT_21, template, pattern)
    assert value == pytest.approx(phase_dist(schedule_unitary(build_schedule(x, template, pattern, 4)), CNOT_21))
    h = 1e-6
    numeric = np.zeros_like(x)
    for i in range(len(x)):
        e = np.zeros_like(x)
        e[i] = h
        numeric[i] = (infidelity_and_gradient(x + e, CNOT_21, template, pattern)[0]
                      - infidelity_and_gradient(x - e, CNOT_21, template, pattern)[0]) / (2 * h)
    np.testing.assert_allclose(gradient, numeric, atol=1e-7)


def test_compile_empty_template():
    report = compile(np.eye(4), Template(n_pinem=0))
    assert report.schedule.steps == ()
    assert report.converged
    assert report.infidelity == pytest.approx(0.0, abs=1e-15)


def test_compile_is_deterministic():
    template = Template(n_pinem=2, fsp_pattern=(2,))
    first = compile(named_target('hadamard_1'), template, n_starts=3, seed=11)
    second = compile(named_target('hadamard_1'), template, n_starts=3, seed=11)
    assert first == second
    assert first.to_dict() == second.to_dict()


def test_compile_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        compile(np.eye(4), Template(n_pinem=1), seed=-1)
    with pytest.raises(InvalidInputError):
        compile(np.eye(4), Template(n_pinem=1), n_starts=0)
    with pytest.raises(InvalidInputError):
        compile_named('toffoli')
    with pytest.raises(InvalidInputError):
        compile_named('rz', angles=(1.0,))


def test_compile_hadamard_1(compiled_hadamard_1):
    assert compiled_hadamard_1.converged
    assert compiled_hadamard_1.n_pinem <= 2
    assert compiled_hadamard_1.infidelity < 1e-6
    assert cross_level_residual(compiled_hadamard_1.schedule) < 1e-8


def test_compile_cnot_21(compiled_cnot_21):
    assert compiled_cnot_21.converged
    assert compiled_cnot_21.n_pinem <= 3
    assert compiled_cnot_21.infidelity < 1e-6


def test_compile_swap(compiled_swap):
    assert compiled_swap.n_pinem <= 6
    assert compiled_swap.infidelity < 1e-6
    assert phase_dist(schedule_unitary(compiled_swap.schedule), SWAP) < 1e-6


def test_compile_rz_pair():
    report = compile_named('rz', angles=(1.5707963, -1.5707963))
    assert report.n_pinem == 1
    assert report.infidelity < 1e-9
    assert report.n_starts == 0


def test_compile_report_round_trip(tmp_path, compiled_hadamard_1):
    json_file = str(tmp_path / 'compile_report.json')
    compiled_hadamard_1.write_json_file(json_file)
    assert CompileReport.read_json_file(json_file) == compiled_hadamard_1


def test_export_fsp_length():
    params = PhysicalParams.from_energies(200e3, 1.0, 0.5, z_dispersion_override=0.2)
    physical = export_physical(GateSchedule.read_json_file(get_data_path('fsp_one_step_d4.json')), params)
    assert physical.steps[0].length == pytest.approx(0.2 / 8)
    assert physical.warnings == []


def test_export_empty_and_strong_drive():
    params = PhysicalParams.from_energies(200e3, 1.0, 0.5)
    empty = export_physical(GateSchedule.read_json_file(get_data_path('empty_schedule_d4.json')), params)
    assert empty.steps == []
    assert empty.total_drift_length == 0.0
    strong = export_physical(GateSchedule.read_json_file(get_data_path('strong_drive_d4.json')), params)
    assert len(strong.warnings) == 1
    assert strong.steps[0].harmonics[0].angular_frequency == pytest.approx(params.omega)
    df = strong.to_dataframe()
    assert list(df['kind']) == ['pinem', 'fsp']
    assert df.loc[1, 'length'] == pytest.approx(2 * strong.z_dispersion / 8)
