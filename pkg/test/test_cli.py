import os
import pandas as pd
import pytest
from .conftest import *
from feqtlib.cli.cli_main import main
from feqtlib.constants import ExitCodes
from feqtlib.gate_schedule import GateSchedule
from .data import get_data_path, read_json


def test_simulate_mono_energetic(tmp_path):
    code = main(['simulate', '--config', get_data_path('mono_energetic_empty.json'), '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    state = read_json(str(tmp_path / 'qudit_state.json'))
    assert [a['re'] for a in state['alpha']] == pytest.approx([0.5] * 4)
    assert state['norm'] == pytest.approx(1.0)
    assert 'fidelity' not in state
    trajectory = pd.read_csv(str(tmp_path / 'trajectory.csv'))
    assert len(trajectory) == 1
    assert trajectory.loc[0, 'q1_x'] == pytest.approx(1.0)


def test_simulate_basis_state_spectrum(tmp_path):
    code = main(['simulate', '--config', get_data_path('basis_zero_with_schedule_file.json'), '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    spectrum = pd.read_csv(str(tmp_path / 'spectrum.csv'))
    assert list(spectrum.columns) == ['ell', 'probability', 'phase']
    occupied = spectrum[spectrum['probability'] > 1e-12]
    assert list(occupied['ell']) == [0, 1, 2, 3]
    assert list(occupied['probability']) == pytest.approx([0.25] * 4)


def test_simulate_target_fidelity(tmp_path):
    code = main(['simulate', '--config', get_data_path('explicit_state_target.json'), '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    assert read_json(str(tmp_path / 'qudit_state.json'))['fidelity'] == pytest.approx(1.0)


def test_simulate_errors(tmp_path):
    assert main(['simulate', '--config', get_data_path('unknown_field.json'), '--out', str(tmp_path)]) \
        == ExitCodes.CONFIG_ERROR
    assert main(['simulate', '--config', get_data_path('fixed_half_width_too_small.json'), '--out', str(tmp_path)]) \
        == ExitCodes.NUMERIC_BUDGET
    assert main(['simulate', '--config', str(tmp_path / 'missing.json')]) == ExitCodes.CONFIG_ERROR


def test_compile_rz(tmp_path):
    code = main(['compile', 'rz', '--angles', '1.5707963', '-1.5707963', '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    schedule = GateSchedule.read_json_file(str(tmp_path / 'schedule.json'))
    assert schedule.n_pinem == 1
    report = read_json(str(tmp_path / 'compile_report.json'))
    assert report['converged']
    assert report['infidelity'] < 1e-9
    assert 'wall_time' not in report


def test_compile_is_byte_identical(tmp_path):
    first, second = tmp_path / 'first', tmp_path / 'second'
    for out in (first, second):
        assert main(['compile', 'h1', '--n-pinem', '2', '--fsp-pattern', '2', '--n-starts', '2',
                     '--seed', '5', '--best-effort', '--out', str(out)]) == ExitCodes.SUCCESS
    for name in ('schedule.json', 'compile_report.json'):
        with open(str(first / name)) as f1, open(str(second / name)) as f2:
            assert f1.read() == f2.read()


def test_compile_not_converged(tmp_path):
    args = ['compile', 'h1', '--n-pinem', '1', '--n-starts', '2', '--out', str(tmp_path)]
    assert main(args) == ExitCodes.NOT_CONVERGED
    assert os.path.isfile(str(tmp_path / 'compile_report.json'))
    assert main(args + ['--best-effort']) == ExitCodes.SUCCESS


def test_compile_usage_errors(tmp_path):
    assert main(['compile', 'toffoli']) == ExitCodes.CONFIG_ERROR
    assert main(['compile', 'swap', '--fsp-pattern', '2,1', '--out', str(tmp_path)]) == ExitCodes.CONFIG_ERROR
    assert main(['compile', 'rz', '--angles', '1.0', '--out', str(tmp_path)]) == ExitCodes.CONFIG_ERROR


def test_verify_results(tmp_path):
    code = main(['verify', 'results', '--dims', '4,8', '--samples', '5', '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    report = read_json(str(tmp_path / 'verify_results.json'))
    assert report['passed']
    identities = [check for check in report['checks'] if check['name'] != 'HTH']
    assert len(identities) == 7
    assert all(check['residual'] < 1e-9 for check in identities)


def test_verify_ladder_empty_drive(tmp_path, monkeypatch):
    monkeypatch.setenv('FEQT_OUT_DIR', str(tmp_path))
    code = main(['verify', 'ladder', '--samples', '2', '--max-coupling', '0'])
    assert code == ExitCodes.SUCCESS
    assert read_json(str(tmp_path / 'verify_ladder.json'))['passed']


def test_verify_conjectures(tmp_path):
    code = main(['verify', 'conjectures', '--dims', '8', '--samples', '3', '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    assert read_json(str(tmp_path / 'verify_conjectures.json'))['evidence_only']


def test_verify_qudit_drive_count(tmp_path):
    code = main(['verify', 'qudit', '--dims', '2,4', '--samples', '5', '--drive-count', '7',
                 '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    report = read_json(str(tmp_path / 'verify_qudit.json'))
    assert report['drive_count'] == 7
    closure = [check for check in report['checks'] if check['name'] == 'pinem_closure(d=4)'][0]
    assert closure['sample_count'] == 35


def test_export(tmp_path):
    code = main(['export', '--schedule', get_data_path('fsp_one_step_d4.json'), '--z-dispersion', '0.2',
                 '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    physical = read_json(str(tmp_path / 'physical_schedule.json'))
    assert physical['steps'][0]['fsp']['length'] == pytest.approx(0.025)
    assert physical['warnings'] == []


def test_export_strong_drive_warns(tmp_path):
    code = main(['export', '--schedule', get_data_path('strong_drive_d4.json'), '--out', str(tmp_path)])
    assert code == ExitCodes.SUCCESS
    assert len(read_json(str(tmp_path / 'physical_schedule.json'))['warnings']) == 1


def test_main_usage():
    assert main(['--version']) == ExitCodes.SUCCESS
    assert main([]) == ExitCodes.CONFIG_ERROR
    assert main(['verify', 'everything']) == ExitCodes.CONFIG_ERROR
