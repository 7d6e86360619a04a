import numpy as np
import pytest
from .conftest import *
from feqtlib.exceptions import InvalidInputError
from feqtlib.verification import conventions_report, ladder_suite, qudit_suite, random_drive, run_suite


def test_ladder_suite():
    reports = ladder_suite(samples=3, seed=2)
    for report in reports:
        assert report.passed, '%s: %.3e' % (report.name, report.residual)
    assert reports[-1].name == 'pinem_fsp_noncommutation'
    assert reports[-1].witness


def test_ladder_suite_empty_drive():
    reports = ladder_suite(samples=2, max_coupling=0.0)
    assert all(report.passed for report in reports)
    assert all(not report.witness for report in reports)


def test_random_drive(rng):
    drive = random_drive(rng, max_harmonic=4, max_coupling=1.0)
    assert 1 <= len(drive.terms) <= 4
    assert all(abs(g) <= 1.0 for _, g in drive.terms)
    assert random_drive(rng, max_harmonic=4, max_coupling=0.0).is_empty


def test_qudit_suite():
    reports = qudit_suite(dims=(2, 4), samples=10, seed=3)
    names = [report.name for report in reports]
    assert 'fsp_d4_matrix' in names
    assert 'fsp_non_closure(d=2)' in names
    for report in reports:
        assert report.passed, '%s: %.3e' % (report.name, report.residual)


def test_qudit_suite_runs_full_sample_counts():
    report = run_suite('qudit', dims=[2, 4, 8], samples=50, seed=1)
    assert report['passed']
    assert report['drive_count'] == 100
    checks = {check['name']: check for check in report['checks']}
    for d in (2, 4, 8):
        assert checks['pinem_closure(d=%i)' % d]['sample_count'] == 100 * 50
        assert checks['fsp_non_closure(d=%i)' % d]['sample_count'] >= 50
        assert checks['pinem_diagonality(d=%i)' % d]['sample_count'] == 100
        assert checks['eigenphase_oracle(d=%i)' % d]['sample_count'] == 100


@pytest.mark.parametrize('samples,drive_count', [(0, 10), (10, 0)])
def test_qudit_suite_rejects_empty_sampling(samples, drive_count):
    with pytest.raises(InvalidInputError):
        qudit_suite(dims=(2,), samples=samples, drive_count=drive_count)


def test_results_suite_report():
    report = run_suite('results', samples=5, seed=1)
    assert report['passed']
    assert len(report['checks']) == 8
    assert 'conventions' in report


def test_conjectures_suite_is_evidence_only():
    report = run_suite('conjectures', dims=[4], samples=3, seed=1)
    assert report['passed']
    assert report['evidence_only']
    assert len(report['factorization']) == 2
    assert report['phase_gate'][0]['success_rate'] == 1.0
    assert report['swap'] == []


def test_run_suite_rejects_unknown_suite():
    with pytest.raises(InvalidInputError):
        run_suite('everything')


def test_conventions_report():
    report = conventions_report()
    assert report['d4_diagonal']['residual'] > 1e-3
    assert report['harmonic_weighting']['residual_closed_form'] < 1e-9
    assert report['harmonic_weighting']['residual_with_1_over_r'] > 1e-3
    assert report['two_to_one_qubit']['residual_printed_phase'] > 1e-3
    assert report['two_to_one_qubit']['residual_mirrored_phase'] < 1e-9
    assert report['rz_pair_couplings']['printed_infidelity'] == pytest.approx(0.5, abs=1e-9)
    np.testing.assert_allclose(report['rz_pair_couplings']['solver_g1'], [-np.pi / 8, np.pi / 8], atol=1e-12)
    np.testing.assert_allclose(report['rz_pair_couplings']['solver_g2'], [0.0, -np.pi / 8], atol=1e-12)
