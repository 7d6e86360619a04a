import numpy as np
import pytest
from .conftest import *
from feqtlib.conjectures import conjecture1_check, conjecture2_sweep, conjecture3_check
from feqtlib.exceptions import InvalidInputError


def test_conjecture1_factorization():
    for n in (2, 3, 4):
        for k in range(1, n):
            pinem_report, fsp_report = conjecture1_check(n, k, samples=5, seed=2)
            assert pinem_report.evidence_only and fsp_report.evidence_only
            assert pinem_report.residual < 1e-8, pinem_report.name
            assert fsp_report.residual < 1e-8, fsp_report.name


def test_conjecture1_validation():
    with pytest.raises(InvalidInputError):
        conjecture1_check(3, 3)


def test_conjecture2_sweep_d4_is_exact():
    summary = conjecture2_sweep(4, 2, n_targets=50, seed=4)
    assert summary['success_rate'] == 1.0
    assert summary['worst_residual'] < 1e-9
    assert sum(summary['histogram']['counts']) == 50


def test_conjecture2_sweep_d8():
    summary = conjecture2_sweep(8, 4, n_targets=40, seed=5)
    assert summary['success_rate'] >= 0.95


def test_conjecture3_validation():
    with pytest.raises(InvalidInputError):
        conjecture3_check(3, (1, 3))
    with pytest.raises(InvalidInputError):
        conjecture3_check(2, (2, 3))


def test_conjecture3_two_qubits_converges(compiled_swap):
    report = conjecture3_check(2, (1, 2), seed=1)
    assert report.n_pinem <= 6
    assert report.fsp_pattern == (2, 1, 2, 2, 1, 2)
    assert report.infidelity < 1e-6
    # at n = 2 the search is the named SWAP search under another name
    assert report.infidelity == pytest.approx(compiled_swap.infidelity, abs=1e-12)
