import numpy as np
import pytest
from .data import get_data_path
from feqtlib.compiler import compile_named
from feqtlib.constants import *
from feqtlib.harmonic_drive import HarmonicDrive


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def random_drive():
    def make(rng: np.random.Generator, harmonics=(1, 2), max_coupling: float = np.pi) -> HarmonicDrive:
        return HarmonicDrive.from_couplings({
            j: complex(rng.uniform(0, max_coupling) * np.exp(1j * rng.uniform(-np.pi, np.pi))) for j in harmonics
        })
    return make


@pytest.fixture(scope='session')
def compiled_hadamard_1():
    return compile_named(NamedGates.HADAMARD_1, seed=1)


@pytest.fixture(scope='session')
def compiled_cnot_21():
    return compile_named(NamedGates.CNOT_21, seed=1)


@pytest.fixture(scope='session')
def compiled_swap():
    return compile_named(NamedGates.SWAP, seed=1)
