# Pin BLAS to one thread before numpy loads: every matrix here is tiny and
# thread spin-up dominates wall time on small machines.
import os

for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
    os.environ.setdefault(var, "1")

import numpy as np
import pytest

import majorep as mj


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def eta_state():
    """Equal superposition of the single- and double-excitation 3-qubit states."""
    return mj.SymmetricState(3, np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0))
