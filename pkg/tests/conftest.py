import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from aqwd.signals import Signal  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_signal(rng, n, t0=-1.3, dt=0.17):
    return Signal(rng.standard_normal(n) + 1j * rng.standard_normal(n), t0, dt)
