import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from romopt.model import FullOrderModel


@pytest.fixture(scope="session")
def model():
    return FullOrderModel()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_pose(rng, scale=0.5):
    """Random joint configuration away from the straight-leg singularity."""
    q = np.zeros(7)
    q[0] = rng.uniform(-0.5, 0.5)
    q[1] = rng.uniform(0.7, 1.0)
    q[2] = rng.uniform(-0.4, 0.4) * scale
    q[3] = rng.uniform(-0.8, 0.8) * scale
    q[4] = rng.uniform(0.2, 1.2) * scale
    q[5] = rng.uniform(-0.8, 0.8) * scale
    q[6] = rng.uniform(0.2, 1.2) * scale
    return q
