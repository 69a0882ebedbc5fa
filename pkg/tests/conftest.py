import math

import pytest


@pytest.fixture
def gamma_grid():
    """Default 101-point gamma grid on [0, pi/2]."""
    return [i * math.pi / 2 / 100 for i in range(101)]
