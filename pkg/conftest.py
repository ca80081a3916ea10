import numpy as np
import pytest

from Distributions import KDPP, ExplicitTable


class FixedUniforms:
    """ Stands in for a numpy Generator: hands out the given uniforms first, then zeros """

    def __init__(self, values):
        self._values = list(values)

    def random(self, size):
        head, self._values = self._values[:size], self._values[size:]
        return np.array(head + [0.0] * (size - len(head)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def fixed_uniforms():
    return FixedUniforms


@pytest.fixture
def uniform_4_2():
    """ L = I_4, k = 2: the uniform distribution on the six 2-subsets of {0, 1, 2, 3} """
    return KDPP(np.eye(4), 2)


@pytest.fixture
def diagonal_kdpp():
    return KDPP(np.diag([4.0, 3.0, 2.0, 1.0]), 2)


@pytest.fixture
def heavy_light_table():
    """ Two adjacent states with masses 1 and 2 """
    return ExplicitTable(4, 2, {(0, 1): 1.0, (0, 2): 2.0})


@pytest.fixture
def disjoint_table():
    return ExplicitTable(4, 2, {(0, 1): 1.0, (2, 3): 1.0})
