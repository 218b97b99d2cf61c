import numpy as np
import pytest

from ringmin import random_harmonic


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def assert_close(actual, expected, rtol=1e-10, atol=1e-12):
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    np.testing.assert_allclose(actual, expected, rtol=rtol, atol=atol)


@pytest.fixture
def harmonic_factory():
    def make(seed, degree=8, **kw):
        return random_harmonic(seed, degree=degree, **kw)

    return make
