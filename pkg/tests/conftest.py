import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def circle(n=64):
    return np.exp(2j * np.pi * np.arange(n) / n)
