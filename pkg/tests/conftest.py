import os
from fractions import Fraction

import pytest
import sympy.core.random as sympy_random
from click.testing import CliRunner

from superorbit.field import RationalField


@pytest.fixture(autouse=True)
def clean_env():
    """Ensure SUPERORBIT environment variables don't leak into tests."""
    old_env = os.environ.copy()

    for key in list(os.environ.keys()):
        if key.startswith("SUPERORBIT_") or key == "CACHE":
            del os.environ[key]

    yield

    os.environ.clear()
    os.environ.update(old_env)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def sample_field():
    "QQ with a = 2, a generic enough sample for D(2,1;a)."
    return RationalField(alpha=Fraction(2))


@pytest.fixture
def rng():
    "sympy's shared generator, reseeded so every run draws the same samples."
    sympy_random.seed(20261018)
    return sympy_random
