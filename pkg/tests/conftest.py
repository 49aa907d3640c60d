"""
Shared fixtures for the nonvanishing tests.
"""

import pytest

from nonvanishing.params import enumerate_params, validate


@pytest.fixture
def flagship():
    """The (p, g, l) = (5, 16, 6) cover."""
    return validate(5, 16, 6)


@pytest.fixture
def char3():
    """The (p, g, l) = (3, 7, 4) cover."""
    return validate(3, 7, 4)


@pytest.fixture
def char3_double():
    """The (p, g, l) = (3, 7, 2) cover, with m = 2 and deg N = 2."""
    return validate(3, 7, 2)


@pytest.fixture(scope="session")
def small_sweep():
    """Every valid triple with p <= 13 and g <= 80."""
    return enumerate_params(13, 80)


@pytest.fixture(scope="session")
def full_sweep():
    """Every valid triple with p <= 50 and g <= 500."""
    return enumerate_params(50, 500)
