import mpmath
import pytest

from zerodensity.bounds import table1_params, table2_params

mpmath.mp.dps = 30


@pytest.fixture
def headline_params():
    """Table 1 parameters at sigma = 0.90."""
    return table1_params(0.90)


@pytest.fixture
def table2_headline_params():
    return table2_params(0.90)
