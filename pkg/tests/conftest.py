import pytest

from semiphoton_lab.constants import codata_2018, natural_units


@pytest.fixture
def codata():
    return codata_2018()


@pytest.fixture
def natural():
    return natural_units()
