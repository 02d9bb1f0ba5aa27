import pytest

from bellnum import exact


@pytest.fixture(scope="session")
def bells():
    return exact.bell_numbers(200)


@pytest.fixture(scope="session")
def betas():
    return exact.beta_numbers(201)


@pytest.fixture(scope="session")
def matsunaga25():
    return exact.matsunaga_rows(25)


@pytest.fixture(scope="session")
def stirling26():
    return exact.stirling_unsigned_rows(26)
