import pytest

from gmforms.gm import scan_exponents
from gmforms.verify import run_suite


@pytest.fixture(scope="session")
def scan_to_600():
    return scan_exponents(3, 600)


@pytest.fixture(scope="session")
def suite_600_d7():
    return run_suite(600, [7])


@pytest.fixture(scope="session")
def suite_600_generalized():
    return run_suite(600, [7, 31, 55, 79, 103, 127])
