import pytest

from linkgap.bj import BJEngine


@pytest.fixture(scope="session")
def engine():
    """One memo shared by the whole run; values are key-determined."""
    return BJEngine()
