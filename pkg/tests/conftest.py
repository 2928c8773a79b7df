import pytest

from primeperm import build_sieve


@pytest.fixture(scope="session")
def sieve_small():
    """Covers problem sizes up to n = 300."""
    return build_sieve(600)


@pytest.fixture(scope="session")
def sieve_big():
    """Covers problem sizes up to n = 2000."""
    return build_sieve(4000)
