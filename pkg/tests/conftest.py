import pytest

import helpers


@pytest.fixture(scope="session")
def connected_corpus():
    """300 seeded connected instances shared by the agreement suites."""
    return helpers.corpus(300, connected=True)


@pytest.fixture(scope="session")
def mixed_corpus():
    """Smaller corpus allowing disconnected instances."""
    return helpers.corpus(60, connected=False)
