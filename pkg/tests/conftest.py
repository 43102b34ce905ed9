import pytest
from hypothesis import settings

from regext import enumerate_regular

settings.register_profile("regext", deadline=None)
settings.load_profile("regext")


@pytest.fixture(scope="session")
def small_regular_corpus():
    """Every regular graph up to isomorphism for n in 4..10, keyed by (n, r)."""
    corpus = {}
    for n in range(4, 11):
        for r in range(n):
            if (n * r) % 2 == 0:
                corpus[(n, r)] = list(enumerate_regular(n, r))
    return corpus
