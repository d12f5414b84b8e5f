import pytest

from corpus import exhaustive_ideals, random_ideals

RANDOM_SEED = 20260810


@pytest.fixture(scope="session")
def small_corpus():
    """Exhaustive corpus: every ideal with n <= 3 and generator exponents
    <= 2, one per antichain (zero ideal included, unit excluded)."""
    return (exhaustive_ideals(1, 2) + exhaustive_ideals(2, 2)
            + exhaustive_ideals(3, 2))


@pytest.fixture(scope="session")
def random4_corpus():
    return random_ideals(4, 200, seed=RANDOM_SEED)
