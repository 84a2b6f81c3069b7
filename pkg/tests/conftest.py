import functools
from pathlib import Path

import pytest

from trisphere.shelling import thin_position

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@functools.lru_cache(maxsize=None)
def cached_thin(t, strategy="branch-and-bound"):
    """thin_position is deterministic and pure; cache it across tests."""
    return thin_position(t, strategy=strategy)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
