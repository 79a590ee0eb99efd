"""call pytest_configure"""

import pytest

from eulerian_settings import EulerianSettings, get_settings


def pytest_configure():
    """
    pytest provides special function called `pytest_configure`
    called when pytest initialzed for configuring custom settings
    """
    # settings are cached per process; pytest-env has set EULERIAN_* by now
    get_settings.cache_clear()


@pytest.fixture
def settings() -> EulerianSettings:
    """single worker, no caps lowered"""
    return EulerianSettings(workers=1, max_n=None)


# -s: print to console
# pytest tests/pytest --cov=. --cov-report term --cov-report xml
