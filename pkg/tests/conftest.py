import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "combnull",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("combnull")


@pytest.fixture
def rng() -> random.Random:
    # fixed seed so failures replay byte-for-byte
    return random.Random(0xC0FFEE)


@pytest.fixture
def report(capsys):
    """Print a line straight to the terminal, bypassing pytest capture."""

    def _emit(line: str) -> None:
        with capsys.disabled():
            print(line)

    return _emit
