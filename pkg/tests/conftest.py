from typing import Callable, Iterator

import numpy as np
import pytest

from elliptic_moments.utils.config import get_settings


@pytest.fixture
def settings_env(monkeypatch: pytest.MonkeyPatch) -> Iterator[Callable[..., None]]:
    """Override settings through the environment; the settings cache is reset around the test."""

    def apply(**values: object) -> None:
        for key, value in values.items():
            monkeypatch.setenv(f"ELLIPTIC_MOMENTS_{key.upper()}", str(value))
        get_settings.cache_clear()

    get_settings.cache_clear()
    yield apply
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
