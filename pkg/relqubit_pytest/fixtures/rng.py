"""Seeded random generators for property checks."""

from __future__ import annotations

import numpy as np
import pytest


@pytest.fixture
def rng_seed() -> int:
    """Return the seed of the `rng` fixture, override it to change the draw."""
    return 0


@pytest.fixture
def rng(rng_seed: int) -> np.random.Generator:
    """Provide a numpy generator seeded with `rng_seed`."""
    return np.random.default_rng(rng_seed)
