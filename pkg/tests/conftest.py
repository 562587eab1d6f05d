"""Pytest configuration file for the tests."""

from __future__ import annotations

import random

import numpy as np
import pytest

from relqubit_pytest.fixtures import (
    needs_finish,
    report_snapshot,
    rng,
    rng_seed,
    snapshot_prefix,
    store,
    store_monitor,
)

__all__ = [
    'needs_finish',
    'report_snapshot',
    'rng',
    'rng_seed',
    'snapshot_prefix',
    'store',
    'store_monitor',
]


@pytest.fixture(autouse=True)
def _() -> None:
    """Seed the global generators, library code only draws from explicit seeds."""
    random.seed(0)
    np.random.seed(0)  # noqa: NPY002
