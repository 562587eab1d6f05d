"""Utility fixtures for testing relqubit stores and reports."""

import pytest

pytest.register_assert_rewrite(
    'relqubit_pytest.fixtures.monitor',
    'relqubit_pytest.fixtures.rng',
    'relqubit_pytest.fixtures.snapshot',
    'relqubit_pytest.fixtures.store',
)

from .monitor import StoreMonitor, store_monitor  # noqa: E402
from .rng import rng, rng_seed  # noqa: E402
from .snapshot import ReportSnapshot, report_snapshot, snapshot_prefix  # noqa: E402
from .store import needs_finish, store  # noqa: E402

__all__ = (
    'ReportSnapshot',
    'StoreMonitor',
    'needs_finish',
    'report_snapshot',
    'rng',
    'rng_seed',
    'snapshot_prefix',
    'store',
    'store_monitor',
)
