"""Provide store for tests."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from collections.abc import Generator

    from relqubit.main import Store


@pytest.fixture
def store() -> Store:  # pragma: no cover
    """Provide current store, tests using store fixtures must override it."""
    msg = 'The `store` fixture has to be overridden by the test module.'
    raise NotImplementedError(msg)


@pytest.fixture
def needs_finish(store: Store) -> Generator[None, None, None]:
    """Finish the store after the test and check nothing is left queued."""
    yield None

    from relqubit.basic_types import FinishAction

    store.dispatch(FinishAction())
    assert store.is_finished, 'store did not finish'  # noqa: S101
