"""Spy on the actions and events a store dispatches."""

from __future__ import annotations

from typing import TYPE_CHECKING, TypeVar

import pytest

from relqubit.basic_types import BaseAction, BaseEvent

if TYPE_CHECKING:
    from collections.abc import Callable

    from pytest_mock import MockerFixture

    from relqubit.main import Store

Item = TypeVar('Item', bound=BaseAction | BaseEvent)


class StoreMonitor:
    """Record every action and event passing through a store's middlewares."""

    def __init__(self: StoreMonitor, mocker: MockerFixture) -> None:
        """Create a monitor that is not yet attached to a store."""
        self.store: Store | None = None
        self._detach: Callable[[], None] | None = None
        self.dispatched_actions = mocker.spy(self, '_action_middleware')
        self.dispatched_events = mocker.spy(self, '_event_middleware')

    def _action_middleware(self: StoreMonitor, action: BaseAction) -> BaseAction:
        return action

    def _event_middleware(self: StoreMonitor, event: BaseEvent) -> BaseEvent:
        return event

    def monitor(self: StoreMonitor, store: Store) -> None:
        """Attach to a store, detaching from the previous one."""
        if self._detach:
            self._detach()
        self.store = store
        self._detach = store.add_middlewares(
            action=self._action_middleware,
            event=self._event_middleware,
        )

    @staticmethod
    def _of_type(calls: list, kind: type[Item]) -> list[Item]:
        return [call.args[0] for call in calls if isinstance(call.args[0], kind)]

    def actions(self: StoreMonitor, kind: type[Item] = BaseAction) -> list[Item]:
        """Return the dispatched actions of a type, in dispatch order."""
        return self._of_type(self.dispatched_actions.call_args_list, kind)

    def events(self: StoreMonitor, kind: type[Item] = BaseEvent) -> list[Item]:
        """Return the dispatched events of a type, in dispatch order."""
        return self._of_type(self.dispatched_events.call_args_list, kind)


@pytest.fixture
def store_monitor(store: Store, mocker: MockerFixture) -> StoreMonitor:
    """Monitor the `store` fixture."""
    monitor = StoreMonitor(mocker)

    if store:
        monitor.monitor(store)

    return monitor
