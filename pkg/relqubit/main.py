"""Store running transformation pipelines one action at a time."""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import TYPE_CHECKING, Any, Generic, cast

from relqubit.basic_types import (
    Action,
    ActionMiddleware,
    BaseAction,
    BaseEvent,
    CreateStoreOptions,
    Event,
    Event2,
    EventHandler,
    EventMiddleware,
    FinishAction,
    FinishEvent,
    ReducerType,
    State,
    is_complete_reducer_result,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

logger = logging.getLogger(__name__)

Item = BaseAction | BaseEvent


class Store(Generic[State, Action, Event]):
    """Hold a state and fold dispatched actions into it through a reducer.

    Everything runs on the caller's thread. A dispatch returns once every
    queued action is reduced and every event handler it triggered has run;
    pending actions always go before pending events.
    """

    def __init__(
        self: Store,
        reducer: ReducerType[State, Action, Event],
        options: CreateStoreOptions[Action] | None = None,
    ) -> None:
        """Create a store with no state loaded."""
        self.reducer = reducer
        self._action_middlewares: list[ActionMiddleware] = list(
            (options or CreateStoreOptions()).action_middlewares,
        )
        self._event_middlewares: list[EventMiddleware] = []
        self._event_handlers: defaultdict[type, list[EventHandler]] = defaultdict(
            list,
        )

        self._state: State | None = None
        self._actions: list[Action] = []
        self._events: list[Event] = []
        self._is_running = False
        self._is_finished = False

    @property
    def state(self: Store[State, Action, Event]) -> State | None:
        return self._state

    @property
    def is_finished(self: Store[State, Action, Event]) -> bool:
        """Whether a `FinishEvent` went through the store."""
        return self._is_finished

    @staticmethod
    def _pass(middlewares: Sequence[Callable[[Any], Any]], item: Item) -> Item | None:
        for middleware in middlewares:
            item = middleware(item)
            if item is None:
                return None
        return item

    def _enqueue(self: Store[State, Action, Event], items: Sequence[Item]) -> None:
        for item in items:
            if isinstance(item, BaseAction):
                action = self._pass(self._action_middlewares, item)
                if action is not None:
                    self._actions.append(cast(Action, action))
            elif isinstance(item, BaseEvent):
                event = self._pass(self._event_middlewares, item)
                if event is not None:
                    self._events.append(cast(Event, event))

    def _reduce(self: Store[State, Action, Event], action: Action) -> None:
        result = self.reducer(self._state, action)
        if is_complete_reducer_result(result):
            self._state = result.state
            self._enqueue([*(result.actions or []), *(result.events or [])])
        else:
            self._state = result
        if isinstance(action, FinishAction):
            self._enqueue([FinishEvent()])

    def _handle(self: Store[State, Action, Event], event: Event) -> None:
        for handler in list(self._event_handlers[type(event)]):
            handler(event)
        if isinstance(event, FinishEvent) and not self._is_finished:
            self._is_finished = True
            logger.debug('store finished with state %s', self._state)

    def _run(self: Store[State, Action, Event]) -> None:
        self._is_running = True
        try:
            while self._actions or self._events:
                if self._actions:
                    self._reduce(self._actions.pop(0))
                else:
                    self._handle(self._events.pop(0))
        except Exception:
            self._actions.clear()
            self._events.clear()
            raise
        finally:
            self._is_running = False

    def dispatch(
        self: Store[State, Action, Event],
        *actions: Action | list[Action],
    ) -> None:
        """Queue actions, or lists of them, and run the queues dry.

        A failing reducer or handler drops whatever was still queued.
        """
        self._enqueue(
            [
                action
                for item in actions
                for action in (item if isinstance(item, list) else [item])
                if action is not None
            ],
        )
        if not self._is_running:
            self._run()

    def subscribe_event(
        self: Store[State, Action, Event],
        event_type: type[Event2],
        handler: EventHandler[Event2],
    ) -> Callable[[], None]:
        """Call `handler` with each event of `event_type`, return its unsubscriber."""
        handlers = self._event_handlers[event_type]
        handlers.append(handler)
        return lambda: handlers.remove(handler)

    def add_middlewares(
        self: Store[State, Action, Event],
        *,
        action: ActionMiddleware | None = None,
        event: EventMiddleware | None = None,
    ) -> Callable[[], None]:
        """Append action and event middlewares, return their remover.

        A middleware returns the item to pass on, possibly replaced, or None
        to drop it.
        """
        added = [
            (middlewares, middleware)
            for middlewares, middleware in (
                (self._action_middlewares, action),
                (self._event_middlewares, event),
            )
            if middleware is not None
        ]
        for middlewares, middleware in added:
            middlewares.append(middleware)

        def remove() -> None:
            for middlewares, middleware in added:
                middlewares.remove(middleware)

        return remove


def log_action_middleware(action: BaseAction) -> BaseAction:
    """Log every dispatched action at debug level and pass it on."""
    logger.debug('dispatch %s', action)
    return action
