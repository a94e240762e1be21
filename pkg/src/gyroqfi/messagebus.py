# -*- coding: utf-8 -*-
"""Message Bus.

Delivers commands and events to their handlers.

Every command has exactly one handler; its outputs go through the unit of
work, whose events are collected after the handler returns and broadcast
to every subscribed event handler. A failing command handler re-raises
so the caller can map the error to an exit code; a failing event handler
is logged and skipped.

Implementation based on 'Architecture Patterns in Python' message-bus pattern.

.. _Architecture Patterns in Python:
    https://github.com/cosmicpython/code

"""

# Standard Library Imports
from __future__ import annotations
import collections
import logging
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Type

# Local Imports
from .errors import BaseError
from .messages import BaseCommand
from .messages import BaseEvent
from .messages import BaseMessage
from .queue import MessageQueue
from .units_of_work import AbstractUnitOfWork

__all__ = ["MessageBus"]


# Initialize logger.
log = logging.getLogger("gyroqfi")


class MessageBus:
    """Implements a message bus.

    Args:
        uow: Unit of work.
        command_handlers: Handler of each command type.
        event_handlers (optional): Handlers of each event type. Default
            none.

    """

    def __init__(
        self,
        uow: AbstractUnitOfWork,
        command_handlers: Dict[Type[BaseCommand], Callable],
        event_handlers: Optional[
            Dict[Type[BaseEvent], List[Callable]]
        ] = None,
    ) -> None:
        self._uow = uow
        self._command_handlers = dict(command_handlers)
        self._event_handlers: Dict[Type[BaseEvent], List[Callable]] = (
            collections.defaultdict(list)
        )
        for event_type, handlers in (event_handlers or {}).items():
            self._event_handlers[event_type].extend(handlers)
        self._queue = MessageQueue()

    @property
    def uow(self) -> AbstractUnitOfWork:
        """Unit of work."""
        return self._uow

    @property
    def queue(self) -> MessageQueue:
        """Message queue."""
        return self._queue

    def handle(self, message: BaseMessage) -> Any:
        """Handle a message and every event it raises.

        Args:
            message: Message.

        Returns:
            Result of the command handler; ``None`` for events.

        """
        result = None
        self.queue.append(message)
        while self.queue:
            current = self.queue.popleft()
            outcome = self.handle_message(current)
            if current is message:
                result = outcome
        return result

    def subscribe(self, message: Type[BaseMessage], handler: Callable) -> None:
        """Subscribe a handler for a command or event type.

        Raises:
            TypeError: when `message` is neither.

        """
        if issubclass(message, BaseCommand):
            self._command_handlers[message] = handler
        elif issubclass(message, BaseEvent):
            self._event_handlers[message].append(handler)
        else:
            error = f"{message} is not a 'Command' or an 'Event'"
            raise TypeError(error)

    def handle_message(self, message: BaseMessage) -> Any:
        if isinstance(message, BaseCommand):
            return self.handle_command(message)

        if isinstance(message, BaseEvent):
            return self.handle_event(message)

        error = f"{message} was not a 'Command' or an 'Event'"
        raise TypeError(error)

    def handle_command(self, command: BaseCommand) -> Any:
        """Run the handler of `command`.

        Raises:
            KeyError: when no handler is subscribed.

        """
        handler = self._command_handlers[type(command)]
        try:
            result = handler(command)
        except BaseError:
            log.exception("error handling %s", type(command).__name__)
            raise

        self.collect_events()
        return result

    def handle_event(self, event: BaseEvent) -> None:
        for handler in self._event_handlers[type(event)]:
            try:
                log.debug("handling event %s with %s", event, handler)
                handler(event)
            except BaseError:
                log.exception("error handling %s", event)
            else:
                self.collect_events()

    def collect_events(self) -> None:
        """Move events raised by the unit of work onto the queue."""
        self.queue.extend(list(self.uow.collect_events()))
