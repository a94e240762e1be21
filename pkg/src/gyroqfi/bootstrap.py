# -*- coding: utf-8 -*-
"""Bootstrap.

Wires the command handlers to a unit of work and returns the message bus
that runs them.

"""

# Standard Library Imports
import functools
import inspect
from typing import Any
from typing import Callable
from typing import Dict

# Local Imports
from .handlers import COMMAND_HANDLERS
from .handlers import EVENT_HANDLERS
from .messagebus import MessageBus
from .units_of_work import AbstractUnitOfWork

__all__ = ["bootstrap", "bind_dependencies"]


def bind_dependencies(
    handler: Callable[..., Any], dependencies: Dict[str, Any]
) -> Callable[..., Any]:
    """Bind the entries of `dependencies` that `handler` accepts."""
    accepted = inspect.signature(handler).parameters
    bound = {k: v for k, v in dependencies.items() if k in accepted}
    return functools.partial(handler, **bound)


def bootstrap(
    uow: AbstractUnitOfWork, show_progress: bool = False
) -> MessageBus:
    """Message bus whose handlers write through `uow`.

    Args:
        uow: Unit of work of the command.
        show_progress (optional): Show progress bars. Default ``False``.

    Returns:
        Message bus.

    """
    dependencies = {"uow": uow, "show_progress": show_progress}
    command_handlers = {
        command_type: bind_dependencies(handler, dependencies)
        for command_type, handler in COMMAND_HANDLERS.items()
    }
    result = MessageBus(uow, command_handlers, EVENT_HANDLERS)
    return result
