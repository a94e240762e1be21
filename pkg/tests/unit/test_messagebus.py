# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import dataclasses
import pathlib
from typing import Generator
from typing import List
from unittest import mock

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.errors import ConfigError
from gyroqfi.errors import NumericalError
from gyroqfi.messagebus import MessageBus
from gyroqfi.messages import BaseCommand
from gyroqfi.messages import BaseEvent
from gyroqfi.messages import BaseMessage
from gyroqfi.messages import OutputWritten
from gyroqfi.units_of_work import AbstractUnitOfWork


@dataclasses.dataclass(frozen=True, eq=False)
class Ping(BaseCommand):
    value: int = 0


class FakeUnitOfWork(AbstractUnitOfWork):
    """Unit of work raising the events it is given."""

    def __init__(self) -> None:
        self.pending: List[BaseEvent] = []
        self.committed = False
        self.rolled_back = False

    def commit(self) -> None:
        self.committed = True

    def rollback(self) -> None:
        self.rolled_back = True

    def collect_events(self) -> Generator[BaseEvent, None, None]:
        while self.pending:
            yield self.pending.pop(0)


def test_returns_result_of_command_handler() -> None:
    bus = MessageBus(FakeUnitOfWork(), {Ping: lambda c: c.value * 2})
    assert bus.handle(Ping(21)) == 42


def test_dispatches_events_raised_by_command_handler() -> None:
    uow = FakeUnitOfWork()
    event = OutputWritten(pathlib.Path("a.csv"), rows=3)
    listener = mock.Mock()

    def handler(_: Ping) -> None:
        uow.pending.append(event)

    bus = MessageBus(uow, {Ping: handler}, {OutputWritten: [listener]})
    bus.handle(Ping())
    listener.assert_called_once_with(event)


def test_reraises_errors_of_command_handlers() -> None:
    def handler(_: Ping) -> None:
        raise NumericalError("diverged", diagnostics={"t": 1.0})

    bus = MessageBus(FakeUnitOfWork(), {Ping: handler})
    with pytest.raises(NumericalError, match="diverged"):
        bus.handle(Ping())


def test_skips_failing_event_handlers() -> None:
    uow = FakeUnitOfWork()
    uow.pending.append(OutputWritten(pathlib.Path("a.csv")))
    failing = mock.Mock(side_effect=ConfigError("bad"))
    listener = mock.Mock()

    bus = MessageBus(
        uow, {Ping: lambda _: None}, {OutputWritten: [failing, listener]}
    )
    bus.handle(Ping())
    failing.assert_called_once()
    listener.assert_called_once()


def test_subscribes_handlers() -> None:
    bus = MessageBus(FakeUnitOfWork(), {})
    bus.subscribe(Ping, lambda c: c.value)
    assert bus.handle(Ping(7)) == 7


def test_raises_error_when_subscribing_plain_message() -> None:
    bus = MessageBus(FakeUnitOfWork(), {})
    with pytest.raises(TypeError, match="is not a 'Command' or an 'Event'"):
        bus.subscribe(BaseMessage, print)


def test_raises_error_for_plain_message() -> None:
    bus = MessageBus(FakeUnitOfWork(), {})
    with pytest.raises(TypeError):
        bus.handle(BaseMessage())


def test_raises_error_for_command_without_handler() -> None:
    bus = MessageBus(FakeUnitOfWork(), {})
    with pytest.raises(KeyError):
        bus.handle(Ping())
