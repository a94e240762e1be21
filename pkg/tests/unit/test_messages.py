# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import datetime
import pathlib
from typing import Type

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.messages import BaseCommand
from gyroqfi.messages import BaseEvent
from gyroqfi.messages import BaseMessage
from gyroqfi.messages import OutputWritten
from gyroqfi.messages import RunCompleted


@pytest.mark.parametrize("message", [BaseMessage, BaseCommand, BaseEvent])
def test_sets_created_at_attribute(message: Type[BaseMessage]) -> None:
    result = message().created_at
    assert isinstance(result, datetime.datetime)


@pytest.mark.parametrize("message", [BaseMessage, BaseCommand, BaseEvent])
def test_sorts_messages_in_order_created(message: Type[BaseMessage]) -> None:
    message1, message2, message3 = message(), message(), message()
    result = sorted([message3, message1, message2])
    assert result == [message1, message2, message3]


def test_orders_dataclass_events_by_creation() -> None:
    """Tests that field values do not affect ordering of events."""
    first = RunCompleted("train", pathlib.Path("z"), 5.0)
    second = OutputWritten(pathlib.Path("a.csv"), rows=1)
    assert first < second
    assert not second < first


def test_refuses_to_order_against_other_types() -> None:
    message = BaseMessage()
    with pytest.raises(TypeError):
        assert message < 1


def test_numbers_messages_in_sequence() -> None:
    first, second = BaseMessage(), BaseMessage()
    assert second.sequence == first.sequence + 1
