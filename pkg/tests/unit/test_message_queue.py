# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.messages import BaseMessage
from gyroqfi.queue import MessageQueue
from .. import factories


def test_instantiates_message_queue_with_messages() -> None:
    """Tests that a queue can be instantiated with messages."""
    result = MessageQueue(factories.make_messages(3))
    assert len(result) == 3


def test_raises_error_when_argument_not_iterable() -> None:
    with pytest.raises(TypeError):
        MessageQueue(1)


def test_raises_error_when_argument_not_messages() -> None:
    with pytest.raises(TypeError, match="expected type 'BaseMessage'"):
        MessageQueue([1, 2, 3])


def test_sorts_messages_in_creation_order() -> None:
    """Tests that messages are always sorted after instantiation."""
    message1, message2, message3 = factories.make_messages(3)
    queue = MessageQueue([message3, message1, message2])
    assert list(queue) == [message1, message2, message3]


def test_sorts_queue_after_appending_message() -> None:
    message1, message2, message3 = factories.make_messages(3)
    queue = MessageQueue([message2, message3])
    queue.append(message1)
    assert list(queue) == [message1, message2, message3]


def test_sorts_queue_after_extending() -> None:
    message1, message2, message3 = factories.make_messages(3)
    queue = MessageQueue([message3])
    queue.extend([message2, message1])
    assert list(queue) == [message1, message2, message3]


def test_raises_error_when_appending_non_message() -> None:
    queue = MessageQueue()
    with pytest.raises(TypeError):
        queue.append("message")


def test_raises_error_when_empty() -> None:
    """Tests that `next()` raises an error when queue is empty."""
    with pytest.raises(StopIteration):
        next(MessageQueue())


def test_queue_is_falsy_when_empty() -> None:
    queue = MessageQueue([BaseMessage()])
    assert queue

    queue.popleft()
    assert not queue


def test_clears_queue() -> None:
    queue = MessageQueue(factories.make_messages(3))
    queue.clear()
    assert len(queue) == 0
