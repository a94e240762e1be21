# -*- coding: utf-8 -*-
"""Message Queue.

A priority queue of messages; the oldest message always leaves first, no
matter the order messages were added in.

"""

# Standard Library Imports
from __future__ import annotations
import heapq
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional

# Local Imports
from .messages import BaseMessage

__all__ = ["MessageQueue"]


def _checked(__obj: object, /) -> BaseMessage:
    if not isinstance(__obj, BaseMessage):
        message = f"expected type 'BaseMessage', got {type(__obj)} instead"
        raise TypeError(message)

    return __obj


class MessageQueue:
    """Drains messages in creation order.

    Args:
        __iterable (optional): Initial messages. Default ``None``.

    Raises:
        TypeError: when an item is not a message.

    """

    def __init__(
        self, __iterable: Optional[Iterable[BaseMessage]] = None, /
    ) -> None:
        self._heap: List[BaseMessage] = []
        self.extend(__iterable or [])

    def __iter__(self) -> Iterator[BaseMessage]:
        return self

    def __next__(self) -> BaseMessage:
        if not self._heap:
            raise StopIteration

        return self.popleft()

    def __len__(self) -> int:
        return len(self._heap)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({sorted(self._heap)!r})"

    def append(self, __item: BaseMessage, /) -> None:
        heapq.heappush(self._heap, _checked(__item))

    def extend(self, __iterable: Iterable[BaseMessage], /) -> None:
        # Validate everything before touching the heap.
        checked = [_checked(item) for item in __iterable]
        self._heap.extend(checked)
        heapq.heapify(self._heap)

    def popleft(self) -> BaseMessage:
        """Remove and return the oldest message.

        Raises:
            IndexError: when the queue is empty.

        """
        return heapq.heappop(self._heap)

    def clear(self) -> None:
        self._heap.clear()
