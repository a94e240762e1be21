# -*- coding: utf-8 -*-
"""Message class.

Messages are ordered by creation, so a queue drains commands and the
events they raise in the order they happened.

"""

# pylint: disable=too-few-public-methods

# Standard Library Imports
from __future__ import annotations
import datetime
import functools
import itertools

__all__ = ["BaseCommand", "BaseEvent", "BaseMessage"]


_sequence = itertools.count()


@functools.total_ordering
class BaseMessage:
    """Stamps every instance with its creation time and sequence number.

    The stamps are set in ``__new__`` so frozen dataclass subclasses get
    them without calling ``super().__init__``.

    """

    def __new__(cls, *args, **kwargs) -> BaseMessage:
        instance = super().__new__(cls)
        object.__setattr__(instance, "_created_at", datetime.datetime.now())
        object.__setattr__(instance, "_sequence", next(_sequence))
        return instance

    @property
    def created_at(self) -> datetime.datetime:
        return self._created_at  # pylint: disable=no-member

    @property
    def sequence(self) -> int:
        """Position in creation order."""
        return self._sequence  # pylint: disable=no-member

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, BaseMessage):
            return NotImplemented

        return self.sequence < other.sequence


class BaseCommand(BaseMessage):
    """Intent to run one study; named in the imperative."""


class BaseEvent(BaseMessage):
    """Something that happened; named in the past tense."""
