# -*- coding: utf-8 -*-
"""Abstract Unit of Work.

A command stages its outputs inside a unit of work and commits them once
the run has finished; an error inside the context discards everything
staged so far, so an output directory never holds half a run.

"""

# Standard Library Imports
from __future__ import annotations
import abc
from types import TracebackType
from typing import Generator
from typing import Optional
from typing import Type

# Local Imports
from ..messages import BaseEvent

__all__ = ["AbstractUnitOfWork"]


class AbstractUnitOfWork(abc.ABC):
    """Represents the output transaction of one command.

    Leaving the context with an error rolls back. Leaving it cleanly
    commits only when `auto_commit` is set; handlers otherwise call
    ``commit()`` themselves once every output is staged.

    """

    _auto_commit: bool = False

    @property
    def auto_commit(self) -> bool:
        """Commit when the context exits without an error.

        Raises:
            TypeError: when set to anything but a ``bool``.

        """
        return self._auto_commit

    @auto_commit.setter
    def auto_commit(self, value: bool) -> None:
        if not isinstance(value, bool):
            message = f"expected type 'bool', got {type(value)} instead"
            raise TypeError(message)

        self._auto_commit = value

    def __enter__(self) -> AbstractUnitOfWork:
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        traceback: Optional[TracebackType],
    ) -> None:
        if exc_type is not None:
            self.rollback()
        elif self._auto_commit:
            self.commit()

    @abc.abstractmethod
    def commit(self) -> None:
        """Write staged outputs."""
        raise NotImplementedError

    @abc.abstractmethod
    def rollback(self) -> None:
        """Discard staged outputs."""
        raise NotImplementedError

    @abc.abstractmethod
    def collect_events(self) -> Generator[BaseEvent, None, None]:
        """Yield events raised by commits."""
        raise NotImplementedError
