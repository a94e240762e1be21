# -*- coding: utf-8 -*-
"""Abstract Repository.

Items are staged under a key and only reach storage on ``commit()``.

"""

# Standard Library Imports
import abc
import typing

__all__ = ["AbstractRepository"]


T = typing.TypeVar("T")


class AbstractRepository(abc.ABC, typing.Generic[T]):
    """Represents a repository staging items until commit."""

    def __init__(self) -> None:
        self._staged: typing.Dict[str, T] = {}

    @abc.abstractmethod
    def key(self, item: T) -> str:
        """Key under which `item` is staged."""
        raise NotImplementedError

    def add(self, item: T) -> None:
        """Stage `item`.

        Raises:
            ValueError: when an item with the same key is already staged.

        """
        key = self.key(item)
        if key in self._staged:
            raise ValueError(f"{key} is already staged")

        self._staged[key] = item

    def get(self, key: str) -> T:
        """Staged item under `key`."""
        return self._staged[key]

    def list(self) -> typing.List[T]:
        """Staged items in staging order."""
        return list(self._staged.values())

    def remove(self, item: T) -> None:
        """Unstage `item`."""
        del self._staged[self.key(item)]

    def rollback(self) -> None:
        """Discard staged items."""
        self._staged.clear()

    @abc.abstractmethod
    def commit(self) -> typing.Any:
        """Persist and unstage every staged item."""
        raise NotImplementedError
