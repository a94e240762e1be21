# -*- coding: utf-8 -*-
"""Abstract File Wrappers.

Every output format opens its file through a wrapper that checks the
path once, refuses writes to read-only inputs and hands back an I/O
wrapper speaking the format.

"""

# Standard Library Imports
import abc
import logging
import os
import pathlib
import typing

# Local Imports
from .. import settings
from ..utils import to_text_file_mode

__all__ = ["AbstractFileWrapper", "AbstractIOWrapper"]

# Initialize logger.
log = logging.getLogger("gyroqfi")

_WRITE_MODES = frozenset("awx+")


def _checked_path(filepath: os.PathLike, extension: str) -> pathlib.Path:
    if not isinstance(filepath, os.PathLike):
        message = f"expected type 'PathLike', got {type(filepath)} instead"
        raise TypeError(message)

    path = pathlib.Path(filepath)
    if path.is_dir():
        raise IsADirectoryError(f"{path!s} is a directory")

    if path.suffix.lower() != extension:
        raise ValueError(f"{path.name!s} is not a '{extension!s}' file")

    return path


class AbstractFileWrapper(abc.ABC):
    """Represents a text file of one format.

    Args:
        filepath: Path to file.
        newline (optional): Newline translation passed to ``open``.
            Default ``None``.
        read_only (optional): Refuse write modes. Default ``False``.

    Raises:
        TypeError: when `filepath` is not ``PathLike``.
        IsADirectoryError: when `filepath` points to a directory.
        ValueError: when `filepath` does not end in `extension`.

    """

    def __init__(
        self,
        filepath: os.PathLike,
        *,
        newline: typing.Optional[str] = None,
        read_only: bool = False,
    ) -> None:
        self._filepath = _checked_path(filepath, self.extension)
        self._newline = newline
        self.read_only = read_only

    @property
    @abc.abstractmethod
    def extension(self) -> str:
        """Lower-case extension with its leading dot."""
        raise NotImplementedError

    @abc.abstractmethod
    def open(self, mode: str = "r") -> "AbstractIOWrapper":
        """Open the file and return an I/O wrapper."""
        raise NotImplementedError

    @property
    def filepath(self) -> pathlib.Path:
        return self._filepath

    @property
    def read_only(self) -> bool:
        """Whether write modes are refused."""
        return self._read_only

    @read_only.setter
    def read_only(self, value: bool) -> None:
        if not isinstance(value, bool):
            message = f"expected type 'bool', got {type(value)} instead"
            raise TypeError(message)

        self._read_only = value

    def __fspath__(self) -> str:
        return str(self._filepath)

    def __str__(self) -> str:
        return str(self._filepath)

    def _open_file(self, mode: str) -> typing.IO:
        """Open the file in text mode.

        Raises:
            ValueError: when `mode` writes and the file is read only.

        """
        if self._read_only and _WRITE_MODES.intersection(mode):
            message = f"{mode!s} mode not allowed when read-only is 'True'"
            raise ValueError(message)

        mode = to_text_file_mode(mode)
        log.debug("opening %s in mode %s", self._filepath, mode)
        return open(
            self._filepath,
            mode=mode,
            encoding=settings.DEFAULT_FILE_ENCODING,
            newline=self._newline,
        )


class AbstractIOWrapper(abc.ABC):
    """Represents an open file of one format; closes on context exit."""

    def __init__(self, __file: typing.IO, /) -> None:
        self._file = __file

    @property
    def closed(self) -> bool:
        return self._file.closed

    def __enter__(self):
        return self

    def __exit__(self, *_) -> None:
        self.close()

    def close(self) -> None:
        self._file.close()
