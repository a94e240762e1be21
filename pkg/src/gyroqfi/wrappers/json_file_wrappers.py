# -*- coding: utf-8 -*-
"""JSON File Wrappers.

Parameter files may carry ``//`` and ``#`` line comments outside string
literals; they are stripped before parsing.

"""

# Standard Library Imports
from __future__ import annotations
import json
import os
import re
import typing

# Local Imports
from .abstract_file_wrappers import AbstractFileWrapper
from .abstract_file_wrappers import AbstractIOWrapper
from .. import settings

__all__ = ["JsonFileWrapper", "JsonIOWrapper", "strip_comments"]


# String literals are matched first so comment markers inside them survive.
COMMENT_PATTERN = re.compile(r'("(?:\\.|[^"\\])*")|(?://|#)[^\n]*')


def _to_builtin(__obj: typing.Any, /) -> typing.Any:
    # numpy scalars and arrays
    if hasattr(__obj, "tolist"):
        return __obj.tolist()

    raise TypeError(f"{type(__obj)} is not JSON serializable")


def strip_comments(__text: str, /) -> str:
    """Remove ``//`` and ``#`` line comments from JSON text."""
    result = COMMENT_PATTERN.sub(lambda match: match.group(1) or "", __text)
    return result


class JsonFileWrapper(AbstractFileWrapper):
    """Implements a wrapper for `.json` files.

    Args:
        filepath: Path to `.json` file.
        indent (optional): Indent. Default ``2``.
        read_only (optional): Whether file is read only. Default ``False``.

    Raises:
        ValueError: when `filepath` is not a `.json` file.

    """

    def __init__(
        self,
        filepath: os.PathLike,
        *,
        indent: typing.Optional[int] = settings.DEFAULT_JSON_INDENT,
        read_only: bool = False,
    ) -> None:
        super().__init__(filepath, read_only=read_only)
        self._indent = indent

    @property
    def extension(self) -> str:
        """File extension."""
        return settings.JSON_EXTENSION

    @property
    def indent(self) -> typing.Optional[int]:
        """Indent."""
        return self._indent

    def open(self, mode: str = "r") -> JsonIOWrapper:
        """Open the `.json` file and return a file object.

        Args:
            mode (optional): Mode. Default ``r``.

        Returns:
            File object.

        """
        result = JsonIOWrapper(self._open_file(mode), indent=self._indent)
        return result


class JsonIOWrapper(AbstractIOWrapper):
    """Implements an I/O wrapper for `.json` files."""

    def __init__(
        self, __file: typing.IO, /, indent: typing.Optional[int] = None
    ) -> None:
        super().__init__(__file)
        self._indent = indent

    def dump(self, obj: typing.Any) -> None:
        """Serialize `obj` to file."""
        json.dump(
            obj,
            self._file,
            indent=self._indent,
            sort_keys=False,
            default=_to_builtin,
        )
        self._file.write("\n")

    def load(self) -> typing.Any:
        """Deserialize contents of file, ignoring line comments.

        Raises:
            json.JSONDecodeError: when the text is not valid JSON.

        """
        result = json.loads(strip_comments(self._file.read()))
        return result
