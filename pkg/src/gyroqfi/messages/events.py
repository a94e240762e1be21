# -*- coding: utf-8 -*-
"""Events."""

# Standard Library Imports
import dataclasses
import pathlib

# Local Imports
from .message import BaseEvent

__all__ = ["OutputWritten", "RunCompleted"]


@dataclasses.dataclass(frozen=True, eq=False)
class OutputWritten(BaseEvent):
    """An output file was committed."""

    path: pathlib.Path
    rows: int = 0


@dataclasses.dataclass(frozen=True, eq=False)
class RunCompleted(BaseEvent):
    """A command finished and its outputs are committed."""

    command: str
    output_dir: pathlib.Path
    wall_time: float
