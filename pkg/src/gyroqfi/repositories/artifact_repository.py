# -*- coding: utf-8 -*-
"""Artifact Repository.

Stages tables and JSON documents in memory and writes them to the output
directory on commit. Each file is written next to its destination and
moved into place, so a reader never sees a partial file.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import logging
import os
import pathlib
import typing

# Local Imports
from .abstract_repository import AbstractRepository
from .. import settings
from ..wrappers import CsvFileWrapper
from ..wrappers import DatFileWrapper
from ..wrappers import JsonFileWrapper

__all__ = ["ArtifactRepository", "Document", "Table"]


# Initialize logger.
log = logging.getLogger("gyroqfi")


@dataclasses.dataclass(frozen=True)
class Table:
    """Table written as `.csv`, or as `.dat` for gnuplot.

    Raises:
        ValueError: when the extension is neither or a row has the wrong
            length.

    """

    filename: str
    columns: typing.Sequence[str]
    rows: typing.Sequence[typing.Sequence]

    def __post_init__(self) -> None:
        suffix = pathlib.Path(self.filename).suffix
        if suffix not in (settings.CSV_EXTENSION, settings.DAT_EXTENSION):
            raise ValueError(f"unsupported table extension '{suffix}'")

        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                message = f"row of length {len(row)}, expected {width}"
                raise ValueError(message)

    def write(self, path: pathlib.Path) -> None:
        wrapper_class = (
            DatFileWrapper
            if path.suffix == settings.DAT_EXTENSION
            else CsvFileWrapper
        )
        wrapper = wrapper_class(path, fieldnames=self.columns)
        with wrapper.open("w") as file:
            file.write_header()
            file.write_rows(self.rows)


@dataclasses.dataclass(frozen=True)
class Document:
    """JSON document."""

    filename: str
    payload: typing.Any

    @property
    def rows(self) -> typing.Sequence:
        return ()

    def write(self, path: pathlib.Path) -> None:
        with JsonFileWrapper(path).open("w") as file:
            file.dump(self.payload)


Artifact = typing.Union[Table, Document]


class ArtifactRepository(AbstractRepository[Artifact]):
    """Implements a repository of output files.

    Args:
        directory: Output directory; created on commit.

    """

    def __init__(self, directory: os.PathLike) -> None:
        super().__init__()
        self._directory = pathlib.Path(directory)

    @property
    def directory(self) -> pathlib.Path:
        """Output directory."""
        return self._directory

    def key(self, item: Artifact) -> str:
        return item.filename

    def commit(self) -> typing.List[typing.Tuple[pathlib.Path, int]]:
        """Write every staged artifact.

        Returns:
            Paths written with their row counts.

        """
        self._directory.mkdir(parents=True, exist_ok=True)
        results = []
        for artifact in self.list():
            path = self._directory / artifact.filename
            partial = path.with_name(f".{path.stem}.partial{path.suffix}")
            artifact.write(partial)
            os.replace(partial, path)
            log.info("wrote %s", path)
            results.append((path, len(artifact.rows)))

        self.rollback()
        return results
