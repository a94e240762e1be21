# -*- coding: utf-8 -*-
"""Output Unit of Work.

Collects the tables and results of one command and commits them together
with the run manifest.

"""

# Standard Library Imports
from __future__ import annotations
import logging
import os
import pathlib
import subprocess
import time
from typing import Any
from typing import Dict
from typing import Generator
from typing import Optional
from typing import Sequence

# Local Imports
from .abstract_unit_of_work import AbstractUnitOfWork
from .. import __release__
from .. import settings
from ..messages import BaseEvent
from ..messages import OutputWritten
from ..messages import RunCompleted
from ..queue import MessageQueue
from ..repositories import ArtifactRepository
from ..repositories import Document
from ..repositories import Table

__all__ = ["OutputUnitOfWork", "git_revision"]


# Initialize logger.
log = logging.getLogger("gyroqfi")


def git_revision(cwd: Optional[os.PathLike] = None) -> str:
    """Current git revision; ``unknown`` when git is unavailable."""
    try:
        completed = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            cwd=cwd,
            capture_output=True,
            text=True,
            timeout=5,
            check=False,
        )
    except (OSError, subprocess.SubprocessError):
        return "unknown"

    revision = completed.stdout.strip()
    result = revision if completed.returncode == 0 and revision else "unknown"
    return result


class OutputUnitOfWork(AbstractUnitOfWork):
    """Implements the unit of work of one command.

    Args:
        output_dir: Output directory.
        auto_commit (optional): Commit when the context exits cleanly.
            Default ``False``.

    Attributes:
        artifacts: Staged output files.
        events: Events raised by commits.

    """

    def __init__(
        self, output_dir: os.PathLike, auto_commit: bool = False
    ) -> None:
        self.auto_commit = auto_commit
        self.artifacts = ArtifactRepository(output_dir)
        self._events = MessageQueue()
        self._run: Dict[str, Any] = {}
        self._results: Dict[str, Any] = {}
        self._started = time.perf_counter()

    @property
    def output_dir(self) -> pathlib.Path:
        """Output directory."""
        return self.artifacts.directory

    @property
    def events(self) -> MessageQueue:
        """Event queue."""
        return self._events

    def __enter__(self) -> OutputUnitOfWork:
        self._started = time.perf_counter()
        super().__enter__()
        return self

    def begin(self, run: Dict[str, Any]) -> None:
        """Record the run description for the manifest."""
        self._run = dict(run)
        self._results = {}

    def add_table(
        self,
        stem: str,
        columns: Sequence[str],
        rows: Sequence[Sequence],
    ) -> None:
        """Stage `stem`.csv."""
        table = Table(stem + settings.CSV_EXTENSION, list(columns), rows)
        self.artifacts.add(table)

    def add_curve(
        self, stem: str, columns: Sequence[str], rows: Sequence[Sequence]
    ) -> None:
        """Stage a gnuplot `stem`.dat file of two columns."""
        if len(columns) != 2:
            raise ValueError(f"curves have 2 columns, got {len(columns)}")

        table = Table(stem + settings.DAT_EXTENSION, list(columns), rows)
        self.artifacts.add(table)

    def add_document(self, stem: str, payload: Any) -> None:
        """Stage `stem`.json."""
        self.artifacts.add(Document(stem + settings.JSON_EXTENSION, payload))

    def record(self, **results: Any) -> None:
        """Add summary values to the manifest."""
        self._results.update(results)

    @property
    def wall_time(self) -> float:
        """Seconds since the unit of work was entered."""
        return time.perf_counter() - self._started

    def manifest(self, outputs: Sequence[str]) -> Dict[str, Any]:
        """Manifest of the committed outputs."""
        result = {
            **self._run,
            "version": __release__,
            "git_revision": git_revision(),
            "wall_time_s": self.wall_time,
            "outputs": list(outputs),
            "results": self._results,
        }
        return result

    def commit(self) -> None:
        """Write staged outputs followed by the manifest."""
        written = self.artifacts.commit()
        manifest = Document(
            settings.MANIFEST_FILENAME,
            self.manifest([path.name for path, _ in written]),
        )
        self.artifacts.add(manifest)
        written.extend(self.artifacts.commit())
        for path, rows in written:
            self._events.append(OutputWritten(path=path, rows=rows))
        self._events.append(
            RunCompleted(
                command=self._run.get("command", ""),
                output_dir=self.output_dir,
                wall_time=self.wall_time,
            )
        )

    def rollback(self) -> None:
        """Discard staged outputs."""
        self.artifacts.rollback()

    def collect_events(self) -> Generator[BaseEvent, None, None]:
        """Yield events raised since the last collection."""
        while self._events:
            yield self._events.popleft()
