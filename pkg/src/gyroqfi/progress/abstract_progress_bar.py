# -*- coding: utf-8 -*-
"""Abstract Progress Bar.

Sweeps, training loops and the selftest report progress through this
interface; they default to the silent bar so library calls stay quiet.

"""

# Standard Library Imports
from __future__ import annotations
import abc
import importlib.util
from typing import Dict
from typing import Optional

__all__ = ["AbstractProgressBar", "NullProgressBar", "make_progress_bar"]


class AbstractProgressBar(abc.ABC):
    """Represents progress over sweep points, checks or iterations."""

    @abc.abstractmethod
    def update(self, n: int = 1) -> None:
        """Advance by `n` steps."""
        raise NotImplementedError

    def set_postfix(self, **values: float) -> None:
        """Show the latest metrics next to the bar."""

    def close(self) -> None:
        """Release the display."""


class NullProgressBar(AbstractProgressBar):
    """Counts steps and keeps the latest metrics without displaying them.

    Args:
        total (optional): Expected number of steps. Default ``None``.

    """

    def __init__(self, total: Optional[int] = None) -> None:
        self.total = total
        self.steps = 0
        self.postfix: Dict[str, float] = {}

    def update(self, n: int = 1) -> None:
        self.steps += n

    def set_postfix(self, **values: float) -> None:
        self.postfix = dict(values)


def make_progress_bar(
    desc: str, total: Optional[int] = None, enabled: bool = True
) -> AbstractProgressBar:
    """Return a tqdm bar when tqdm is installed and `enabled` is set."""
    if not enabled or importlib.util.find_spec("tqdm") is None:
        return NullProgressBar(total)

    from .tqdm_progress_bar import TqdmProgressBar

    return TqdmProgressBar(desc, total)
