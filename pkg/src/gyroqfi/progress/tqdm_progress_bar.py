# -*- coding: utf-8 -*-
"""Tqdm Progress Bar."""

# Standard Library Imports
from typing import Optional

# Third-Party Imports
from tqdm import tqdm

# Local Imports
from .abstract_progress_bar import AbstractProgressBar

__all__ = ["TqdmProgressBar"]


class TqdmProgressBar(AbstractProgressBar):
    """Implements a tqdm bar on standard error that disappears on close.

    Args:
        desc: Label shown before the bar.
        total (optional): Expected number of steps. Default ``None``.

    """

    def __init__(self, desc: str, total: Optional[int] = None) -> None:
        self._bar = tqdm(desc=desc, total=total, leave=False, miniters=1)

    def update(self, n: int = 1) -> None:
        self._bar.update(n)

    def set_postfix(self, **values: float) -> None:
        self._bar.set_postfix(
            {name: f"{value:.4g}" for name, value in values.items()},
            refresh=False,
        )

    def close(self) -> None:
        self._bar.close()
