# -*- coding: utf-8 -*-
"""Output File Names."""

# Standard Library Imports
import re

__all__ = ["output_stem", "slugify"]


def slugify(__value: str, /) -> str:
    """Reduce `__value` to characters safe in file names."""
    result = re.sub(r"[^A-Za-z0-9.+-]+", "_", __value).strip("_")
    return result


def output_stem(stem: str, drive: str, epsilon: float) -> str:
    """File stem of one simulation output.

    Example:
        >>> output_stem("fig2", "ccw", 6000.0)
        'fig2_ccw_eps6000'

    """
    result = slugify(f"{stem}_{drive}_eps{epsilon:g}")
    return result
