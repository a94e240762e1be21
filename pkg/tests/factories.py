# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import pathlib
from typing import Any
from typing import List

# Third-Party Imports
import numpy as np

# Local Imports
from gyroqfi import messages
from gyroqfi.config import RunConfig
from gyroqfi.metrology import GaussianState
from gyroqfi.model import PhysicalParams
from gyroqfi.model import rotation_from_input

# Rotation rate used throughout the tests (2 kHz).
OMEGA = rotation_from_input(2000.0)


def make_params(**changes: Any) -> PhysicalParams:
    """Make physical parameters.

    Defaults to a weak drive and a small rotation so that short runs stay
    well resolved.

    Args:
        **changes: Fields to replace.

    Returns:
        Physical parameters.

    """
    values = {"epsilon": 50.0, "rotation": OMEGA}
    values.update(changes)
    result = PhysicalParams(**values)
    return result


def make_run(
    command: str, output_dir: pathlib.Path, *overrides: str, **kwargs: Any
) -> RunConfig:
    """Make a run configuration from overrides only.

    Args:
        command: Command name.
        output_dir: Output directory.
        *overrides: ``key=value`` overrides.
        **kwargs: Further fields of the run configuration.

    Returns:
        Run configuration.

    """
    result = RunConfig.from_files(
        command, output_dir, None, overrides, **kwargs
    )
    return result


def make_coherent_state(d_sens: complex = 1.0) -> GaussianState:
    """Make a vacuum-noise state whose first mode moves with rotation."""
    block = np.eye(2, dtype=complex)
    result = GaussianState.from_blocks(
        np.array([3.0, 0.0], dtype=complex),
        block,
        np.zeros((2, 2), dtype=complex),
        np.array([d_sens, 0.0], dtype=complex),
        np.zeros((2, 2), dtype=complex),
        np.zeros((2, 2), dtype=complex),
    )
    return result


def make_thermal_state(n_bar: float, dn_bar: float) -> GaussianState:
    """Make a two-mode thermal state whose occupation moves with rotation.

    Args:
        n_bar: Occupation of each mode.
        dn_bar: Derivative of the occupation.

    Returns:
        Gaussian state with ``sigma = (2 n_bar + 1) I``.

    """
    block = (2.0 * n_bar + 1.0) * np.eye(2, dtype=complex)
    result = GaussianState.from_blocks(
        np.zeros(2, dtype=complex),
        block,
        np.zeros((2, 2), dtype=complex),
        np.zeros(2, dtype=complex),
        2.0 * dn_bar * np.eye(2, dtype=complex),
        np.zeros((2, 2), dtype=complex),
    )
    return result


def make_messages(n: int) -> List[messages.BaseMessage]:
    """Make messages.

    Args:
        n: Number of messages.

    Returns:
        Messages in creation order.

    """
    results = [messages.BaseMessage() for _ in range(n)]
    return results
