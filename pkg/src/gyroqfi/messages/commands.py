# -*- coding: utf-8 -*-
"""Commands.

One command per command-line subcommand. Each carries the resolved run
configuration plus the options specific to it.

"""

# Standard Library Imports
import dataclasses
import pathlib
from typing import Optional

# Local Imports
from .message import BaseCommand
from ..config import RunConfig
from ..experiments import SweepAxis

__all__ = [
    "CheckOracle",
    "EvaluatePolicy",
    "RunBaseline",
    "RunScaling",
    "RunSelftest",
    "RunSimulation",
    "RunSweep",
    "TrainPolicy",
]


@dataclasses.dataclass(frozen=True, eq=False)
class RunSimulation(BaseCommand):
    """Integrate the dynamics and record the Fisher information."""

    run: RunConfig


@dataclasses.dataclass(frozen=True, eq=False)
class RunSweep(BaseCommand):
    """Sweep the steady state over detuning or rotation rate."""

    run: RunConfig
    axis: SweepAxis = SweepAxis.DETUNING


@dataclasses.dataclass(frozen=True, eq=False)
class RunScaling(BaseCommand):
    """Sweep the steady state over drive amplitudes."""

    run: RunConfig


@dataclasses.dataclass(frozen=True, eq=False)
class RunBaseline(BaseCommand):
    """Play constant-detuning episodes."""

    run: RunConfig


@dataclasses.dataclass(frozen=True, eq=False)
class TrainPolicy(BaseCommand):
    """Train a detuning policy."""

    run: RunConfig
    iterations: Optional[int] = None
    show_progress: bool = False


@dataclasses.dataclass(frozen=True, eq=False)
class EvaluatePolicy(BaseCommand):
    """Play one deterministic episode of a saved policy."""

    run: RunConfig
    snapshot: pathlib.Path


@dataclasses.dataclass(frozen=True, eq=False)
class CheckOracle(BaseCommand):
    """Compare the moment solver with the density-matrix integrator."""

    run: RunConfig


@dataclasses.dataclass(frozen=True, eq=False)
class RunSelftest(BaseCommand):
    """Run the built-in consistency checks."""

    run: RunConfig
    include_slow: bool = False
