# -*- coding: utf-8 -*-
"""Sweep Specification."""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import enum
from typing import Optional
from typing import Sequence
from typing import Tuple

# Local Imports
from .. import settings
from ..errors import ConfigError
from ..metrology import DisplacementFrame
from ..model import Mode
from ..model import PhysicalParams

__all__ = ["Observable", "SweepAxis", "SweepSpec"]


class SweepAxis(str, enum.Enum):
    """Swept quantity."""

    TIME = "time"
    DETUNING = "detuning"
    EPSILON = "epsilon"
    OMEGA = "omega"


class Observable(str, enum.Enum):
    """Reported observable."""

    QFI = "qfi"
    DELTA_OMEGA = "delta_omega"
    N_PHOTONS = "n_photons"
    N_PHONONS = "n_phonons"


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    """Fully specified study.

    Args:
        axis: Swept quantity.
        values: Swept values; sample times for ``time``, detunings in
            units of ``omega_m``, drive amplitudes in units of
            ``omega_m`` or rotation rates in rad/s. Sorted on creation.
        params: Physical parameters of every point.
        directions (optional): Driven modes. Default the direction of
            `params`.
        omegas (optional): Rotation rates (rad/s). Default the rotation
            of `params`.
        epsilons (optional): Drive amplitudes of dynamics runs. Default
            the amplitude of `params`.
        outputs (optional): Reported observables. Default all.
        tol (optional): Integrator tolerance. Default ``1e-8``.
        frame (optional): Displacement frame. Default ``output``.
        cold_start (optional): Start the mechanics in its ground state.
            Default ``False``.
        threads (optional): Width of the parallel map. Default ``1``.
        omega_grid (optional): Rotation grid of baselines (rad/s).
            Default ``None`` for the environment default.
        n_steps (optional): Baseline episode length. Default ``10``.
        dtau (optional): Baseline step duration. Default ``2.0``.
        action_bounds (optional): Baseline detuning bounds. Default
            ``(-1.5, 1.5)``.

    Raises:
        ConfigError: when `values` is empty or a field is out of range.

    """

    axis: SweepAxis
    values: Tuple[float, ...]
    params: PhysicalParams = dataclasses.field(default_factory=PhysicalParams)
    directions: Tuple[Mode, ...] = ()
    omegas: Tuple[float, ...] = ()
    epsilons: Tuple[float, ...] = ()
    outputs: Tuple[Observable, ...] = tuple(Observable)
    tol: float = settings.DEFAULT_TOLERANCE
    frame: DisplacementFrame = DisplacementFrame.OUTPUT
    cold_start: bool = False
    threads: int = 1
    omega_grid: Optional[Tuple[float, ...]] = None
    n_steps: int = settings.DEFAULT_EPISODE_STEPS
    dtau: float = settings.DEFAULT_STEP_DURATION
    action_bounds: Tuple[float, float] = settings.DEFAULT_ACTION_BOUNDS

    def __post_init__(self) -> None:
        set_ = object.__setattr__
        set_(self, "axis", SweepAxis(self.axis))
        values = tuple(sorted(float(value) for value in self.values))
        if not values:
            raise ConfigError(f"{self.axis.value} sweep needs values")

        if self.axis is SweepAxis.TIME and (values[0] < 0 or values[-1] <= 0):
            raise ConfigError("sample times must be >= 0 and end after 0")

        set_(self, "values", values)
        set_(
            self,
            "directions",
            _unique(
                [Mode(d) for d in self.directions]
                or [self.params.drive_direction]
            ),
        )
        set_(
            self,
            "omegas",
            tuple(float(w) for w in self.omegas) or (self.params.rotation,),
        )
        set_(
            self,
            "epsilons",
            tuple(float(e) for e in self.epsilons) or (self.params.epsilon,),
        )
        set_(self, "outputs", _unique([Observable(o) for o in self.outputs]))
        set_(self, "frame", DisplacementFrame(self.frame))
        if self.omega_grid is not None:
            set_(self, "omega_grid", tuple(float(w) for w in self.omega_grid))

        if not isinstance(self.threads, int) or self.threads < 1:
            message = f"threads must be a positive integer, got {self.threads}"
            raise ConfigError(message)

        low, high = self.action_bounds
        if self.axis is SweepAxis.DETUNING and not low < high:
            raise ConfigError(f"invalid action bounds {self.action_bounds}")

    @property
    def t_end(self) -> float:
        """Final time of a dynamics run."""
        return self.values[-1]

    def replace(self, **changes) -> SweepSpec:
        """Return a copy with the given fields replaced."""
        result = dataclasses.replace(self, **changes)
        return result


def _unique(items: Sequence) -> tuple:
    result = tuple(dict.fromkeys(items))
    return result
