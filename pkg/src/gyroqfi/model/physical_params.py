# -*- coding: utf-8 -*-
"""Physical Parameters.

All rates other than the mechanical frequency are stored in units of the
mechanical angular frequency ``omega_m``; time is measured in ``1/omega_m``.
Absolute SI values only enter through the single-photon coupling and the
Sagnac shift.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import enum
import math
from typing import Optional

# Local Imports
from .. import settings

__all__ = ["Mode", "DriveDirection", "OmegaUnit", "PhysicalParams"]


class Mode(str, enum.Enum):
    """Circulation direction of an optical mode."""

    CCW = "ccw"
    CW = "cw"

    @property
    def other(self) -> Mode:
        """Counter-propagating partner."""
        result = Mode.CW if self is Mode.CCW else Mode.CCW
        return result

    @property
    def sign(self) -> int:
        """Sign of the Sagnac shift for clockwise rotation."""
        result = 1 if self is Mode.CCW else -1
        return result


# The drive enters one of the two modes.
DriveDirection = Mode


class OmegaUnit(str, enum.Enum):
    """Unit in which rotation rates are supplied."""

    HZ = "hz"
    RAD_PER_S = "rad_per_s"


@dataclasses.dataclass(frozen=True)
class PhysicalParams:
    """Device constants and operating point.

    Args:
        refractive_index: Refractive index.
        mass: Resonator mass (kg).
        radius: Resonator radius (m).
        wavelength: Pump wavelength (m).
        omega_m: Mechanical angular frequency (rad/s).
        kappa: Cavity amplitude decay rate (units of ``omega_m``).
        gamma_m: Mechanical decay rate (units of ``omega_m``).
        j_coupling: Backscattering coupling (units of ``omega_m``).
        epsilon: Drive amplitude (units of ``omega_m``).
        n_bar_m: Thermal phonon occupation.
        delta_c: Pump-cavity detuning (units of ``omega_m``).
        drive_direction: Driven optical mode.
        rotation: Rotation angular velocity (rad/s, clockwise positive).
        g0_override (optional): Single-photon coupling in units of
            ``omega_m`` replacing the derived value. Default ``None``.
        sagnac_slope_override (optional): Sagnac slope replacing
            ``n R omega_c / c``. Default ``None``.

    Raises:
        ValueError: when a value violates its bound.

    """

    refractive_index: float = settings.DEFAULT_REFRACTIVE_INDEX
    mass: float = settings.DEFAULT_MASS
    radius: float = settings.DEFAULT_RADIUS
    wavelength: float = settings.DEFAULT_WAVELENGTH
    omega_m: float = settings.DEFAULT_OMEGA_M
    kappa: float = settings.DEFAULT_KAPPA
    gamma_m: float = settings.DEFAULT_GAMMA_M
    j_coupling: float = settings.DEFAULT_J
    epsilon: float = settings.DEFAULT_EPSILON
    n_bar_m: float = settings.DEFAULT_N_BAR_M
    delta_c: float = settings.DEFAULT_DELTA_C
    drive_direction: Mode = Mode.CCW
    rotation: float = 0.0
    g0_override: Optional[float] = None
    sagnac_slope_override: Optional[float] = None

    def __post_init__(self) -> None:
        if not isinstance(self.drive_direction, Mode):
            object.__setattr__(
                self, "drive_direction", Mode(self.drive_direction)
            )

        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if field.name == "drive_direction" or value is None:
                continue

            if isinstance(value, bool) or not isinstance(value, (int, float)):
                message = f"expected type 'float', got {type(value)} instead"
                raise TypeError(message)

            if not math.isfinite(value):
                raise ValueError(f"{field.name} must be finite, got {value}")

        for name in ("refractive_index", "mass", "radius", "wavelength"):
            _raise_for_non_positive(name, getattr(self, name))

        for name in ("omega_m", "kappa", "gamma_m"):
            _raise_for_non_positive(name, getattr(self, name))

        if self.n_bar_m < 0:
            raise ValueError(f"n_bar_m must be >= 0, got {self.n_bar_m}")

        if self.g0_override is not None and self.g0_override < 0:
            raise ValueError("g0_override must be >= 0")

        if self.sagnac_slope_override is not None:
            if self.sagnac_slope_override < 0:
                raise ValueError("sagnac_slope_override must be >= 0")

        omega_c = 2.0 * math.pi * settings.SPEED_OF_LIGHT / self.wavelength
        if omega_c < 100.0 * self.omega_m:
            message = (
                f"optical frequency {omega_c:.3e} rad/s is not much larger "
                f"than omega_m {self.omega_m:.3e} rad/s"
            )
            raise ValueError(message)

    @property
    def driven_mode(self) -> Mode:
        """Optical mode receiving the pump."""
        return self.drive_direction

    def replace(self, **changes) -> PhysicalParams:
        """Return a copy with the given fields replaced."""
        result = dataclasses.replace(self, **changes)
        return result

    def to_dict(self) -> dict:
        """Serialize to a flat dictionary."""
        result = dataclasses.asdict(self)
        result["drive_direction"] = self.drive_direction.value
        return result


def _raise_for_non_positive(name: str, value: float) -> None:
    if value <= 0:
        raise ValueError(f"{name} must be > 0, got {value}")
