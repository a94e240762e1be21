# -*- coding: utf-8 -*-
"""Derived Rates.

Closed-form parameter derivations: optical frequency, single-photon
optomechanical coupling, Sagnac shift and thermal occupation.

The Sagnac convention is ``omega_ccw = omega_c + Delta_F`` and
``omega_cw = omega_c - Delta_F`` with ``Delta_F = Omega n R omega_c / c``,
so clockwise rotation (``Omega > 0``) raises the counterclockwise mode.

"""

# Standard Library Imports
import dataclasses
import math
from typing import Tuple
from typing import Union

# Local Imports
from .physical_params import Mode
from .physical_params import OmegaUnit
from .physical_params import PhysicalParams
from .. import settings

__all__ = [
    "DerivedRates",
    "derive_rates",
    "effective_static_detunings",
    "optical_frequency",
    "rotation_from_input",
    "sagnac_shift",
    "sagnac_slope",
    "single_photon_coupling",
    "thermal_occupation",
    "to_ratio",
    "to_si",
]


@dataclasses.dataclass(frozen=True)
class DerivedRates:
    """Quantities derived from the device constants.

    Attributes:
        omega_c: Optical angular frequency (rad/s).
        g0: Single-photon coupling (units of ``omega_m``).
        sagnac_slope: Dimensionless ratio ``n R omega_c / c``.
        detuning_per_rotation: Sagnac shift per rad/s of rotation
            (units of ``omega_m`` per rad/s).

    """

    omega_c: float
    g0: float
    sagnac_slope: float
    detuning_per_rotation: float


def optical_frequency(p: PhysicalParams) -> float:
    """Optical angular frequency ``2 pi c / lambda`` in rad/s."""
    result = 2.0 * math.pi * settings.SPEED_OF_LIGHT / p.wavelength
    return result


def single_photon_coupling(p: PhysicalParams) -> float:
    """Single-photon coupling ``(omega_c / R) sqrt(hbar / (m omega_m))``.

    Args:
        p: Physical parameters.

    Returns:
        Coupling in units of ``omega_m``.

    """
    if p.g0_override is not None:
        return float(p.g0_override)

    zero_point = math.sqrt(settings.HBAR / (p.mass * p.omega_m))
    g0_si = optical_frequency(p) / p.radius * zero_point
    result = g0_si / p.omega_m
    return result


def sagnac_slope(p: PhysicalParams) -> float:
    """Dimensionless Sagnac slope ``n R omega_c / c``."""
    if p.sagnac_slope_override is not None:
        return float(p.sagnac_slope_override)

    result = (
        p.refractive_index
        * p.radius
        * optical_frequency(p)
        / settings.SPEED_OF_LIGHT
    )
    return result


def derive_rates(p: PhysicalParams) -> DerivedRates:
    """Bundle the derived rates of a parameter set.

    Args:
        p: Physical parameters.

    Returns:
        Derived rates.

    """
    slope = sagnac_slope(p)
    result = DerivedRates(
        omega_c=optical_frequency(p),
        g0=single_photon_coupling(p),
        sagnac_slope=slope,
        detuning_per_rotation=slope / p.omega_m,
    )
    return result


def sagnac_shift(p: PhysicalParams, omega: float, mode: Mode) -> float:
    """Sagnac frequency shift of one optical mode.

    Args:
        p: Physical parameters.
        omega: Rotation angular velocity (rad/s, clockwise positive).
        mode: Optical mode.

    Returns:
        Signed shift in units of ``omega_m``.

    """
    result = Mode(mode).sign * omega * sagnac_slope(p) / p.omega_m
    return result


def effective_static_detunings(p: PhysicalParams) -> Tuple[float, float]:
    """Static mode detunings ``Delta_j = Delta_c +/- Delta_F``.

    The optomechanical back-action correction is applied dynamically.

    Args:
        p: Physical parameters.

    Returns:
        Detunings of the counterclockwise and clockwise modes.

    """
    delta_ccw = p.delta_c + sagnac_shift(p, p.rotation, Mode.CCW)
    delta_cw = p.delta_c + sagnac_shift(p, p.rotation, Mode.CW)
    return delta_ccw, delta_cw


def thermal_occupation(omega_m: float, temperature: float) -> float:
    """Bose-Einstein occupation of the mechanical mode.

    Args:
        omega_m: Mechanical angular frequency (rad/s).
        temperature: Bath temperature (K).

    Returns:
        Mean phonon number.

    Raises:
        ValueError: when `temperature` is negative.

    """
    if temperature < 0:
        raise ValueError(f"temperature must be >= 0, got {temperature}")

    if temperature == 0:
        return 0.0

    exponent = settings.HBAR * omega_m / (settings.BOLTZMANN * temperature)
    result = 1.0 / math.expm1(exponent)
    return result


def rotation_from_input(
    value: float, unit: Union[OmegaUnit, str] = OmegaUnit.HZ
) -> float:
    """Convert a user-supplied rotation rate to rad/s.

    Args:
        value: Rotation rate.
        unit (optional): Unit of `value`. Default ``hz``.

    Returns:
        Angular velocity in rad/s.

    """
    unit = OmegaUnit(unit)
    result = 2.0 * math.pi * value if unit is OmegaUnit.HZ else float(value)
    return result


def to_si(rate: float, omega_m: float) -> float:
    """Convert a rate in units of ``omega_m`` to rad/s."""
    return rate * omega_m


def to_ratio(rate: float, omega_m: float) -> float:
    """Convert a rate in rad/s to units of ``omega_m``."""
    return rate / omega_m
