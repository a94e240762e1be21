# -*- coding: utf-8 -*-
"""Sensitivity Equations.

Forward-mode augmentation of the moment equations with their rotation
derivatives::

    d/dt [X, dX] = [[A, 0], [dA, A]] [X, dX] + [D, dD]

together with the differentiated classical equations. The rotation
variable enters only through the Sagnac shift, so every derivative is
driven by ``dshift``; integrating with ``dshift = 1`` yields derivatives
with respect to ``u = Delta_F / omega_m`` which convert exactly to
per-rad/s derivatives afterwards.

"""

# Standard Library Imports
from typing import Optional

# Third-Party Imports
import numpy as np

# Local Imports
from .classical import _classical_derivative
from .classical import _classical_sensitivity_derivative
from .classical import drive_vector
from .classical import static_detunings
from .drift import STRUCTURE_CONSTANTS
from .drift import STRUCTURE_MATRICES
from .drift import sensitivities_from_array
from .drift import values_from_array
from .states import MOMENT_COUNT
from .states import AugmentedState
from ..model import DerivedRates
from ..model import PhysicalParams
from ..model import derive_rates

__all__ = ["AugmentedSystem", "sensitivity_rhs"]


# Slices of the packed state vector.
AMPS = slice(0, 3)
D_AMPS = slice(3, 6)
MOMENTS = slice(6, 6 + MOMENT_COUNT)
D_MOMENTS = slice(6 + MOMENT_COUNT, 6 + 2 * MOMENT_COUNT)


class AugmentedSystem:
    """Right-hand side of the augmented system for one operating point.

    Args:
        p: Physical parameters.
        omega: Rotation angular velocity (rad/s).
        rates (optional): Precomputed derived rates. Default ``None``.
        dshift (optional): Sensitivity driver; the Sagnac shift per rad/s
            by default, ``1.0`` for derivatives in ``u``. Default ``None``.

    """

    def __init__(
        self,
        p: PhysicalParams,
        omega: float,
        rates: Optional[DerivedRates] = None,
        dshift: Optional[float] = None,
    ) -> None:
        self._params = p
        self._omega = omega
        self._rates = rates or derive_rates(p)
        self._dshift = (
            self._rates.detuning_per_rotation if dshift is None else dshift
        )
        self._drive = drive_vector(p)
        self._thermal = np.zeros(MOMENT_COUNT, dtype=complex)
        self._thermal[2] = p.gamma_m * p.n_bar_m

    @property
    def params(self) -> PhysicalParams:
        """Physical parameters."""
        return self._params

    @property
    def dshift(self) -> float:
        """Sensitivity driver."""
        return self._dshift

    def derivative(self, y: np.ndarray, delta_c: float) -> np.ndarray:
        """Time derivative of a packed augmented state.

        Args:
            y: Packed state vector.
            delta_c: Pump-cavity detuning in force (units of ``omega_m``).

        Returns:
            Packed derivative.

        """
        p = self._params
        g0 = self._rates.g0
        detunings = static_detunings(
            delta_c, self._omega, self._rates.detuning_per_rotation
        )
        amps = y[AMPS]
        d_amps = y[D_AMPS]

        values = values_from_array(amps, p, detunings, g0)
        d_values = sensitivities_from_array(d_amps, g0, self._dshift)
        drift = np.tensordot(values, STRUCTURE_MATRICES, axes=1)
        d_drift = np.tensordot(d_values, STRUCTURE_MATRICES, axes=1)

        result = np.empty_like(y)
        result[AMPS] = _classical_derivative(
            amps, p, detunings, self._drive, g0
        )
        result[D_AMPS] = _classical_sensitivity_derivative(
            amps, d_amps, p, detunings, g0, self._dshift
        )
        result[MOMENTS] = (
            drift @ y[MOMENTS] + values @ STRUCTURE_CONSTANTS + self._thermal
        )
        result[D_MOMENTS] = (
            d_drift @ y[MOMENTS]
            + drift @ y[D_MOMENTS]
            + d_values @ STRUCTURE_CONSTANTS
        )
        return result


def sensitivity_rhs(
    s: AugmentedState,
    p: PhysicalParams,
    delta_c: float,
    omega: Optional[float] = None,
    rates: Optional[DerivedRates] = None,
) -> AugmentedState:
    """Time derivative of the augmented state.

    Args:
        s: Augmented state.
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega (optional): Rotation angular velocity (rad/s). Default
            ``p.rotation``.
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Derivative packed as an augmented state at time ``s.t``.

    """
    omega = p.rotation if omega is None else omega
    system = AugmentedSystem(p, omega, rates)
    values = system.derivative(s.to_vector(), delta_c)
    result = AugmentedState.from_vector(values, s.t)
    return result
