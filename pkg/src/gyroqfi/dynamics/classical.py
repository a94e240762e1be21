# -*- coding: utf-8 -*-
"""Classical Amplitude Equations.

Mean-field equations of the two counter-propagating optical modes and the
mechanical breathing mode, in units where ``omega_m = 1``::

    d(alpha_j)/dt = -(i Dt_j + kappa/2) alpha_j - i J alpha_j' + eps_j
    d(beta)/dt = -(i + gamma_m/2) beta + i g0 (|alpha_ccw|^2 + |alpha_cw|^2)

with ``Dt_j = Delta_j - 2 g0 Re(beta)``.

"""

# Standard Library Imports
from typing import Optional
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .states import ClassicalAmplitudes
from ..model import DerivedRates
from ..model import Mode
from ..model import PhysicalParams
from ..model import derive_rates

__all__ = [
    "classical_rhs",
    "classical_sensitivity_rhs",
    "drive_vector",
    "linear_cavity_steady_state",
    "static_detunings",
]


# Signs of the Sagnac shift for (ccw, cw).
MODE_SIGNS = np.array([Mode.CCW.sign, Mode.CW.sign], dtype=float)


def drive_vector(p: PhysicalParams) -> np.ndarray:
    """Drive amplitudes ``(eps_ccw, eps_cw)``; only the driven mode is fed."""
    result = np.zeros(2, dtype=complex)
    result[0 if p.drive_direction is Mode.CCW else 1] = p.epsilon
    return result


def static_detunings(
    delta_c: float, omega: float, dshift: float
) -> np.ndarray:
    """Static detunings ``Delta_c +/- Omega dshift`` of (ccw, cw)."""
    result = delta_c + MODE_SIGNS * omega * dshift
    return result


def _classical_derivative(
    y: np.ndarray,
    p: PhysicalParams,
    detunings: np.ndarray,
    drive: np.ndarray,
    g0: float,
) -> np.ndarray:
    alpha = y[0:2]
    beta = y[2]
    shifted = detunings - 2.0 * g0 * beta.real
    d_alpha = (
        -(1j * shifted + 0.5 * p.kappa) * alpha
        - 1j * p.j_coupling * alpha[::-1]
        + drive
    )
    d_beta = -(1j + 0.5 * p.gamma_m) * beta + 1j * g0 * np.sum(
        np.abs(alpha) ** 2
    )
    result = np.empty(3, dtype=complex)
    result[0:2] = d_alpha
    result[2] = d_beta
    return result


def _classical_sensitivity_derivative(
    y: np.ndarray,
    dy: np.ndarray,
    p: PhysicalParams,
    detunings: np.ndarray,
    g0: float,
    dshift: float,
) -> np.ndarray:
    alpha = y[0:2]
    beta = y[2]
    d_alpha = dy[0:2]
    d_beta = dy[2]
    shifted = detunings - 2.0 * g0 * beta.real
    d_shifted = MODE_SIGNS * dshift - 2.0 * g0 * d_beta.real
    result = np.empty(3, dtype=complex)
    result[0:2] = (
        -(1j * shifted + 0.5 * p.kappa) * d_alpha
        - 1j * d_shifted * alpha
        - 1j * p.j_coupling * d_alpha[::-1]
    )
    result[2] = -(1j + 0.5 * p.gamma_m) * d_beta + 2j * g0 * np.sum(
        (np.conj(alpha) * d_alpha).real
    )
    return result


def classical_rhs(
    amps: ClassicalAmplitudes,
    p: PhysicalParams,
    delta_c: float,
    omega: float,
    rates: Optional[DerivedRates] = None,
) -> ClassicalAmplitudes:
    """Time derivative of the classical amplitudes.

    Args:
        amps: Classical amplitudes.
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega: Rotation angular velocity (rad/s).
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Derivatives packed as amplitudes.

    """
    rates = rates or derive_rates(p)
    detunings = static_detunings(delta_c, omega, rates.detuning_per_rotation)
    values = _classical_derivative(
        amps.to_array(), p, detunings, drive_vector(p), rates.g0
    )
    result = ClassicalAmplitudes.from_array(values)
    return result


def classical_sensitivity_rhs(
    amps: ClassicalAmplitudes,
    d_amps: ClassicalAmplitudes,
    p: PhysicalParams,
    delta_c: float,
    omega: float,
    rates: Optional[DerivedRates] = None,
) -> ClassicalAmplitudes:
    """Time derivative of the rotation sensitivities of the amplitudes.

    Args:
        amps: Classical amplitudes.
        d_amps: Amplitude sensitivities (per rad/s).
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega: Rotation angular velocity (rad/s).
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Derivatives packed as amplitudes.

    """
    rates = rates or derive_rates(p)
    dshift = rates.detuning_per_rotation
    detunings = static_detunings(delta_c, omega, dshift)
    values = _classical_sensitivity_derivative(
        amps.to_array(), d_amps.to_array(), p, detunings, rates.g0, dshift
    )
    result = ClassicalAmplitudes.from_array(values)
    return result


def linear_cavity_steady_state(
    p: PhysicalParams, rates: Optional[DerivedRates] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Closed-form steady state of the optical modes without optomechanics.

    Solves ``M alpha = eps`` with
    ``M = [[i Delta_ccw + kappa/2, i J], [i J, i Delta_cw + kappa/2]]``
    and differentiates it in the rotation rate.

    Args:
        p: Physical parameters; the coupling ``g0`` is ignored.
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Optical amplitudes ``(alpha_ccw, alpha_cw)`` and their
        sensitivities per rad/s.

    """
    rates = rates or derive_rates(p)
    dshift = rates.detuning_per_rotation
    detunings = static_detunings(p.delta_c, p.rotation, dshift)
    matrix = np.diag(1j * detunings + 0.5 * p.kappa).astype(complex)
    matrix[0, 1] = matrix[1, 0] = 1j * p.j_coupling
    alpha = np.linalg.solve(matrix, drive_vector(p))
    d_matrix = np.diag(1j * MODE_SIGNS * dshift).astype(complex)
    d_alpha = -np.linalg.solve(matrix, d_matrix @ alpha)
    return alpha, d_alpha
