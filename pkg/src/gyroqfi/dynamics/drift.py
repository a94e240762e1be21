# -*- coding: utf-8 -*-
"""Drift Matrix.

The second-moment equations ``dX/dt = A X + D`` follow from the linear
Langevin equations ``dv/dt = L v`` of the fluctuation operators
``v = (a_ccw, a_cw, b, a_ccw^dag, a_cw^dag, b^dag)``::

    d<v_p v_q>/dt = sum_r L[p, r] <v_r v_q> + sum_r L[q, r] <v_p v_r>

``L`` is linear in ten scalar symbols (decay rates, detunings, the
backscattering coupling and the enhanced couplings ``G_j = g0 alpha_j``
with their conjugates). Each symbol's contribution to ``A`` and ``D`` is
tabulated once at import; assembling ``A`` is then a weighted sum, and so
is its rotation derivative.

Products such as ``<a a^dag>`` are reordered to ``<a^dag a> + 1``; the
commutator constants make up ``D`` together with the thermal term
``gamma_m n_bar_m``.

"""

# Standard Library Imports
from typing import Dict
from typing import Optional
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .classical import MODE_SIGNS
from .classical import static_detunings
from .states import ClassicalAmplitudes
from .states import MOMENT_COUNT
from .states import MOMENT_PAIRS
from ..model import DerivedRates
from ..model import PhysicalParams
from ..model import derive_rates

__all__ = [
    "SYMBOLS",
    "build_drift_matrix",
    "build_drift_sensitivity",
    "build_inhomogeneous",
    "build_inhomogeneous_sensitivity",
    "symbol_sensitivities",
    "symbol_values",
    "sensitivities_from_array",
    "values_from_array",
]


SYMBOLS = (
    "kappa",
    "gamma_m",
    "omega_m",
    "j_coupling",
    "delta_ccw",
    "delta_cw",
    "g_ccw",
    "g_ccw_conj",
    "g_cw",
    "g_cw_conj",
)

# Entries of L contributed by one unit of each symbol.
LANGEVIN_PATTERNS: Dict[str, Dict[Tuple[int, int], complex]] = {
    "kappa": {(0, 0): -0.5, (1, 1): -0.5, (3, 3): -0.5, (4, 4): -0.5},
    "gamma_m": {(2, 2): -0.5, (5, 5): -0.5},
    "omega_m": {(2, 2): -1j, (5, 5): 1j},
    "j_coupling": {(0, 1): -1j, (1, 0): -1j, (3, 4): 1j, (4, 3): 1j},
    "delta_ccw": {(0, 0): -1j, (3, 3): 1j},
    "delta_cw": {(1, 1): -1j, (4, 4): 1j},
    "g_ccw": {(0, 2): 1j, (0, 5): 1j, (2, 3): 1j, (5, 3): -1j},
    "g_ccw_conj": {(2, 0): 1j, (3, 2): -1j, (3, 5): -1j, (5, 0): -1j},
    "g_cw": {(1, 2): 1j, (1, 5): 1j, (2, 4): 1j, (5, 4): -1j},
    "g_cw_conj": {(2, 1): 1j, (4, 2): -1j, (4, 5): -1j, (5, 1): -1j},
}

# Annihilator followed by its own creator: <v_p v_q> = <v_q v_p> + 1.
ANTI_NORMAL_PAIRS = frozenset({(0, 3), (1, 4), (2, 5)})

MOMENT_INDEX = {
    tuple(sorted(pair)): index for index, pair in enumerate(MOMENT_PAIRS)
}


def _canonical(p: int, q: int) -> Tuple[int, float]:
    """Index of ``<v_p v_q>`` in the moment vector and its offset."""
    index = MOMENT_INDEX[tuple(sorted((p, q)))]
    offset = 1.0 if (p, q) in ANTI_NORMAL_PAIRS else 0.0
    return index, offset


def _moment_structure(
    pattern: Dict[Tuple[int, int], complex]
) -> Tuple[np.ndarray, np.ndarray]:
    """Moment-equation matrix and constant vector of one Langevin pattern."""
    langevin = np.zeros((6, 6), dtype=complex)
    for (row, col), value in pattern.items():
        langevin[row, col] = value

    matrix = np.zeros((MOMENT_COUNT, MOMENT_COUNT), dtype=complex)
    constant = np.zeros(MOMENT_COUNT, dtype=complex)
    for k, (p, q) in enumerate(MOMENT_PAIRS):
        for r in map(int, np.flatnonzero(langevin[p])):
            index, offset = _canonical(r, q)
            matrix[k, index] += langevin[p, r]
            constant[k] += langevin[p, r] * offset

        for r in map(int, np.flatnonzero(langevin[q])):
            index, offset = _canonical(p, r)
            matrix[k, index] += langevin[q, r]
            constant[k] += langevin[q, r] * offset

    return matrix, constant


def _tabulate() -> Tuple[np.ndarray, np.ndarray]:
    structures = [_moment_structure(LANGEVIN_PATTERNS[s]) for s in SYMBOLS]
    matrices = np.stack([matrix for matrix, _ in structures])
    constants = np.stack([constant for _, constant in structures])
    return matrices, constants


# Shapes (10, 21, 21) and (10, 21).
STRUCTURE_MATRICES, STRUCTURE_CONSTANTS = _tabulate()


def symbol_values(
    amps: ClassicalAmplitudes,
    p: PhysicalParams,
    delta_c: float,
    omega: float,
    rates: Optional[DerivedRates] = None,
    dshift: Optional[float] = None,
) -> np.ndarray:
    """Values of the ten drift symbols at the current mean fields.

    Args:
        amps: Classical amplitudes.
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega: Rotation angular velocity (rad/s).
        rates (optional): Precomputed derived rates. Default ``None``.
        dshift (optional): Sagnac shift per rad/s. Default taken from
            `rates`.

    Returns:
        Complex array ordered as ``SYMBOLS``.

    """
    rates = rates or derive_rates(p)
    dshift = rates.detuning_per_rotation if dshift is None else dshift
    detunings = static_detunings(delta_c, omega, dshift)
    result = values_from_array(amps.to_array(), p, detunings, rates.g0)
    return result


def values_from_array(
    y: np.ndarray, p: PhysicalParams, detunings: np.ndarray, g0: float
) -> np.ndarray:
    """Symbol values from packed amplitudes ``(alpha_ccw, alpha_cw, beta)``."""
    shifted = detunings - 2.0 * g0 * y[2].real
    g_ccw = g0 * y[0]
    g_cw = g0 * y[1]
    result = np.array(
        [
            p.kappa,
            p.gamma_m,
            1.0,
            p.j_coupling,
            shifted[0],
            shifted[1],
            g_ccw,
            np.conj(g_ccw),
            g_cw,
            np.conj(g_cw),
        ],
        dtype=complex,
    )
    return result


def symbol_sensitivities(
    d_amps: ClassicalAmplitudes,
    g0: float,
    dshift: float,
) -> np.ndarray:
    """Rotation derivatives of the ten drift symbols.

    Only the effective detunings and the enhanced couplings depend on the
    rotation rate.

    Args:
        d_amps: Amplitude sensitivities.
        g0: Single-photon coupling (units of ``omega_m``).
        dshift: Sagnac shift per unit of the rotation variable.

    Returns:
        Complex array ordered as ``SYMBOLS``.

    """
    result = sensitivities_from_array(d_amps.to_array(), g0, dshift)
    return result


def sensitivities_from_array(
    dy: np.ndarray, g0: float, dshift: float
) -> np.ndarray:
    """Symbol derivatives from packed amplitude sensitivities."""
    d_shifted = MODE_SIGNS * dshift - 2.0 * g0 * dy[2].real
    d_g_ccw = g0 * dy[0]
    d_g_cw = g0 * dy[1]
    result = np.array(
        [
            0.0,
            0.0,
            0.0,
            0.0,
            d_shifted[0],
            d_shifted[1],
            d_g_ccw,
            np.conj(d_g_ccw),
            d_g_cw,
            np.conj(d_g_cw),
        ],
        dtype=complex,
    )
    return result


def build_drift_matrix(
    amps: ClassicalAmplitudes,
    p: PhysicalParams,
    delta_c: float,
    omega: float,
    rates: Optional[DerivedRates] = None,
) -> np.ndarray:
    """Assemble the 21x21 drift matrix ``A``.

    Args:
        amps: Classical amplitudes.
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega: Rotation angular velocity (rad/s).
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Complex matrix.

    """
    values = symbol_values(amps, p, delta_c, omega, rates)
    result = np.tensordot(values, STRUCTURE_MATRICES, axes=1)
    return result


def build_inhomogeneous(
    amps: ClassicalAmplitudes,
    p: PhysicalParams,
    rates: Optional[DerivedRates] = None,
) -> np.ndarray:
    """Assemble the inhomogeneous vector ``D``.

    Args:
        amps: Classical amplitudes.
        p: Physical parameters.
        rates (optional): Precomputed derived rates. Default ``None``.

    Returns:
        Complex vector of length 21.

    """
    values = symbol_values(amps, p, p.delta_c, p.rotation, rates)
    result = values @ STRUCTURE_CONSTANTS
    result[2] += p.gamma_m * p.n_bar_m
    return result


def build_drift_sensitivity(
    d_amps: ClassicalAmplitudes,
    g0: float,
    dshift: float,
) -> np.ndarray:
    """Rotation derivative of ``A`` by the chain rule."""
    values = symbol_sensitivities(d_amps, g0, dshift)
    result = np.tensordot(values, STRUCTURE_MATRICES, axes=1)
    return result


def build_inhomogeneous_sensitivity(
    d_amps: ClassicalAmplitudes,
    g0: float,
    dshift: float,
) -> np.ndarray:
    """Rotation derivative of ``D`` by the chain rule."""
    values = symbol_sensitivities(d_amps, g0, dshift)
    result = values @ STRUCTURE_CONSTANTS
    return result
