# -*- coding: utf-8 -*-
"""Output Field States.

Input-output relations map the intracavity fluctuation moments to the
covariance of the output field for vacuum input noise::

    X_out = 2 [[k<a1^dag a1> + 1/2, k<a2^dag a1>],
               [k<a1^dag a2>, k<a2^dag a2> + 1/2]]
    Y_out = 2 k [[<a1 a1>, <a1 a2>], [<a1 a2>, <a2 a2>]]

with ``k = kappa``.

"""

# Standard Library Imports
import enum
import math

# Third-Party Imports
import numpy as np

# Local Imports
from .gaussian_state import GaussianState
from ..dynamics import AugmentedState
from ..dynamics import ClassicalAmplitudes
from ..dynamics import MomentVector
from ..model import Mode
from ..model import PhysicalParams

__all__ = ["DisplacementFrame", "output_state", "output_state_from_sample"]


class DisplacementFrame(str, enum.Enum):
    """Field whose displacement enters the Fisher information."""

    OUTPUT = "output"
    INTRACAVITY = "intracavity"


def _x_block(x: MomentVector, kappa: float, offset: float) -> np.ndarray:
    result = 2.0 * np.array(
        [
            [kappa * x[0] + offset, kappa * x[10]],
            [kappa * x[9], kappa * x[1] + offset],
        ],
        dtype=complex,
    )
    return result


def _y_block(x: MomentVector, kappa: float) -> np.ndarray:
    result = 2.0 * kappa * np.array(
        [[x[4], x[12]], [x[12], x[6]]],
        dtype=complex,
    )
    return result


def _hermitian_part(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + matrix.conj().T)


def _input_amplitudes(p: PhysicalParams) -> np.ndarray:
    result = np.zeros(2, dtype=complex)
    index = 0 if p.drive_direction is Mode.CCW else 1
    result[index] = p.epsilon / math.sqrt(p.kappa)
    return result


def output_state(
    X: MomentVector,  # pylint: disable=invalid-name
    amps: ClassicalAmplitudes,
    dX: MomentVector,  # pylint: disable=invalid-name
    d_amps: ClassicalAmplitudes,
    p: PhysicalParams,
    frame: DisplacementFrame = DisplacementFrame.OUTPUT,
) -> GaussianState:
    """Gaussian state of the output field.

    Args:
        X: Intracavity fluctuation moments.
        amps: Classical amplitudes.
        dX: Moment sensitivities (per rad/s).
        d_amps: Amplitude sensitivities (per rad/s).
        p: Physical parameters.
        frame (optional): Displacement frame. Default ``output``.

    Returns:
        Gaussian state with its rotation derivatives.

    """
    frame = DisplacementFrame(frame)
    alpha = np.array([amps.alpha_ccw, amps.alpha_cw], dtype=complex)
    d_alpha = np.array([d_amps.alpha_ccw, d_amps.alpha_cw], dtype=complex)
    if frame is DisplacementFrame.OUTPUT:
        root = math.sqrt(p.kappa)
        displacement = root * alpha - _input_amplitudes(p)
        d_displacement = root * d_alpha
    else:
        displacement = alpha
        d_displacement = d_alpha

    state = GaussianState.from_blocks(
        displacement,
        _x_block(X, p.kappa, 0.5),
        _y_block(X, p.kappa),
        d_displacement,
        _x_block(dX, p.kappa, 0.0),
        _y_block(dX, p.kappa),
    )
    # Conjugate-pair moments agree only to integrator tolerance.
    result = GaussianState(
        d=state.d,
        sigma=_hermitian_part(state.sigma),
        d_sens=state.d_sens,
        sigma_sens=_hermitian_part(state.sigma_sens),
    )
    return result


def output_state_from_sample(
    sample: AugmentedState,
    p: PhysicalParams,
    frame: DisplacementFrame = DisplacementFrame.OUTPUT,
) -> GaussianState:
    """Output state of one trajectory sample."""
    result = output_state(
        sample.X, sample.amps, sample.dX, sample.d_amps, p, frame
    )
    return result
