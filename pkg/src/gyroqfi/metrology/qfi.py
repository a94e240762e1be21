# -*- coding: utf-8 -*-
"""Quantum Fisher Information.

Two evaluations are available for a Gaussian state ``(d, sigma)`` and its
derivatives in the rotation rate:

* mixed states::

    F = 1/2 vec(ds)^dag M^-1 vec(ds) + 2 dd^dag sigma^-1 dd,
    M = conj(sigma) (x) sigma - K (x) K

* pure states::

    F = 1/4 Tr(sigma^-1 ds sigma^-1 ds) + 2 dd^dag sigma^-1 dd

``M`` is singular for pure states, so ``qfi`` routes states whose
symplectic eigenvalues all sit at one to the pure formula.

"""

# Standard Library Imports
import logging
import math
from typing import Optional
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np
import scipy.linalg
from scipy.integrate import trapezoid

# Local Imports
from .gaussian_state import SYMPLECTIC_FORM
from .gaussian_state import GaussianState
from .gaussian_state import QfiBranch
from .gaussian_state import QfiResult
from .output_state import DisplacementFrame
from .output_state import output_state_from_sample
from .. import settings
from ..dynamics import AugmentedState
from ..errors import NearPureState
from ..errors import NotPositiveDefinite
from ..errors import TooFewSamples
from ..model import PhysicalParams

__all__ = [
    "average_qfi",
    "precision",
    "qfi",
    "qfi_from_sample",
    "qfi_mixed",
    "qfi_pure",
    "resource_ratio",
    "symplectic_eigenvalues",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")


def precision(value: float) -> float:
    """Cramer-Rao bound ``1/sqrt(F)`` for one repetition.

    Args:
        value: Fisher information.

    Returns:
        Smallest resolvable rotation rate; ``inf`` when ``F == 0``.

    """
    if value <= 0.0:
        return math.inf

    result = 1.0 / math.sqrt(value)
    return result


def resource_ratio(
    value: float, photon_number: float, phonon_number: float
) -> float:
    """Fisher information per excitation ``F / (N_p + |beta|^2)``."""
    total = photon_number + phonon_number
    if total <= 0.0:
        return math.inf if value > 0.0 else 0.0

    result = value / total
    return result


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Symplectic eigenvalues of a two-mode covariance matrix.

    The eigenvalues of ``K sigma`` come in pairs ``+/- nu``; one copy of
    each ``|nu|`` is kept.

    Args:
        sigma: 4x4 covariance matrix.

    Returns:
        The two symplectic eigenvalues in ascending order.

    """
    values = np.sort(np.abs(np.linalg.eigvals(SYMPLECTIC_FORM @ sigma)))
    result = values[::2]
    return result


def _cholesky(sigma: np.ndarray):
    try:
        result = scipy.linalg.cho_factor(sigma)
    except np.linalg.LinAlgError as error:
        raise NotPositiveDefinite(
            "covariance matrix is not positive definite",
            diagnostics={"sigma_diagonal": np.real(np.diag(sigma)).tolist()},
        ) from error

    return result


def _displacement_term(factor, d_sens: np.ndarray) -> float:
    solved = scipy.linalg.cho_solve(factor, d_sens)
    result = 2.0 * float(np.real(np.vdot(d_sens, solved)))
    return result


def _finish(
    value: float, branch: QfiBranch, sigma: np.ndarray
) -> QfiResult:
    value = max(value, 0.0)
    result = QfiResult(
        value=value,
        branch=branch,
        precision=precision(value),
        min_symplectic_eigenvalue=float(symplectic_eigenvalues(sigma)[0]),
    )
    return result


def _truncated_solve(matrix: np.ndarray, vector: np.ndarray) -> np.ndarray:
    u, s, vh = np.linalg.svd(matrix)
    keep = s > settings.SINGULAR_VALUE_CUTOFF * s[0]
    truncated = int(np.count_nonzero(~keep))
    if truncated > settings.MAX_TRUNCATED_SINGULAR_VALUES:
        raise NearPureState(
            f"{truncated} singular values truncated; state is near pure",
            diagnostics={"truncated": truncated},
        )

    coefficients = (u[:, keep].conj().T @ vector) / s[keep]
    result = vh[keep].conj().T @ coefficients
    return result


def qfi_mixed(g: GaussianState) -> QfiResult:
    """Fisher information from the mixed-state formula.

    Args:
        g: Gaussian state.

    Returns:
        Fisher information tagged ``mixed``.

    Raises:
        NearPureState: when more than four singular values of ``M`` fall
            below the cutoff.
        NotPositiveDefinite: when ``sigma`` has no Cholesky factor.

    """
    factor = _cholesky(g.sigma)
    kk = np.kron(SYMPLECTIC_FORM, SYMPLECTIC_FORM)
    matrix = np.kron(np.conj(g.sigma), g.sigma) - kk
    # Column stacking.
    vec = g.sigma_sens.flatten(order="F")
    solved = _truncated_solve(matrix, vec)
    value = 0.5 * float(np.real(np.vdot(vec, solved)))
    value += _displacement_term(factor, g.d_sens)
    result = _finish(value, QfiBranch.MIXED, g.sigma)
    return result


def qfi_pure(g: GaussianState) -> QfiResult:
    """Fisher information from the pure-state formula.

    Args:
        g: Gaussian state, pure to within the purity tolerance.

    Returns:
        Fisher information tagged ``pure``.

    Raises:
        NotPositiveDefinite: when ``sigma`` has no Cholesky factor.

    """
    factor = _cholesky(g.sigma)
    product = scipy.linalg.cho_solve(factor, g.sigma_sens)
    value = 0.25 * float(np.real(np.trace(product @ product)))
    value += _displacement_term(factor, g.d_sens)
    result = _finish(value, QfiBranch.PURE, g.sigma)
    return result


def qfi(
    g: GaussianState, purity_tolerance: Optional[float] = None
) -> QfiResult:
    """Fisher information with automatic formula selection.

    States whose symplectic eigenvalues all lie below
    ``1 + purity_tolerance`` use the pure formula; the rest use the mixed
    formula, falling back to the pure one if ``M`` turns out singular.

    Args:
        g: Gaussian state.
        purity_tolerance (optional): Purity threshold. Default
            ``settings.PURITY_TOLERANCE``.

    Returns:
        Fisher information and the branch taken.

    """
    tolerance = (
        settings.PURITY_TOLERANCE
        if purity_tolerance is None
        else purity_tolerance
    )
    nu = symplectic_eigenvalues(g.sigma)
    if np.all(nu < 1.0 + tolerance):
        log.debug("symplectic eigenvalues %s: pure branch", nu)
        return qfi_pure(g)

    try:
        result = qfi_mixed(g)
    except NearPureState:
        log.debug("M singular at eigenvalues %s: pure branch", nu)
        result = qfi_pure(g)

    return result


def qfi_from_sample(
    sample: AugmentedState,
    p: PhysicalParams,
    frame: DisplacementFrame = DisplacementFrame.OUTPUT,
) -> QfiResult:
    """Fisher information of one trajectory sample.

    Args:
        sample: Augmented state with per rad/s sensitivities.
        p: Physical parameters.
        frame (optional): Displacement frame. Default ``output``.

    Returns:
        Fisher information.

    """
    result = qfi(output_state_from_sample(sample, p, frame))
    return result


def average_qfi(samples: Sequence[Tuple[float, float]]) -> float:
    """Band average of the Fisher information by the trapezoidal rule.

    Args:
        samples: Pairs ``(omega, F)`` with strictly increasing ``omega``.

    Returns:
        ``1/(omega_max - omega_min) * integral of F``.

    Raises:
        TooFewSamples: when fewer than two samples are given.
        ValueError: when the rotation rates are not strictly increasing.

    """
    if len(samples) < 2:
        raise TooFewSamples(
            f"band average needs at least 2 samples, got {len(samples)}",
            diagnostics={"samples": len(samples)},
        )

    omega = np.array([value for value, _ in samples], dtype=float)
    values = np.array([value for _, value in samples], dtype=float)
    if np.any(np.diff(omega) <= 0.0):
        raise ValueError("rotation rates must be strictly increasing")

    result = float(trapezoid(values, omega) / (omega[-1] - omega[0]))
    return result
