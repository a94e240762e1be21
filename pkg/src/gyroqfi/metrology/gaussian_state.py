# -*- coding: utf-8 -*-
"""Two-Mode Gaussian States.

States are described in the complex basis ``(a_ccw, a_cw, a_ccw^dag,
a_cw^dag)`` by a displacement ``d`` and a covariance matrix with entries
``sigma_ij = <{dA_i, dA_j^dag}>``.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import enum

# Third-Party Imports
import numpy as np

__all__ = ["GaussianState", "QfiBranch", "QfiResult", "SYMPLECTIC_FORM"]


# K = diag(1, 1, -1, -1).
SYMPLECTIC_FORM = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)

# Swaps the two modes in the complex basis.
_MODE_SWAP = np.array([1, 0, 3, 2])


class QfiBranch(str, enum.Enum):
    """Formula used to evaluate the quantum Fisher information."""

    MIXED = "mixed"
    PURE = "pure"


@dataclasses.dataclass(frozen=True)
class QfiResult:
    """Quantum Fisher information of the rotation rate.

    Attributes:
        value: Fisher information (per (rad/s)^2).
        branch: Formula used.
        precision: Cramer-Rao bound ``1/sqrt(value)`` for one repetition.
        min_symplectic_eigenvalue: Smallest symplectic eigenvalue.

    """

    value: float
    branch: QfiBranch
    precision: float
    min_symplectic_eigenvalue: float

    def to_dict(self) -> dict:
        """Return the result as a plain dictionary."""
        result = dataclasses.asdict(self)
        result["branch"] = self.branch.value
        return result


def _raise_for_shape(name: str, value: np.ndarray, shape: tuple) -> None:
    if value.shape != shape:
        message = f"{name} must have shape {shape}, got {value.shape}"
        raise ValueError(message)


@dataclasses.dataclass(frozen=True, eq=False)
class GaussianState:
    """Displacement and covariance of a two-mode Gaussian state.

    Attributes:
        d: Displacement ``(d_ccw, d_cw, d_ccw*, d_cw*)``.
        sigma: 4x4 covariance matrix.
        d_sens: Rotation derivative of `d` (per rad/s).
        sigma_sens: Rotation derivative of `sigma` (per rad/s).

    """

    d: np.ndarray
    sigma: np.ndarray
    d_sens: np.ndarray
    sigma_sens: np.ndarray

    def __post_init__(self) -> None:
        for name, shape in (
            ("d", (4,)),
            ("sigma", (4, 4)),
            ("d_sens", (4,)),
            ("sigma_sens", (4, 4)),
        ):
            value = np.asarray(getattr(self, name), dtype=complex)
            _raise_for_shape(name, value, shape)
            object.__setattr__(self, name, value)

    @classmethod
    def from_blocks(
        cls,
        d_modes: np.ndarray,
        x_block: np.ndarray,
        y_block: np.ndarray,
        d_modes_sens: np.ndarray,
        x_block_sens: np.ndarray,
        y_block_sens: np.ndarray,
    ) -> GaussianState:
        """Assemble a state from mode displacements and 2x2 blocks.

        The covariance is ``[[X, Y], [Y*, X*]]`` and the displacement is
        ``(d, d*)``.

        """
        result = cls(
            d=np.concatenate([d_modes, np.conj(d_modes)]),
            sigma=np.block(
                [[x_block, y_block], [np.conj(y_block), np.conj(x_block)]]
            ),
            d_sens=np.concatenate([d_modes_sens, np.conj(d_modes_sens)]),
            sigma_sens=np.block(
                [
                    [x_block_sens, y_block_sens],
                    [np.conj(y_block_sens), np.conj(x_block_sens)],
                ]
            ),
        )
        return result

    @classmethod
    def vacuum(cls) -> GaussianState:
        """Two-mode vacuum without rotation dependence."""
        zeros = np.zeros(4, dtype=complex)
        result = cls(
            d=zeros,
            sigma=np.eye(4, dtype=complex),
            d_sens=zeros,
            sigma_sens=np.zeros((4, 4), dtype=complex),
        )
        return result

    def hermiticity_error(self) -> float:
        """Largest entry of ``sigma - sigma^dag``."""
        result = float(np.max(np.abs(self.sigma - self.sigma.conj().T)))
        return result

    def swap_modes(self) -> GaussianState:
        """Relabel ccw and cw."""
        index = _MODE_SWAP
        result = GaussianState(
            d=self.d[index],
            sigma=self.sigma[np.ix_(index, index)],
            d_sens=self.d_sens[index],
            sigma_sens=self.sigma_sens[np.ix_(index, index)],
        )
        return result
