# -*- coding: utf-8 -*-
"""Truncated Fock Space.

Ladder operators of the two optical modes and the mechanical mode on the
tensor-product basis ``|n_ccw> (x) |n_cw> (x) |n_mech>``.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
from typing import Tuple

# Third-Party Imports
import numpy as np
import scipy.sparse

# Local Imports
from .. import settings

__all__ = [
    "FockConfig",
    "FockOperators",
    "fock_state",
    "thermal_populations",
    "vacuum_thermal_state",
]


@dataclasses.dataclass(frozen=True)
class FockConfig:
    """Truncation and step size of the density-matrix integrator.

    Attributes:
        n_cav_ccw: Levels kept for the ccw mode.
        n_cav_cw: Levels kept for the cw mode.
        n_mech: Levels kept for the mechanical mode.
        dt: Fixed step (units of ``1/omega_m``).
        dissipation: Apply the optical and mechanical baths. Switching
            them off gives the closed-system dynamics.

    Raises:
        TypeError: when a dimension is not an integer.
        ValueError: when a dimension or `dt` is out of range.

    """

    n_cav_ccw: int = 8
    n_cav_cw: int = 8
    n_mech: int = 8
    dt: float = settings.MAX_ORACLE_STEP
    dissipation: bool = True

    def __post_init__(self) -> None:
        for name in ("n_cav_ccw", "n_cav_cw", "n_mech"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                message = f"expected type 'int', got {type(value)} instead"
                raise TypeError(message)

            low = settings.MIN_FOCK_DIMENSION
            high = settings.MAX_FOCK_DIMENSION
            if not low <= value <= high:
                message = f"{name} must lie in [{low}, {high}], got {value}"
                raise ValueError(message)

        if not 0.0 < self.dt <= settings.MAX_ORACLE_STEP:
            message = (
                f"dt must lie in (0, {settings.MAX_ORACLE_STEP}], "
                f"got {self.dt}"
            )
            raise ValueError(message)

    @property
    def dims(self) -> Tuple[int, int, int]:
        """Mode dimensions ``(ccw, cw, mech)``."""
        return self.n_cav_ccw, self.n_cav_cw, self.n_mech

    @property
    def size(self) -> int:
        """Dimension of the product space."""
        return self.n_cav_ccw * self.n_cav_cw * self.n_mech


def _destroy(dim: int) -> scipy.sparse.csr_matrix:
    result = scipy.sparse.diags(
        np.sqrt(np.arange(1, dim, dtype=float)), offsets=1, format="csr"
    ).astype(complex)
    return result


def _embed(
    operator: scipy.sparse.spmatrix, position: int, dims: Tuple[int, ...]
) -> scipy.sparse.csr_matrix:
    factors = [
        operator if index == position else scipy.sparse.identity(dim)
        for index, dim in enumerate(dims)
    ]
    result = factors[0]
    for factor in factors[1:]:
        result = scipy.sparse.kron(result, factor, format="csr")
    return result.astype(complex).tocsr()


@dataclasses.dataclass(frozen=True)
class FockOperators:
    """Annihilation operators on the product space."""

    a_ccw: scipy.sparse.csr_matrix
    a_cw: scipy.sparse.csr_matrix
    b: scipy.sparse.csr_matrix

    @classmethod
    def from_config(cls, config: FockConfig) -> FockOperators:
        """Build the ladder operators of `config`."""
        dims = config.dims
        result = cls(
            a_ccw=_embed(_destroy(dims[0]), 0, dims),
            a_cw=_embed(_destroy(dims[1]), 1, dims),
            b=_embed(_destroy(dims[2]), 2, dims),
        )
        return result

    def ladder(self) -> Tuple[scipy.sparse.csr_matrix, ...]:
        """Operators ordered as the moment operator vector."""
        annihilators = (self.a_ccw, self.a_cw, self.b)
        result = annihilators + tuple(
            op.conj().T.tocsr() for op in annihilators
        )
        return result


def thermal_populations(n_bar: float, dim: int) -> np.ndarray:
    """Truncated and renormalised thermal populations."""
    if n_bar < 0:
        raise ValueError(f"n_bar must be >= 0, got {n_bar}")

    if n_bar == 0:
        result = np.zeros(dim)
        result[0] = 1.0
        return result

    ratio = n_bar / (1.0 + n_bar)
    weights = ratio ** np.arange(dim)
    result = weights / weights.sum()
    return result


def fock_state(config: FockConfig, n_ccw: int, n_cw: int, n_mech: int):
    """Density matrix of the number state ``|n_ccw, n_cw, n_mech>``."""
    dims = config.dims
    index = np.ravel_multi_index((n_ccw, n_cw, n_mech), dims)
    result = np.zeros((config.size, config.size), dtype=complex)
    result[index, index] = 1.0
    return result


def vacuum_thermal_state(config: FockConfig, n_bar_m: float) -> np.ndarray:
    """Optical vacuum with the mechanics in a truncated thermal state."""
    optical = np.zeros(config.n_cav_ccw * config.n_cav_cw)
    optical[0] = 1.0
    populations = np.kron(optical, thermal_populations(n_bar_m, config.n_mech))
    result = np.diag(populations).astype(complex)
    return result
