# -*- coding: utf-8 -*-
"""Density-Matrix Integrator.

Integrates the full nonlinear master equation of the gyroscope in the
laser rotating frame (units of ``omega_m``)::

    H = sum_j Delta_j a_j^dag a_j + b^dag b + J (a1^dag a2 + a2^dag a1)
        - g0 (a1^dag a1 + a2^dag a2)(b + b^dag) + i eps (a_d^dag - a_d)

with optical damping ``kappa`` and a thermal mechanical bath, using
fixed-step fourth-order Runge-Kutta.

"""

# Standard Library Imports
import logging
import math
from typing import List
from typing import Optional
from typing import Sequence

# Third-Party Imports
import numpy as np
import scipy.sparse

# Local Imports
from .fock import FockConfig
from .fock import FockOperators
from .. import settings
from ..dynamics import MOMENT_PAIRS
from ..dynamics import AugmentedState
from ..dynamics import ClassicalAmplitudes
from ..dynamics import DetuningSchedule
from ..dynamics import MomentVector
from ..dynamics import Trajectory
from ..dynamics import static_detunings
from ..errors import NonFinite
from ..errors import TruncationLeak
from ..model import Mode
from ..model import PhysicalParams
from ..model import derive_rates

__all__ = [
    "LindbladSystem",
    "evolve",
    "expectations",
    "lindblad_rhs",
    "top_level_populations",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")


def _expect(operator: scipy.sparse.coo_matrix, rho: np.ndarray) -> complex:
    # Tr(O rho) = sum_ij O_ij rho_ji
    result = complex(np.sum(operator.data * rho[operator.col, operator.row]))
    return result


class LindbladSystem:
    """Master equation of one operating point.

    Args:
        p: Physical parameters.
        config: Truncation and step size.
        omega (optional): Rotation angular velocity (rad/s). Default
            ``p.rotation``.

    """

    def __init__(
        self,
        p: PhysicalParams,
        config: FockConfig,
        omega: Optional[float] = None,
    ) -> None:
        self._params = p
        self._config = config
        self._omega = p.rotation if omega is None else omega
        self._rates = derive_rates(p)
        self._operators = FockOperators.from_config(config)
        self._ladder = self._operators.ladder()
        self._products = [
            (self._ladder[i] @ self._ladder[j]).tocoo()
            for i, j in MOMENT_PAIRS
        ]
        self._collapse = self._collapse_operators()
        self._static = self._static_hamiltonian()

    @property
    def config(self) -> FockConfig:
        """Truncation and step size."""
        return self._config

    @property
    def operators(self) -> FockOperators:
        """Ladder operators."""
        return self._operators

    def _collapse_operators(self) -> List[scipy.sparse.csr_matrix]:
        if not self._config.dissipation:
            return []

        p = self._params
        ops = self._operators
        result = [
            math.sqrt(p.kappa) * ops.a_ccw,
            math.sqrt(p.kappa) * ops.a_cw,
        ]
        result.append(math.sqrt(p.gamma_m * (p.n_bar_m + 1.0)) * ops.b)
        if p.n_bar_m > 0.0:
            result.append(math.sqrt(p.gamma_m * p.n_bar_m) * ops.b.conj().T)
        return [op.tocsr() for op in result]

    def _static_hamiltonian(self) -> scipy.sparse.csr_matrix:
        p = self._params
        g0 = self._rates.g0
        a1, a2, b, a1_dag, a2_dag, b_dag = self._ladder
        photons = a1_dag @ a1 + a2_dag @ a2
        driven, driven_dag = (
            (a1, a1_dag) if p.drive_direction is Mode.CCW else (a2, a2_dag)
        )
        result = (
            b_dag @ b
            + p.j_coupling * (a1_dag @ a2 + a2_dag @ a1)
            - g0 * photons @ (b + b_dag)
            + 1j * p.epsilon * (driven_dag - driven)
        )
        if self._collapse:
            damping = sum(c.conj().T @ c for c in self._collapse)
            result = result - 0.5j * damping
        return result.tocsr()

    def effective_hamiltonian(self, delta_c: float) -> scipy.sparse.csr_matrix:
        """Non-Hermitian Hamiltonian ``H - i/2 sum c^dag c`` at `delta_c`."""
        detunings = static_detunings(
            delta_c, self._omega, self._rates.detuning_per_rotation
        )
        a1, a2, _, a1_dag, a2_dag, _ = self._ladder
        result = (
            self._static
            + detunings[0] * (a1_dag @ a1)
            + detunings[1] * (a2_dag @ a2)
        )
        return result.tocsr()

    def derivative(
        self, rho: np.ndarray, hamiltonian: scipy.sparse.csr_matrix
    ) -> np.ndarray:
        """Time derivative of `rho` under `hamiltonian`."""
        product = hamiltonian @ rho
        result = -1j * (product - product.conj().T)
        for c in self._collapse:
            result += c @ (c @ rho).conj().T
        return result

    def expectations(self, rho: np.ndarray, t: float) -> AugmentedState:
        """Mean fields and central second moments of `rho`."""
        means = np.array(
            [_expect(op.tocoo(), rho) for op in self._ladder], dtype=complex
        )
        moments = np.array(
            [
                _expect(product, rho) - means[i] * means[j]
                for product, (i, j) in zip(self._products, MOMENT_PAIRS)
            ],
            dtype=complex,
        )
        result = AugmentedState(
            amps=ClassicalAmplitudes.from_array(means[:3]),
            d_amps=ClassicalAmplitudes(),
            X=MomentVector(moments),
            dX=MomentVector(),
            t=t,
        )
        return result

    def top_level_populations(self, rho: np.ndarray) -> np.ndarray:
        """Marginal population of the highest kept level of each mode."""
        return top_level_populations(rho, self._config)


def lindblad_rhs(
    rho: np.ndarray,
    p: PhysicalParams,
    delta_c: float,
    omega: Optional[float] = None,
    config: Optional[FockConfig] = None,
) -> np.ndarray:
    """Time derivative of a density matrix.

    Args:
        rho: Density matrix over the product basis.
        p: Physical parameters.
        delta_c: Pump-cavity detuning in force (units of ``omega_m``).
        omega (optional): Rotation angular velocity (rad/s). Default
            ``p.rotation``.
        config (optional): Truncation matching `rho`. Default cubic
            truncation inferred from the size of `rho`.

    Returns:
        ``d(rho)/dt``.

    Raises:
        TruncationLeak: when a top level holds more than the leak
            threshold.

    """
    config = config or _cubic_config(rho.shape[0])
    system = LindbladSystem(p, config, omega)
    _raise_for_leak(system, rho, 0.0)
    result = system.derivative(rho, system.effective_hamiltonian(delta_c))
    return result


def _cubic_config(size: int) -> FockConfig:
    dim = int(round(size ** (1.0 / 3.0)))
    if dim**3 != size:
        message = f"cannot infer a cubic truncation from size {size}"
        raise ValueError(message)

    return FockConfig(dim, dim, dim)


def _raise_for_leak(system: LindbladSystem, rho: np.ndarray, t: float) -> None:
    populations = system.top_level_populations(rho)
    worst = float(populations.max())
    if worst > settings.TRUNCATION_LEAK_THRESHOLD:
        raise TruncationLeak(
            f"top Fock level holds {worst:.3g} at t = {t:g}",
            diagnostics={"t": t, "populations": populations.tolist()},
        )


def top_level_populations(
    rho: np.ndarray, config: FockConfig
) -> np.ndarray:
    """Marginal population of the highest kept level of each mode."""
    populations = np.real(np.diag(rho)).reshape(config.dims)
    result = np.array(
        [
            populations[-1, :, :].sum(),
            populations[:, -1, :].sum(),
            populations[:, :, -1].sum(),
        ]
    )
    return result


def expectations(
    rho: np.ndarray, p: PhysicalParams, config: FockConfig, t: float = 0.0
) -> AugmentedState:
    """Mean fields and central second moments of `rho`."""
    result = LindbladSystem(p, config).expectations(rho, t)
    return result


def _rk4_step(
    system: LindbladSystem,
    rho: np.ndarray,
    hamiltonian: scipy.sparse.csr_matrix,
    h: float,
) -> np.ndarray:
    k1 = system.derivative(rho, hamiltonian)
    k2 = system.derivative(rho + 0.5 * h * k1, hamiltonian)
    k3 = system.derivative(rho + 0.5 * h * k2, hamiltonian)
    k4 = system.derivative(rho + h * k3, hamiltonian)
    result = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return result


def evolve(
    rho0: np.ndarray,
    p: PhysicalParams,
    schedule: DetuningSchedule,
    t_end: float,
    config: FockConfig,
    sample_times: Optional[Sequence[float]] = None,
    t0: float = 0.0,
    omega: Optional[float] = None,
) -> Trajectory:
    """Integrate a density matrix and record its expectation values.

    Every interval between consecutive sample times and breakpoints is
    split into equal steps no longer than ``config.dt``.

    Args:
        rho0: Initial density matrix.
        p: Physical parameters.
        schedule: Piecewise-constant pump-cavity detuning.
        t_end: Final time (units of ``1/omega_m``).
        config: Truncation and step size.
        sample_times (optional): Output times. Default ``None``.
        t0 (optional): Start time. Default ``0.0``.
        omega (optional): Rotation angular velocity (rad/s). Default
            ``p.rotation``.

    Returns:
        Trajectory of amplitudes and central moments with zero
        sensitivities.

    Raises:
        TruncationLeak: when a top level holds more than the leak
            threshold.
        NonFinite: when the density matrix becomes NaN or infinite.

    """
    if not t_end > t0:
        raise ValueError(f"t_end must exceed {t0}, got {t_end}")

    system = LindbladSystem(p, config, omega)
    times = {t0, t_end}
    times.update(t for t, _ in schedule.breakpoints if t0 < t < t_end)
    if sample_times is not None:
        times.update(t for t in sample_times if t0 < t < t_end)
    grid = sorted(times)

    rho = np.array(rho0, dtype=complex)
    _raise_for_leak(system, rho, t0)
    states = [system.expectations(rho, t0)]
    for start, stop in zip(grid, grid[1:]):
        hamiltonian = system.effective_hamiltonian(schedule.value_at(start))
        steps = max(1, math.ceil((stop - start) / config.dt - 1e-9))
        h = (stop - start) / steps
        for _ in range(steps):
            rho = _rk4_step(system, rho, hamiltonian, h)

        if not np.all(np.isfinite(rho)):
            raise NonFinite(
                f"non-finite density matrix at t = {stop:g}",
                diagnostics={"t": stop},
            )

        _raise_for_leak(system, rho, stop)
        states.append(system.expectations(rho, stop))

    log.debug("oracle evolved %d samples on %s", len(states), config.dims)
    crossed = [t for t, _ in schedule.breakpoints if t0 < t < t_end]
    result = Trajectory(states=states, breakpoints=crossed)
    return result
