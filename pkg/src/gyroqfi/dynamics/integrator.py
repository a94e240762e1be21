# -*- coding: utf-8 -*-
"""Augmented System Integrator.

Advances classical amplitudes, moments and their rotation sensitivities
with an embedded Runge-Kutta 4(5) pair, restarting at every breakpoint of
the detuning schedule.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import importlib
import logging
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np
from scipy.integrate import RK45

# Local Imports
from .sensitivity import AugmentedSystem
from .states import AMPLITUDE_LABELS
from .states import MOMENT_COUNT
from .states import MOMENT_LABELS
from .states import AugmentedState
from .states import DetuningSchedule
from .. import settings
from ..errors import NonFinite
from ..errors import StepSizeUnderflow
from ..model import PhysicalParams
from ..model import derive_rates

__all__ = [
    "Trajectory",
    "integrate",
    "trajectory_columns",
    "trajectory_to_rows",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")


def trajectory_columns() -> List[str]:
    """Stable column order of exported trajectories."""
    names = [
        *AMPLITUDE_LABELS,
        *MOMENT_LABELS,
        *(f"d_{label}" for label in AMPLITUDE_LABELS),
        *(f"d_{label}" for label in MOMENT_LABELS),
    ]
    result = ["t"]
    for name in names:
        result.extend([f"re_{name}", f"im_{name}"])
    return result


def _state_row(state: AugmentedState) -> List[float]:
    y = state.to_vector()
    # Amplitudes and moments first, then both sensitivity blocks.
    ordered = np.concatenate(
        [y[0:3], y[6 : 6 + MOMENT_COUNT], y[3:6], y[6 + MOMENT_COUNT :]]
    )
    row = [state.t]
    for value in ordered:
        row.extend([float(value.real), float(value.imag)])
    return row


def trajectory_to_rows(states: Iterable[AugmentedState]) -> List[List[float]]:
    """Flatten states into rows matching ``trajectory_columns()``."""
    result = [_state_row(state) for state in states]
    return result


@dataclasses.dataclass(frozen=True)
class Trajectory:
    """Sampled augmented states of one integration.

    Attributes:
        states: States at the sample times and breakpoints, time ordered.
        breakpoints: Schedule breakpoints crossed during the run.

    """

    states: List[AugmentedState]
    breakpoints: List[float] = dataclasses.field(default_factory=list)

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, index: int) -> AugmentedState:
        return self.states[index]

    def __iter__(self):
        return iter(self.states)

    @property
    def times(self) -> np.ndarray:
        """Sample times."""
        return np.array([state.t for state in self.states])

    @property
    def final(self) -> AugmentedState:
        """Last sampled state."""
        return self.states[-1]

    def at(self, t: float) -> AugmentedState:
        """Sampled state closest to time `t`."""
        index = int(np.argmin(np.abs(self.times - t)))
        return self.states[index]

    def moment(self, index: int) -> np.ndarray:
        """Time series of moment `index`."""
        return np.array([state.X[index] for state in self.states])

    def rows(self) -> List[List[float]]:
        """Rows matching ``trajectory_columns()``."""
        return trajectory_to_rows(self.states)

    def to_frame(self):
        """Return the trajectory as a ``pandas.DataFrame``.

        Raises:
            ModuleNotFoundError: when pandas is not installed.

        """
        pandas = importlib.import_module("pandas")
        result = pandas.DataFrame(self.rows(), columns=trajectory_columns())
        return result


def _raise_for_tolerance(tol: float) -> None:
    if not isinstance(tol, (int, float)):
        message = f"expected type 'float', got {type(tol)} instead"
        raise TypeError(message)

    if not 0.0 < tol <= settings.MAX_TOLERANCE:
        message = f"tol must lie in (0, {settings.MAX_TOLERANCE}], got {tol}"
        raise ValueError(message)


def _sample_grid(
    t0: float,
    t_end: float,
    sample_times: Optional[Sequence[float]],
    schedule: DetuningSchedule,
) -> np.ndarray:
    times = [t0, t_end]
    times.extend(t for t, _ in schedule.breakpoints if t0 < t < t_end)
    if sample_times is not None:
        times.extend(t for t in sample_times if t0 <= t <= t_end)
    result = np.unique(np.asarray(times, dtype=float))
    return result


def _integrate_segment(
    system: AugmentedSystem,
    y0: np.ndarray,
    start: float,
    stop: float,
    delta_c: float,
    t_eval: np.ndarray,
    tol: float,
    min_step: float,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Samples of one constant-detuning segment at `t_eval`.

    Every accepted step short of `stop` must be at least `min_step`; the
    final step may be clipped to land on `stop`.

    Returns:
        Sample times, the matching states (one row per time) and the
        state at `stop`.

    """
    diagnostics = {
        "segment": [start, stop],
        "delta_c": delta_c,
        "tol": tol,
    }

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        result = system.derivative(y, delta_c)
        if not np.all(np.isfinite(result)):
            message = f"non-finite derivative at t = {t:g}"
            raise NonFinite(message, diagnostics={"t": t, **diagnostics})
        return result

    solver = RK45(rhs, start, y0, stop, rtol=tol, atol=tol)
    pending = list(t_eval)
    times: List[float] = []
    samples: List[np.ndarray] = []
    while solver.status == "running":
        message = solver.step()
        h = solver.t - solver.t_old if solver.t_old is not None else 0.0
        if solver.status == "failed" or (
            solver.status == "running" and h < min_step
        ):
            raise StepSizeUnderflow(
                f"step size {h:.3g} below {min_step:g} at t = {solver.t:g}"
                + (f": {message}" if message else ""),
                diagnostics={"t": solver.t, "h": h, **diagnostics},
            )

        if not np.all(np.isfinite(solver.y)):
            message = f"non-finite state at t = {solver.t:g}"
            raise NonFinite(
                message, diagnostics={"t": solver.t, **diagnostics}
            )

        if pending and pending[0] <= solver.t:
            dense = solver.dense_output()
            while pending and pending[0] <= solver.t:
                t = pending.pop(0)
                times.append(t)
                samples.append(solver.y.copy() if t == solver.t else dense(t))

    return np.asarray(times), np.asarray(samples), solver.y


def integrate(
    s0: AugmentedState,
    schedule: DetuningSchedule,
    t_end: float,
    tol: float,
    p: PhysicalParams,
    sample_times: Optional[Sequence[float]] = None,
    omega: Optional[float] = None,
    prescale: bool = True,
    min_step: Optional[float] = None,
) -> Trajectory:
    """Integrate the augmented system from `s0` to `t_end`.

    Sensitivities are carried internally with respect to the dimensionless
    rotation variable ``u`` when `prescale` is set and converted back to
    per rad/s on output; returned states are always per rad/s.

    Args:
        s0: Initial augmented state.
        schedule: Piecewise-constant pump-cavity detuning.
        t_end: Final time (units of ``1/omega_m``).
        tol: Relative and absolute local error tolerance.
        p: Physical parameters.
        sample_times (optional): Extra output times. Default ``None``.
        omega (optional): Rotation angular velocity (rad/s). Default
            ``p.rotation``.
        prescale (optional): Integrate sensitivities in ``u``. Default
            ``True``.
        min_step (optional): Smallest accepted step (units of
            ``1/omega_m``). Default ``settings.MIN_STEP``.

    Returns:
        Trajectory sampled at ``s0.t``, every breakpoint, the requested
        sample times and `t_end`.

    Raises:
        StepSizeUnderflow: when an accepted step falls below `min_step`.
        NonFinite: when a state entry becomes NaN or infinite.
        ValueError: when `tol` or `t_end` is out of range.

    """
    _raise_for_tolerance(tol)
    if not t_end > s0.t:
        message = f"t_end must exceed the start time {s0.t}, got {t_end}"
        raise ValueError(message)

    omega = p.rotation if omega is None else omega
    min_step = settings.MIN_STEP if min_step is None else min_step
    rates = derive_rates(p)
    scale = rates.detuning_per_rotation if prescale else 1.0
    system = AugmentedSystem(p, omega, rates, dshift=1.0 if prescale else None)

    grid = _sample_grid(s0.t, t_end, sample_times, schedule)
    y = s0.scale_sensitivities(1.0 / scale).to_vector()
    states = [s0]
    for start, stop, delta_c in schedule.segments(s0.t, t_end):
        log.debug(
            "segment [%g, %g] at delta_c = %g", start, stop, delta_c
        )
        t_eval = grid[(grid > start) & (grid <= stop)]
        times, samples, y = _integrate_segment(
            system, y, start, stop, delta_c, t_eval, tol, min_step
        )
        for t, vector in zip(times, samples):
            sample = AugmentedState.from_vector(vector, t)
            states.append(sample.scale_sensitivities(scale))

    crossed = [t for t, _ in schedule.breakpoints if s0.t < t < t_end]
    result = Trajectory(states=states, breakpoints=crossed)
    return result
