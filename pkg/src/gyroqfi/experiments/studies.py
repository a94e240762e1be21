# -*- coding: utf-8 -*-
"""Studies.

Drivers behind the command-line studies: Fisher-information dynamics of
one or both drive directions, steady-state sweeps over detuning, drive
amplitude and rotation rate, and constant-detuning baselines of the band
average.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import importlib
import itertools
import logging
import math
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .executors import parallel_map
from .sweep_spec import SweepAxis
from .sweep_spec import SweepSpec
from .. import settings
from ..dynamics import AugmentedState
from ..dynamics import DetuningSchedule
from ..dynamics import initial_state
from ..dynamics import integrate
from ..errors import ConfigError
from ..errors import NotConverged
from ..errors import NumericalError
from ..metrology import DisplacementFrame
from ..metrology import precision
from ..metrology import qfi_from_sample
from ..metrology import resource_ratio
from ..model import Mode
from ..model import PhysicalParams
from ..progress import AbstractProgressBar
from ..rl import EpisodeTrace
from ..rl import GyroEnv
from ..rl import run_episode

__all__ = [
    "BaselinePoint",
    "BaselineResult",
    "DynamicsResult",
    "DynamicsSeries",
    "ScalingResult",
    "SteadyPoint",
    "SweepPoint",
    "SweepResult",
    "baseline_env",
    "local_minima",
    "run_detuning_sweep",
    "run_fixed_detuning_baseline",
    "run_omega_sweep",
    "run_qfi_dynamics",
    "run_scaling_study",
    "steady_state_qfi",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")


def _hz(omega: float) -> float:
    return omega / (2.0 * math.pi)


def _raise_for_axis(spec: SweepSpec, axis: SweepAxis) -> None:
    if spec.axis is not axis:
        message = f"expected a {axis.value} sweep, got {spec.axis.value}"
        raise ConfigError(message)


def local_minima(values: Sequence[float]) -> List[int]:
    """Indices of strict interior local minima of `values`."""
    v = np.asarray(values, dtype=float)
    result = [
        index
        for index in range(1, len(v) - 1)
        if v[index] < v[index - 1] and v[index] < v[index + 1]
    ]
    return result


# ----------------------------------------------------------------------------
# Dynamics
# ----------------------------------------------------------------------------
DYNAMICS_COLUMNS = (
    "t",
    "qfi",
    "delta_omega",
    "n_photons",
    "n_phonons",
    "resource_ratio",
)


@dataclasses.dataclass(frozen=True)
class DynamicsSeries:
    """Fisher information and excitation numbers along one run."""

    direction: Mode
    epsilon: float
    omega: float
    times: np.ndarray
    qfi: np.ndarray
    n_photons: np.ndarray
    n_phonons: np.ndarray

    @property
    def delta_omega(self) -> np.ndarray:
        """Cramer-Rao precision at every sample."""
        return np.array([precision(value) for value in self.qfi])

    @property
    def resource_ratio(self) -> np.ndarray:
        """Fisher information per excitation at every sample."""
        result = np.array(
            [
                resource_ratio(f, n_p, n_b)
                for f, n_p, n_b in zip(
                    self.qfi, self.n_photons, self.n_phonons
                )
            ]
        )
        return result

    @property
    def columns(self) -> Tuple[str, ...]:
        return DYNAMICS_COLUMNS

    def rows(self) -> List[List[float]]:
        """Rows matching ``columns``."""
        result = np.column_stack(
            [
                self.times,
                self.qfi,
                self.delta_omega,
                self.n_photons,
                self.n_phonons,
                self.resource_ratio,
            ]
        ).tolist()
        return result


@dataclasses.dataclass(frozen=True)
class DynamicsResult:
    """Dynamics of every (direction, drive, rotation) combination."""

    series: List[DynamicsSeries]

    def get(
        self,
        direction: Mode,
        epsilon: Optional[float] = None,
        omega: Optional[float] = None,
    ) -> DynamicsSeries:
        """Series of one combination.

        Raises:
            KeyError: when no series matches.

        """
        for series in self.series:
            if series.direction is not Mode(direction):
                continue
            if epsilon is not None and series.epsilon != epsilon:
                continue
            if omega is not None and series.omega != omega:
                continue
            return series

        raise KeyError(f"no series for {direction}, {epsilon}, {omega}")

    def nonreciprocity_ratio(
        self, epsilon: Optional[float] = None, omega: Optional[float] = None
    ) -> float:
        """Final-time ``F_CCW / F_CW``; ``nan`` without both directions."""
        try:
            ccw = self.get(Mode.CCW, epsilon, omega).qfi[-1]
            cw = self.get(Mode.CW, epsilon, omega).qfi[-1]
        except KeyError:
            return math.nan

        if cw == 0.0:
            return math.inf if ccw > 0.0 else math.nan

        result = float(ccw / cw)
        return result

    def summary(self) -> List[Dict]:
        """Final-time values of every series."""
        results = []
        for series in self.series:
            results.append(
                {
                    "direction": series.direction.value,
                    "epsilon": series.epsilon,
                    "omega_hz": _hz(series.omega),
                    "t_end": float(series.times[-1]),
                    "qfi": float(series.qfi[-1]),
                    "n_photons": float(series.n_photons[-1]),
                    "n_phonons": float(series.n_phonons[-1]),
                    "resource_ratio": float(series.resource_ratio[-1]),
                    "nonreciprocity_ratio": self.nonreciprocity_ratio(
                        series.epsilon, series.omega
                    ),
                }
            )
        return results


def _point_params(
    p: PhysicalParams, direction: Mode, **changes: float
) -> PhysicalParams:
    result = p.replace(drive_direction=direction, **changes)
    return result


def run_qfi_dynamics(
    spec: SweepSpec, progress_bar: Optional[AbstractProgressBar] = None
) -> DynamicsResult:
    """Fisher information and excitation numbers along time.

    Every combination of drive direction, drive amplitude and rotation
    rate is integrated from the initial state at the constant detuning
    of ``spec.params`` and sampled at ``spec.values``.

    Args:
        spec: Time sweep.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        One series per combination.

    Raises:
        ConfigError: when `spec` is not a time sweep.

    """
    _raise_for_axis(spec, SweepAxis.TIME)
    combinations = list(
        itertools.product(spec.directions, spec.epsilons, spec.omegas)
    )

    def run(combination: Tuple[Mode, float, float]) -> DynamicsSeries:
        direction, epsilon, omega = combination
        p = _point_params(spec.params, direction, epsilon=epsilon)
        trajectory = integrate(
            initial_state(p, cold_start=spec.cold_start),
            DetuningSchedule.constant(p.delta_c),
            spec.t_end,
            spec.tol,
            p,
            sample_times=spec.values,
            omega=omega,
        )
        samples = [trajectory.at(t) for t in spec.values]
        log.info(
            "dynamics %s eps=%g omega=%g Hz done",
            direction.value,
            epsilon,
            _hz(omega),
        )
        result = DynamicsSeries(
            direction=direction,
            epsilon=epsilon,
            omega=omega,
            times=np.array(spec.values),
            qfi=np.array(
                [qfi_from_sample(s, p, spec.frame).value for s in samples]
            ),
            n_photons=np.array([s.amps.photon_number for s in samples]),
            n_phonons=np.array([s.amps.phonon_number for s in samples]),
        )
        return result

    series = parallel_map(run, combinations, spec.threads, progress_bar)
    result = DynamicsResult(series=series)
    return result


# ----------------------------------------------------------------------------
# Steady State
# ----------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class SteadyPoint:
    """Steady Fisher information of one operating point.

    Attributes:
        qfi: Fisher information at the end of the run.
        n_photons: Intracavity photon number.
        n_phonons: Coherent phonon number.
        t: Time at which the run stopped.
        relative_change: Relative change of the Fisher information over
            the trailing part of the run.
        converged: Whether the steady criterion was met.

    """

    qfi: float
    n_photons: float
    n_phonons: float
    t: float
    relative_change: float
    converged: bool = True

    @property
    def delta_omega(self) -> float:
        """Cramer-Rao precision."""
        return precision(self.qfi)

    @property
    def resource_ratio(self) -> float:
        """Fisher information per excitation."""
        return resource_ratio(self.qfi, self.n_photons, self.n_phonons)

    def to_dict(self) -> dict:
        """Serialize to a flat dictionary."""
        return dataclasses.asdict(self)


def _relative_change(early: float, late: float) -> float:
    if late == 0.0:
        return 0.0 if early == 0.0 else math.inf

    return abs(late - early) / abs(late)


def _steady_point(
    state: AugmentedState, value: float, change: float, converged: bool
) -> SteadyPoint:
    result = SteadyPoint(
        qfi=value,
        n_photons=state.amps.photon_number,
        n_phonons=state.amps.phonon_number,
        t=state.t,
        relative_change=change,
        converged=converged,
    )
    return result


def steady_state_qfi(
    p: PhysicalParams,
    omega: Optional[float] = None,
    tol: float = settings.DEFAULT_TOLERANCE,
    frame: DisplacementFrame = DisplacementFrame.OUTPUT,
    cold_start: bool = False,
    relative_change: float = settings.STEADY_RELATIVE_CHANGE,
    initial_horizon: float = settings.STEADY_INITIAL_HORIZON,
    horizon_cap: float = settings.STEADY_HORIZON_CAP,
) -> SteadyPoint:
    """Integrate until the Fisher information settles.

    The run is extended by doubling the horizon, up to `horizon_cap`,
    until the Fisher information changes by less than `relative_change`
    over the trailing tenth of the horizon.

    Args:
        p: Physical parameters; ``p.delta_c`` is held constant.
        omega (optional): Rotation rate (rad/s). Default ``p.rotation``.
        tol (optional): Integrator tolerance. Default ``1e-8``.
        frame (optional): Displacement frame. Default ``output``.
        cold_start (optional): Start the mechanics in its ground state.
            Default ``False``.
        relative_change (optional): Convergence threshold. Default
            ``0.01``.
        initial_horizon (optional): First horizon. Default ``20``.
        horizon_cap (optional): Largest horizon. Default ``200``.

    Returns:
        Steady point.

    Raises:
        NotConverged: when the criterion fails at `horizon_cap`; the
            diagnostics hold the last point.

    """
    omega = p.rotation if omega is None else omega
    schedule = DetuningSchedule.constant(p.delta_c)
    state = initial_state(p, cold_start=cold_start)
    horizon = min(initial_horizon, horizon_cap)
    trailing = 1.0 - settings.STEADY_TRAILING_FRACTION
    while True:
        probe = horizon * trailing
        samples = [probe] if probe > state.t else None
        trajectory = integrate(
            state, schedule, horizon, tol, p, sample_times=samples, omega=omega
        )
        early = qfi_from_sample(trajectory.at(probe), p, frame).value
        state = trajectory.final
        late = qfi_from_sample(state, p, frame).value
        change = _relative_change(early, late)
        if change < relative_change:
            return _steady_point(state, late, change, True)

        if horizon >= horizon_cap:
            point = _steady_point(state, late, change, False)
            diagnostics = point.to_dict()
            diagnostics.update(delta_c=p.delta_c, omega=omega)
            message = (
                f"Fisher information still changing by {change:.3g} at "
                f"t = {horizon:g} (delta_c = {p.delta_c:g})"
            )
            raise NotConverged(message, diagnostics=diagnostics)

        log.debug("relative change %.3g at t = %g", change, horizon)
        horizon = min(2.0 * horizon, horizon_cap)


def _steady_or_marked(p: PhysicalParams, omega: float, spec: SweepSpec):
    try:
        result = steady_state_qfi(
            p, omega, spec.tol, spec.frame, spec.cold_start
        )
    except NotConverged as error:
        log.warning("%s", error)
        fields = {
            field.name: error.diagnostics[field.name]
            for field in dataclasses.fields(SteadyPoint)
        }
        result = SteadyPoint(**fields)

    return result


# ----------------------------------------------------------------------------
# Sweeps
# ----------------------------------------------------------------------------
VALUE_COLUMNS = {
    SweepAxis.DETUNING: "delta_c",
    SweepAxis.EPSILON: "epsilon",
    SweepAxis.OMEGA: "omega_hz",
}


@dataclasses.dataclass(frozen=True)
class SweepPoint:
    """Steady point of one swept value."""

    direction: Mode
    omega: float
    value: float
    steady: SteadyPoint

    @property
    def relative_error(self) -> float:
        """``delta_omega / |omega|``; ``inf`` at zero rotation."""
        if self.omega == 0.0:
            return math.inf

        return self.steady.delta_omega / abs(self.omega)


@dataclasses.dataclass(frozen=True)
class SweepResult:
    """Steady points of a detuning, amplitude or rotation sweep."""

    axis: SweepAxis
    points: List[SweepPoint]

    @property
    def columns(self) -> Tuple[str, ...]:
        result = (
            "direction",
            "omega_hz",
            VALUE_COLUMNS[self.axis],
            "qfi",
            "delta_omega",
            "relative_error",
            "n_photons",
            "n_phonons",
            "resource_ratio",
            "t_steady",
            "converged",
        )
        if self.axis is SweepAxis.OMEGA:
            result = result[:2] + result[3:]
        return result

    def rows(self) -> List[list]:
        """Rows matching ``columns``."""
        results = []
        for point in self.points:
            steady = point.steady
            row = [
                point.direction.value,
                _hz(point.omega),
                _hz(point.value)
                if self.axis is SweepAxis.OMEGA
                else point.value,
                steady.qfi,
                steady.delta_omega,
                point.relative_error,
                steady.n_photons,
                steady.n_phonons,
                steady.resource_ratio,
                steady.t,
                int(steady.converged),
            ]
            if self.axis is SweepAxis.OMEGA:
                del row[1]
            results.append(row)
        return results

    def to_frame(self):
        """Return the sweep as a ``pandas.DataFrame``.

        Raises:
            ModuleNotFoundError: when pandas is not installed.

        """
        pandas = importlib.import_module("pandas")
        result = pandas.DataFrame(self.rows(), columns=list(self.columns))
        return result

    def curve(
        self, direction: Mode, omega: Optional[float] = None
    ) -> List[SweepPoint]:
        """Points of one direction and rotation, ordered by value."""
        results = [
            point
            for point in self.points
            if point.direction is Mode(direction)
            and (omega is None or point.omega == omega)
        ]
        return sorted(results, key=lambda point: point.value)

    def optimum(
        self, direction: Mode, omega: Optional[float] = None
    ) -> SweepPoint:
        """Point of best precision along one curve.

        Raises:
            ValueError: when the curve is empty.

        """
        points = self.curve(direction, omega)
        if not points:
            raise ValueError(f"no points for {direction} at {omega}")

        result = min(points, key=lambda point: point.steady.delta_omega)
        return result


def run_detuning_sweep(
    spec: SweepSpec, progress_bar: Optional[AbstractProgressBar] = None
) -> SweepResult:
    """Steady Fisher information against pump-cavity detuning.

    Points that miss the steady criterion are kept and marked as not
    converged.

    Args:
        spec: Detuning sweep over every direction and rotation rate.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        Sweep result.

    """
    _raise_for_axis(spec, SweepAxis.DETUNING)
    items = list(itertools.product(spec.directions, spec.omegas, spec.values))

    def run(item: Tuple[Mode, float, float]) -> SweepPoint:
        direction, omega, delta_c = item
        p = _point_params(spec.params, direction, delta_c=delta_c)
        steady = _steady_or_marked(p, omega, spec)
        return SweepPoint(direction, omega, delta_c, steady)

    points = parallel_map(run, items, spec.threads, progress_bar)
    result = SweepResult(axis=SweepAxis.DETUNING, points=points)
    return result


def run_omega_sweep(
    spec: SweepSpec, progress_bar: Optional[AbstractProgressBar] = None
) -> SweepResult:
    """Steady Fisher information across the rotation band.

    Args:
        spec: Rotation sweep; values in rad/s.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        Sweep result with the relative error ``delta_omega / |omega|``.

    """
    _raise_for_axis(spec, SweepAxis.OMEGA)
    items = list(itertools.product(spec.directions, spec.values))

    def run(item: Tuple[Mode, float]) -> SweepPoint:
        direction, omega = item
        p = _point_params(spec.params, direction)
        steady = _steady_or_marked(p, omega, spec)
        return SweepPoint(direction, omega, omega, steady)

    points = parallel_map(run, items, spec.threads, progress_bar)
    result = SweepResult(axis=SweepAxis.OMEGA, points=points)
    return result


# ----------------------------------------------------------------------------
# Scaling
# ----------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ScalingResult:
    """Steady Fisher information against photon number.

    Attributes:
        sweep: Steady points over the drive amplitudes.
        slope: Log-log slope of ``F`` against ``N_p``; ``nan`` with
            fewer than two usable points.

    """

    sweep: SweepResult
    slope: float

    @property
    def columns(self) -> Tuple[str, ...]:
        return self.sweep.columns

    def rows(self) -> List[list]:
        return self.sweep.rows()


def _log_log_slope(x: Sequence[float], y: Sequence[float]) -> float:
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    usable = (x > 0.0) & (y > 0.0) & np.isfinite(x) & np.isfinite(y)
    if np.count_nonzero(usable) < 2:
        return math.nan

    slope, _ = np.polyfit(np.log(x[usable]), np.log(y[usable]), 1)
    return float(slope)


def run_scaling_study(
    spec: SweepSpec, progress_bar: Optional[AbstractProgressBar] = None
) -> ScalingResult:
    """Steady Fisher information over drive amplitudes.

    Uses the first direction and rotation rate of `spec`.

    Args:
        spec: Amplitude sweep.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        Steady points and the log-log slope of ``F`` against ``N_p``.

    Raises:
        NotConverged: when a point misses the steady criterion.

    """
    _raise_for_axis(spec, SweepAxis.EPSILON)
    direction, omega = spec.directions[0], spec.omegas[0]

    def run(epsilon: float) -> SweepPoint:
        p = _point_params(spec.params, direction, epsilon=epsilon)
        steady = steady_state_qfi(
            p, omega, spec.tol, spec.frame, spec.cold_start
        )
        return SweepPoint(direction, omega, epsilon, steady)

    points = parallel_map(run, spec.values, spec.threads, progress_bar)
    slope = _log_log_slope(
        [point.steady.n_photons for point in points],
        [point.steady.qfi for point in points],
    )
    log.info("log-log slope of F against N_p: %.4g", slope)
    result = ScalingResult(
        sweep=SweepResult(axis=SweepAxis.EPSILON, points=points),
        slope=slope,
    )
    return result


# ----------------------------------------------------------------------------
# Baseline
# ----------------------------------------------------------------------------
BASELINE_COLUMNS = ("delta_c", "max_average_qfi", "t_at_max")
TRACE_COLUMNS = ("t", "average_qfi")


@dataclasses.dataclass(frozen=True)
class BaselinePoint:
    """Constant-detuning episode."""

    delta_c: float
    trace: EpisodeTrace

    @property
    def max_average_qfi(self) -> float:
        """Largest band average over the episode."""
        return self.trace.best_average_qfi

    @property
    def t_at_max(self) -> float:
        """Time of the largest band average."""
        index = int(np.argmax(self.trace.average_qfi))
        return self.trace.times[index]


@dataclasses.dataclass(frozen=True)
class BaselineResult:
    """Constant-detuning baselines of the band-averaged information."""

    points: List[BaselinePoint]

    @property
    def columns(self) -> Tuple[str, ...]:
        return BASELINE_COLUMNS

    @property
    def best(self) -> BaselinePoint:
        """Baseline with the largest band average."""
        return max(self.points, key=lambda point: point.max_average_qfi)

    def rows(self) -> List[List[float]]:
        """Rows matching ``columns``."""
        results = [
            [point.delta_c, point.max_average_qfi, point.t_at_max]
            for point in self.points
        ]
        return results

    def best_trace_rows(self) -> List[List[float]]:
        """Band-average trace of the best baseline."""
        trace = self.best.trace
        return [list(row) for row in zip(trace.times, trace.average_qfi)]


def baseline_env(spec: SweepSpec) -> GyroEnv:
    """Environment matching the episode fields of `spec`."""
    result = GyroEnv(
        spec.params,
        omega_grid=spec.omega_grid,
        n_steps=spec.n_steps,
        dtau=spec.dtau,
        action_bounds=spec.action_bounds,
        tol=spec.tol,
        frame=spec.frame,
        cold_start=spec.cold_start,
    )
    return result


def run_fixed_detuning_baseline(
    spec: SweepSpec, progress_bar: Optional[AbstractProgressBar] = None
) -> BaselineResult:
    """Band-averaged information of constant-detuning episodes.

    Each detuning is played as a constant-action episode of the control
    environment, so a policy that always chooses it reproduces the
    baseline exactly.

    Args:
        spec: Detuning sweep with the episode fields set.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        Baselines and the best of them.

    Raises:
        ConfigError: when a detuning lies outside the action bounds.
        NumericalError: when an episode is aborted.

    """
    _raise_for_axis(spec, SweepAxis.DETUNING)
    low, high = spec.action_bounds
    outside = [value for value in spec.values if not low <= value <= high]
    if outside:
        message = f"detunings {outside} lie outside {spec.action_bounds}"
        raise ConfigError(message)

    def run(delta_c: float) -> BaselinePoint:
        trace = run_episode(baseline_env(spec), lambda _: delta_c)
        if trace.diagnostics is not None:
            raise NumericalError(
                f"baseline episode at delta_c = {delta_c:g} aborted",
                diagnostics=trace.diagnostics,
            )
        return BaselinePoint(delta_c=delta_c, trace=trace)

    points = parallel_map(run, spec.values, spec.threads, progress_bar)
    result = BaselineResult(points=points)
    log.info(
        "best constant detuning %g with average %.4g",
        result.best.delta_c,
        result.best.max_average_qfi,
    )
    return result
