# -*- coding: utf-8 -*-
"""Self Test.

Consistency checks of the moment solver against closed forms, finite
differences, symmetry and the density-matrix integrator.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import logging
import math
import time
from typing import Callable
from typing import List
from typing import Optional
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .dynamics import DetuningSchedule
from .dynamics import initial_state
from .dynamics import integrate
from .dynamics import linear_cavity_steady_state
from .errors import BaseError
from .metrology import qfi_from_sample
from .model import Mode
from .model import PhysicalParams
from .model import rotation_from_input
from .oracle import FockConfig
from .oracle import evolve
from .oracle import vacuum_thermal_state
from .progress import AbstractProgressBar
from .progress import NullProgressBar

__all__ = [
    "CHECKS",
    "CheckResult",
    "SELFTEST_COLUMNS",
    "check_finite_differences",
    "check_linear_cavity",
    "check_no_drive",
    "check_oracle",
    "check_reciprocity",
    "check_thermal_relaxation",
    "oracle_deviation",
    "run_selftest",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")

SELFTEST_COLUMNS = ("check", "passed", "error", "tolerance", "seconds")

# Rotation rate of the checks.
OMEGA_CHECK = rotation_from_input(2000.0)


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.

    Attributes:
        name: Check name.
        passed: Whether the error stayed within tolerance.
        error: Largest observed error.
        tolerance: Allowed error.
        seconds: Runtime.
        message: Failure reason when the check raised.

    """

    name: str
    passed: bool
    error: float
    tolerance: float
    seconds: float = 0.0
    message: str = ""

    @property
    def label(self) -> str:
        """``PASS`` or ``FAIL``."""
        return "PASS" if self.passed else "FAIL"

    def to_row(self) -> list:
        return [
            self.name,
            int(self.passed),
            self.error,
            self.tolerance,
            self.seconds,
        ]


def _relative(value: float, reference: float) -> float:
    scale = max(abs(reference), 1e-300)
    return abs(value - reference) / scale


def check_linear_cavity(tol: float = 1e-8) -> Tuple[float, float]:
    """Fisher information of the bare cavity against the closed form.

    Without optomechanics, backscattering or thermal noise the output is
    coherent and ``F = 4 kappa sum |d alpha / d Omega|^2``.

    Returns:
        Relative error and tolerance.

    """
    p = PhysicalParams(
        epsilon=50.0,
        j_coupling=0.0,
        n_bar_m=0.0,
        g0_override=0.0,
        rotation=OMEGA_CHECK,
        drive_direction=Mode.CCW,
    )
    _, d_alpha = linear_cavity_steady_state(p)
    expected = 4.0 * p.kappa * float(np.sum(np.abs(d_alpha) ** 2))
    trajectory = integrate(
        initial_state(p),
        DetuningSchedule.constant(p.delta_c),
        120.0,
        1e-11,
        p,
    )
    value = qfi_from_sample(trajectory.final, p).value
    return _relative(value, expected), tol


def check_thermal_relaxation(tol: float = 1e-8) -> Tuple[float, float]:
    """Undriven phonon number relaxing towards the bath occupation.

    Returns:
        Largest relative error over 20 samples and tolerance.

    """
    p = PhysicalParams(epsilon=0.0, n_bar_m=5.0)
    times = np.linspace(10.0, 200.0, 20)
    trajectory = integrate(
        initial_state(p, cold_start=True),
        DetuningSchedule.constant(p.delta_c),
        times[-1],
        1e-12,
        p,
        sample_times=times,
    )
    errors = []
    for t in times:
        expected = p.n_bar_m * (1.0 - math.exp(-p.gamma_m * t))
        value = trajectory.at(t).X[2].real
        errors.append(_relative(value, expected))
    return max(errors), tol


def check_finite_differences(tol: float = 1e-4) -> Tuple[float, float]:
    """Sensitivity equations against central finite differences.

    Returns:
        Largest relative error over entries above ``1e-6`` and tolerance.

    """
    p = PhysicalParams(epsilon=2000.0, delta_c=0.5)
    schedule = DetuningSchedule.constant(p.delta_c)
    start = initial_state(p)
    t_end = 10.0
    step = 1e-3 * OMEGA_CHECK

    def run(omega: float):
        return integrate(start, schedule, t_end, 1e-11, p, omega=omega).final

    centre = run(OMEGA_CHECK)
    upper, lower = run(OMEGA_CHECK + step), run(OMEGA_CHECK - step)
    exact = np.concatenate([centre.d_amps.to_array(), centre.dX.x])
    numeric = np.concatenate(
        [
            upper.amps.to_array() - lower.amps.to_array(),
            upper.X.x - lower.X.x,
        ]
    ) / (2.0 * step)
    mask = np.abs(exact) > 1e-6
    if not np.any(mask):
        return math.inf, tol

    errors = np.abs(numeric[mask] - exact[mask]) / np.abs(exact[mask])
    return float(np.max(errors)), tol


def check_reciprocity(tol: float = 1e-6) -> Tuple[float, float]:
    """Mirror symmetry ``F_ccw(Omega) == F_cw(-Omega)``.

    Returns:
        Relative error and tolerance.

    """
    values = []
    for direction, omega in ((Mode.CCW, OMEGA_CHECK), (Mode.CW, -OMEGA_CHECK)):
        p = PhysicalParams(epsilon=500.0, drive_direction=direction)
        trajectory = integrate(
            initial_state(p),
            DetuningSchedule.constant(p.delta_c),
            10.0,
            1e-10,
            p,
            omega=omega,
        )
        values.append(qfi_from_sample(trajectory.final, p).value)
    return _relative(values[1], values[0]), tol


def check_no_drive(tol: float = 1e-30) -> Tuple[float, float]:
    """Without a probe field there is no information about rotation.

    Returns:
        Largest Fisher information and tolerance.

    """
    p = PhysicalParams(epsilon=0.0, n_bar_m=1.0, rotation=OMEGA_CHECK)
    times = np.linspace(1.0, 10.0, 10)
    trajectory = integrate(
        initial_state(p),
        DetuningSchedule.constant(p.delta_c),
        times[-1],
        1e-8,
        p,
        sample_times=times,
    )
    values = [qfi_from_sample(trajectory.at(t), p).value for t in times]
    return float(max(values)), tol


def oracle_deviation(
    p: PhysicalParams,
    config: FockConfig,
    times: np.ndarray,
    tol: float = 1e-10,
) -> Tuple[np.ndarray, object, object]:
    """Absolute deviation of the 24 tracked expectations.

    Args:
        p: Physical parameters.
        config: Truncation of the density-matrix integrator.
        times: Sample times, ending at the final time.
        tol (optional): Moment-solver tolerance. Default ``1e-10``.

    Returns:
        Deviations of shape ``(len(times), 24)`` and both trajectories.

    """
    schedule = DetuningSchedule.constant(p.delta_c)
    moments = integrate(
        initial_state(p), schedule, times[-1], tol, p, sample_times=times
    )
    oracle = evolve(
        vacuum_thermal_state(config, p.n_bar_m),
        p,
        schedule,
        times[-1],
        config,
        sample_times=times,
    )
    rows = []
    for t in times:
        a, b = moments.at(t), oracle.at(t)
        rows.append(
            np.abs(
                np.concatenate(
                    [
                        a.amps.to_array() - b.amps.to_array(),
                        a.X.x - b.X.x,
                    ]
                )
            )
        )
    return np.array(rows), moments, oracle


def check_oracle(tol: float = 1e-3) -> Tuple[float, float]:
    """Moment solver against the density-matrix integrator.

    Returns:
        Largest absolute deviation and tolerance.

    """
    p = PhysicalParams(
        epsilon=0.2, j_coupling=0.0, n_bar_m=0.0, g0_override=0.02
    )
    deviation, _, _ = oracle_deviation(
        p, FockConfig(8, 8, 8), np.linspace(0.5, 10.0, 20)
    )
    return float(np.max(deviation)), tol


# Name, check, slow.
CHECKS: List[Tuple[str, Callable[[], Tuple[float, float]], bool]] = [
    ("linear_cavity", check_linear_cavity, False),
    ("thermal_relaxation", check_thermal_relaxation, False),
    ("finite_differences", check_finite_differences, False),
    ("reciprocity", check_reciprocity, False),
    ("no_drive", check_no_drive, False),
    ("oracle_equivalence", check_oracle, True),
]


def run_selftest(
    include_slow: bool = False,
    progress_bar: Optional[AbstractProgressBar] = None,
) -> List[CheckResult]:
    """Run the checks.

    Args:
        include_slow (optional): Include the density-matrix comparison.
            Default ``False``.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        One result per check; a check that raises fails.

    """
    selected = [c for c in CHECKS if include_slow or not c[2]]
    progress_bar = progress_bar or NullProgressBar(len(selected))
    results = []
    for name, check, _ in selected:
        started = time.perf_counter()
        try:
            error, tolerance = check()
        except BaseError as exc:
            log.warning("check %s raised %s", name, exc)
            result = CheckResult(
                name,
                False,
                math.nan,
                math.nan,
                time.perf_counter() - started,
                str(exc),
            )
        else:
            result = CheckResult(
                name,
                bool(error <= tolerance),
                error,
                tolerance,
                time.perf_counter() - started,
            )
        log.info("%s %s (error %.3g)", result.label, name, result.error)
        results.append(result)
        progress_bar.update()

    progress_bar.close()
    return results
