# -*- coding: utf-8 -*-
"""Dynamical State Types.

The augmented state packs, in order, the three classical amplitudes, their
rotation sensitivities, the 21 second-order fluctuation moments and the 21
moment sensitivities into one complex vector of length 48.

"""

# Standard Library Imports
from __future__ import annotations
import bisect
import dataclasses
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from ..errors import ScheduleError
from ..model import PhysicalParams

__all__ = [
    "AMPLITUDE_LABELS",
    "CONJUGATE_PAIRS",
    "MOMENT_COUNT",
    "MOMENT_LABELS",
    "MOMENT_PAIRS",
    "STATE_SIZE",
    "AugmentedState",
    "ClassicalAmplitudes",
    "DetuningSchedule",
    "MomentVector",
    "initial_state",
]


# Operator vector (a_ccw, a_cw, b, a_ccw^dag, a_cw^dag, b^dag).
OPERATOR_LABELS = ("a_ccw", "a_cw", "b", "a_ccw_dag", "a_cw_dag", "b_dag")

# Moment k is <v_p v_q> for MOMENT_PAIRS[k] == (p, q).
MOMENT_PAIRS = (
    (3, 0),
    (4, 1),
    (5, 2),
    (3, 3),
    (0, 0),
    (4, 4),
    (1, 1),
    (5, 5),
    (2, 2),
    (3, 1),
    (4, 0),
    (3, 4),
    (0, 1),
    (3, 2),
    (0, 5),
    (3, 5),
    (0, 2),
    (4, 2),
    (1, 5),
    (4, 5),
    (1, 2),
)
MOMENT_COUNT = len(MOMENT_PAIRS)
MOMENT_LABELS = tuple(
    f"{OPERATOR_LABELS[p]}*{OPERATOR_LABELS[q]}" for p, q in MOMENT_PAIRS
)
CONJUGATE_PAIRS = (
    (3, 4),
    (5, 6),
    (7, 8),
    (9, 10),
    (11, 12),
    (13, 14),
    (15, 16),
    (17, 18),
    (19, 20),
)
AMPLITUDE_LABELS = ("alpha_ccw", "alpha_cw", "beta")
STATE_SIZE = 2 * len(AMPLITUDE_LABELS) + 2 * MOMENT_COUNT


@dataclasses.dataclass(frozen=True)
class ClassicalAmplitudes:
    """Classical mean fields.

    Attributes:
        alpha_ccw: Counterclockwise optical amplitude.
        alpha_cw: Clockwise optical amplitude.
        beta: Mechanical amplitude.

    """

    alpha_ccw: complex = 0j
    alpha_cw: complex = 0j
    beta: complex = 0j

    @classmethod
    def from_array(cls, values: Sequence[complex]) -> ClassicalAmplitudes:
        """Build amplitudes from ``(alpha_ccw, alpha_cw, beta)``."""
        alpha_ccw, alpha_cw, beta = (complex(value) for value in values)
        result = cls(alpha_ccw, alpha_cw, beta)
        return result

    @property
    def photon_number(self) -> float:
        """Total intracavity photon number ``|alpha_ccw|^2 + |alpha_cw|^2``."""
        result = abs(self.alpha_ccw) ** 2 + abs(self.alpha_cw) ** 2
        return result

    @property
    def phonon_number(self) -> float:
        """Coherent phonon number ``|beta|^2``."""
        return abs(self.beta) ** 2

    def to_array(self) -> np.ndarray:
        """Return amplitudes as a complex array."""
        result = np.array(
            [self.alpha_ccw, self.alpha_cw, self.beta], dtype=complex
        )
        return result


@dataclasses.dataclass(frozen=True, eq=False)
class MomentVector:
    """Second-order fluctuation moments ordered as ``MOMENT_PAIRS``.

    Attributes:
        x: Complex array of length 21.

    """

    x: np.ndarray = dataclasses.field(
        default_factory=lambda: np.zeros(MOMENT_COUNT, dtype=complex)
    )

    def __post_init__(self) -> None:
        values = np.asarray(self.x, dtype=complex)
        if values.shape != (MOMENT_COUNT,):
            message = f"expected {MOMENT_COUNT} moments, got {values.shape}"
            raise ValueError(message)

        object.__setattr__(self, "x", values)

    def __getitem__(self, index: int) -> complex:
        return complex(self.x[index])

    def __len__(self) -> int:
        return MOMENT_COUNT

    def conjugate_pair_error(self) -> float:
        """Largest deviation from the conjugate-pair structure."""
        errors = [
            abs(self.x[i] - np.conj(self.x[j])) for i, j in CONJUGATE_PAIRS
        ]
        result = float(max(errors))
        return result


@dataclasses.dataclass(frozen=True, eq=False)
class AugmentedState:
    """Classical amplitudes, moments and their rotation sensitivities.

    Attributes:
        amps: Classical amplitudes.
        d_amps: Amplitude sensitivities (per rad/s).
        X: Fluctuation moments.
        dX: Moment sensitivities (per rad/s).
        t: Time (units of ``1/omega_m``).

    """

    amps: ClassicalAmplitudes
    d_amps: ClassicalAmplitudes
    X: MomentVector  # pylint: disable=invalid-name
    dX: MomentVector  # pylint: disable=invalid-name
    t: float = 0.0

    @classmethod
    def from_vector(cls, y: np.ndarray, t: float) -> AugmentedState:
        """Unpack a packed state vector.

        Args:
            y: Complex vector of length ``STATE_SIZE``.
            t: Time.

        Returns:
            Augmented state.

        """
        y = np.asarray(y, dtype=complex)
        if y.shape != (STATE_SIZE,):
            message = f"expected state of size {STATE_SIZE}, got {y.shape}"
            raise ValueError(message)

        result = cls(
            amps=ClassicalAmplitudes.from_array(y[0:3]),
            d_amps=ClassicalAmplitudes.from_array(y[3:6]),
            X=MomentVector(y[6 : 6 + MOMENT_COUNT].copy()),
            dX=MomentVector(y[6 + MOMENT_COUNT :].copy()),
            t=float(t),
        )
        return result

    def to_vector(self) -> np.ndarray:
        """Pack the state into one complex vector."""
        result = np.concatenate(
            [
                self.amps.to_array(),
                self.d_amps.to_array(),
                self.X.x,
                self.dX.x,
            ]
        )
        return result

    def scale_sensitivities(self, factor: float) -> AugmentedState:
        """Return a copy with every sensitivity multiplied by `factor`."""
        y = self.to_vector()
        y[3:6] *= factor
        y[6 + MOMENT_COUNT :] *= factor
        result = AugmentedState.from_vector(y, self.t)
        return result


class DetuningSchedule:
    """Piecewise-constant pump-cavity detuning.

    Each breakpoint ``(t_start, delta_c)`` holds on the left-closed
    interval up to the next breakpoint.

    Args:
        breakpoints: Breakpoints ``(t_start, delta_c)``.

    Raises:
        ScheduleError: when `breakpoints` is empty or not strictly
            increasing in time.

    """

    def __init__(self, breakpoints: Sequence[Tuple[float, float]]) -> None:
        points = [(float(t), float(value)) for t, value in breakpoints]
        if not points:
            raise ScheduleError("schedule requires at least one breakpoint")

        times = [t for t, _ in points]
        if any(later <= earlier for earlier, later in zip(times, times[1:])):
            raise ScheduleError("breakpoints must be strictly increasing")

        self._breakpoints = points
        self._times = times

    @classmethod
    def constant(
        cls, delta_c: float, t_start: float = 0.0
    ) -> DetuningSchedule:
        """Schedule holding one detuning from `t_start` on."""
        return cls([(t_start, delta_c)])

    @property
    def breakpoints(self) -> List[Tuple[float, float]]:
        """Breakpoints ``(t_start, delta_c)``."""
        return list(self._breakpoints)

    def __len__(self) -> int:
        return len(self._breakpoints)

    def __repr__(self) -> str:
        return f"DetuningSchedule({self._breakpoints!r})"

    def value_at(self, t: float) -> float:
        """Detuning in force at time `t`.

        Raises:
            ScheduleError: when `t` precedes the first breakpoint.

        """
        index = bisect.bisect_right(self._times, t) - 1
        if index < 0:
            message = f"time {t} precedes first breakpoint {self._times[0]}"
            raise ScheduleError(message)

        return self._breakpoints[index][1]

    def segments(
        self, t0: float, t_end: float
    ) -> Iterator[Tuple[float, float, float]]:
        """Split ``[t0, t_end]`` at the breakpoints.

        Yields:
            Tuples ``(t_start, t_stop, delta_c)``.

        """
        edges = [t for t in self._times if t0 < t < t_end]
        bounds = [t0, *edges, t_end]
        for start, stop in zip(bounds, bounds[1:]):
            yield start, stop, self.value_at(start)


def initial_state(
    p: PhysicalParams, cold_start: bool = False, t0: float = 0.0
) -> AugmentedState:
    """Initial condition of every trajectory.

    Optical and mechanical displacements start at zero; the mechanical
    mode starts in thermal equilibrium unless `cold_start` is set.

    Args:
        p: Physical parameters.
        cold_start (optional): Start the mechanics in its ground state.
            Default ``False``.
        t0 (optional): Start time. Default ``0.0``.

    Returns:
        Augmented state.

    """
    x = np.zeros(MOMENT_COUNT, dtype=complex)
    x[2] = 0.0 if cold_start else p.n_bar_m
    result = AugmentedState(
        amps=ClassicalAmplitudes(),
        d_amps=ClassicalAmplitudes(),
        X=MomentVector(x),
        dX=MomentVector(),
        t=t0,
    )
    return result
