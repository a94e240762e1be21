# -*- coding: utf-8 -*-
"""Control Environments.

``GyroEnv`` evolves an ensemble of gyroscopes, one per rotation rate of a
grid spanning the sensing band, under a shared detuning schedule chosen
one step at a time. The reward is the band-averaged Fisher information.
``BanditEnv`` is a one-step environment with a known optimum.

"""

# Standard Library Imports
from __future__ import annotations
import abc
import dataclasses
import logging
import math
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .. import settings
from ..dynamics import MOMENT_COUNT
from ..dynamics import AugmentedState
from ..dynamics import DetuningSchedule
from ..dynamics import initial_state
from ..dynamics import integrate
from ..errors import NumericalError
from ..metrology import DisplacementFrame
from ..metrology import average_qfi
from ..metrology import qfi_from_sample
from ..model import OmegaUnit
from ..model import PhysicalParams

__all__ = [
    "OBSERVATION_DIM",
    "AbstractEnvironment",
    "BanditEnv",
    "GyroEnv",
    "StepResult",
    "default_omega_grid",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")

# Amplitudes (6), moments (42), step fraction, previous action, log QFI.
OBSERVATION_DIM = 6 + 2 * MOMENT_COUNT + 3

# Half-width of the guard points replacing a zero rotation rate (Hz).
ZERO_GUARD_HZ = 50.0


@dataclasses.dataclass(frozen=True)
class StepResult:
    """Outcome of one environment step.

    Attributes:
        observation: Next observation.
        reward: Scaled reward.
        done: Whether the episode ended.
        info: Extra values; ``average_qfi`` and ``qfi`` for gyroscopes,
            ``diagnostics`` when a numerical failure ended the episode.

    """

    observation: np.ndarray
    reward: float
    done: bool
    info: Dict[str, Any] = dataclasses.field(default_factory=dict)


def default_omega_grid(
    points: int = settings.DEFAULT_GRID_POINTS,
    band_hz: Tuple[float, float] = settings.DEFAULT_BAND_HZ,
    zero_guard: bool = False,
    unit: OmegaUnit = OmegaUnit.HZ,
) -> np.ndarray:
    """Evenly spaced rotation rates across the sensing band.

    Args:
        points (optional): Number of grid points. Default ``9``.
        band_hz (optional): Band edges in Hz. Default ``(-4000, 4000)``.
        zero_guard (optional): Replace a zero rate by two guard points at
            +/- 50 Hz. Default ``False``.
        unit (optional): Unit of the band edges and guard points.
            Default ``hz``.

    Returns:
        Rotation rates in rad/s, strictly increasing.

    """
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")

    hz = np.linspace(band_hz[0], band_hz[1], points)
    if zero_guard and np.any(hz == 0.0):
        hz = np.sort(
            np.concatenate([hz[hz != 0.0], [-ZERO_GUARD_HZ, ZERO_GUARD_HZ]])
        )
    factor = 2.0 * math.pi if OmegaUnit(unit) is OmegaUnit.HZ else 1.0
    result = factor * hz
    return result


class AbstractEnvironment(abc.ABC):
    """Represents an episodic environment with a scalar bounded action."""

    def __init__(
        self, action_bounds: Tuple[float, float], n_steps: int
    ) -> None:
        low, high = (float(bound) for bound in action_bounds)
        if not low < high:
            message = f"action bounds must be increasing, got {action_bounds}"
            raise ValueError(message)

        if not isinstance(n_steps, int) or n_steps < 1:
            message = f"n_steps must be a positive integer, got {n_steps}"
            raise ValueError(message)

        self._action_bounds = (low, high)
        self._n_steps = n_steps
        self._step_index = 0

    @property
    def action_bounds(self) -> Tuple[float, float]:
        """Lower and upper action bound."""
        return self._action_bounds

    @property
    def n_steps(self) -> int:
        """Episode length."""
        return self._n_steps

    @property
    def step_index(self) -> int:
        """Steps taken in the current episode."""
        return self._step_index

    @property
    @abc.abstractmethod
    def observation_dim(self) -> int:
        """Length of observation vectors."""
        raise NotImplementedError

    def clamp(self, action: float) -> float:
        """Clamp `action` into the action bounds."""
        low, high = self._action_bounds
        result = float(min(max(float(action), low), high))
        return result

    @abc.abstractmethod
    def reset(self) -> np.ndarray:
        """Start a new episode and return the first observation."""
        raise NotImplementedError

    @abc.abstractmethod
    def step(self, action: float) -> StepResult:
        """Apply `action` for one step."""
        raise NotImplementedError

    def _raise_for_finished(self) -> None:
        if self._step_index >= self._n_steps:
            raise RuntimeError("episode finished; call reset() first")


class BanditEnv(AbstractEnvironment):
    """One-step environment rewarding ``-(a - optimum)^2``.

    Args:
        optimum (optional): Best action. Default ``0.7``.
        action_bounds (optional): Action bounds. Default ``(-1.5, 1.5)``.

    """

    def __init__(
        self,
        optimum: float = 0.7,
        action_bounds: Tuple[float, float] = settings.DEFAULT_ACTION_BOUNDS,
    ) -> None:
        super().__init__(action_bounds, n_steps=1)
        self._optimum = float(optimum)

    @property
    def optimum(self) -> float:
        """Best action."""
        return self._optimum

    @property
    def observation_dim(self) -> int:
        """Length of observation vectors."""
        return 1

    def reset(self) -> np.ndarray:
        self._step_index = 0
        return np.ones(1)

    def step(self, action: float) -> StepResult:
        self._raise_for_finished()
        action = self.clamp(action)
        self._step_index += 1
        reward = -((action - self._optimum) ** 2)
        result = StepResult(
            observation=np.ones(1),
            reward=reward,
            done=True,
            info={"action": action, "average_qfi": reward},
        )
        return result


class GyroEnv(AbstractEnvironment):
    """Ensemble of gyroscopes driven by a shared detuning schedule.

    Args:
        params: Physical parameters.
        omega_grid (optional): Rotation rates in rad/s, strictly
            increasing. Default 9 points over +/- 4 kHz.
        n_steps (optional): Episode length. Default ``10``.
        dtau (optional): Step duration (units of ``1/omega_m``).
            Default ``2.0``.
        action_bounds (optional): Detuning bounds (units of
            ``omega_m``). Default ``(-1.5, 1.5)``.
        reward_scale (optional): Divisor of the band-averaged Fisher
            information. Default ``1e17``.
        tol (optional): Integrator tolerance. Default ``1e-8``.
        terminal_reward (optional): Reward only the final step.
            Default ``False``.
        frame (optional): Displacement frame of the output state.
            Default ``output``.
        cold_start (optional): Start the mechanics in its ground state.
            Default ``False``.

    """

    def __init__(
        self,
        params: PhysicalParams,
        omega_grid: Optional[Sequence[float]] = None,
        n_steps: int = settings.DEFAULT_EPISODE_STEPS,
        dtau: float = settings.DEFAULT_STEP_DURATION,
        action_bounds: Tuple[float, float] = settings.DEFAULT_ACTION_BOUNDS,
        reward_scale: float = settings.DEFAULT_REWARD_SCALE,
        tol: float = settings.DEFAULT_TOLERANCE,
        terminal_reward: bool = False,
        frame: DisplacementFrame = DisplacementFrame.OUTPUT,
        cold_start: bool = False,
    ) -> None:
        super().__init__(action_bounds, n_steps)
        grid = np.asarray(
            default_omega_grid() if omega_grid is None else omega_grid,
            dtype=float,
        )
        if grid.size < 2 or np.any(np.diff(grid) <= 0.0):
            raise ValueError("omega_grid needs >= 2 increasing rates")

        if not dtau > 0.0:
            raise ValueError(f"dtau must be > 0, got {dtau}")

        self._params = params
        self._omega_grid = grid
        self._dtau = float(dtau)
        self.reward_scale = reward_scale
        self._tol = tol
        self._terminal_reward = terminal_reward
        self._frame = DisplacementFrame(frame)
        self._cold_start = cold_start
        self._reference = self._reference_index(grid)
        self._states: List[AugmentedState] = []
        self._previous_action = 0.0
        self._last_average = 0.0
        self._amplitude_scale = self._amplitude_scales(params)
        self.reset()

    @staticmethod
    def _reference_index(grid: np.ndarray) -> int:
        positive = np.flatnonzero(grid > 0.0)
        result = int(positive[0]) if positive.size else len(grid) - 1
        return result

    @staticmethod
    def _amplitude_scales(p: PhysicalParams) -> np.ndarray:
        # Largest linear-cavity amplitude and the matching displacement.
        optical = max(2.0 * p.epsilon / p.kappa, 1.0)
        mechanical = max(optical**2 * 1e-4, 1.0)
        result = np.array([optical] * 4 + [mechanical] * 2)
        return result

    @property
    def params(self) -> PhysicalParams:
        """Physical parameters."""
        return self._params

    @property
    def omega_grid(self) -> np.ndarray:
        """Rotation rates of the ensemble (rad/s)."""
        return self._omega_grid.copy()

    @property
    def dtau(self) -> float:
        """Step duration."""
        return self._dtau

    @property
    def horizon(self) -> float:
        """Episode duration (units of ``1/omega_m``)."""
        return self._dtau * self._n_steps

    @property
    def reward_scale(self) -> float:
        """Divisor of the band-averaged Fisher information."""
        return self._reward_scale

    @reward_scale.setter
    def reward_scale(self, value: float) -> None:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            message = f"expected type 'float', got {type(value)} instead"
            raise TypeError(message)

        if not value > 0.0:
            raise ValueError(f"reward_scale must be > 0, got {value}")

        self._reward_scale = float(value)

    @property
    def states(self) -> List[AugmentedState]:
        """Current ensemble states, ordered as `omega_grid`."""
        return list(self._states)

    @property
    def observation_dim(self) -> int:
        """Length of observation vectors."""
        return OBSERVATION_DIM

    def reset(self) -> np.ndarray:
        """Return every member to the initial condition."""
        start = initial_state(self._params, cold_start=self._cold_start)
        self._states = [start for _ in self._omega_grid]
        self._step_index = 0
        self._previous_action = 0.0
        self._last_average = 0.0
        return self.observe()

    def observe(self) -> np.ndarray:
        """Observation of the reference ensemble member.

        Amplitudes are divided by their linear-cavity scale, moments are
        compressed with ``arcsinh``, and the last three features are the
        episode fraction, the previous action over the bound and
        ``log1p`` of the scaled band average.

        """
        state = self._states[self._reference]
        amps = state.amps.to_array()
        amplitude_features = (
            np.column_stack([amps.real, amps.imag]).ravel()
            / self._amplitude_scale
        )
        moments = state.X.x
        moment_features = np.arcsinh(
            np.column_stack([moments.real, moments.imag]).ravel()
        )
        bound = max(abs(b) for b in self._action_bounds)
        extras = np.array(
            [
                self._step_index / self._n_steps,
                self._previous_action / bound,
                math.log1p(max(self._last_average, 0.0) / self._reward_scale),
            ]
        )
        result = np.concatenate([amplitude_features, moment_features, extras])
        return result

    def step(self, action: float) -> StepResult:
        """Advance every member by `dtau` at constant detuning `action`.

        Numerical failures end the episode with zero reward; the failure
        record is returned under ``info["diagnostics"]``.

        """
        self._raise_for_finished()
        action = self.clamp(action)
        t_start = self._states[0].t
        t_stop = t_start + self._dtau
        schedule = DetuningSchedule.constant(action, t_start)
        try:
            states = [
                integrate(
                    state,
                    schedule,
                    t_stop,
                    self._tol,
                    self._params,
                    omega=float(omega),
                ).final
                for state, omega in zip(self._states, self._omega_grid)
            ]
            values = [
                qfi_from_sample(state, self._params, self._frame).value
                for state in states
            ]
            average = average_qfi(list(zip(self._omega_grid, values)))

        except NumericalError as error:
            log.warning("episode aborted at t = %g: %s", t_start, error)
            self._step_index = self._n_steps
            result = StepResult(
                observation=self.observe(),
                reward=0.0,
                done=True,
                info={"action": action, "diagnostics": error.diagnostics},
            )
            return result

        self._states = states
        self._step_index += 1
        self._previous_action = action
        self._last_average = average
        done = self._step_index == self._n_steps
        scaled = average / self._reward_scale
        reward = scaled if done or not self._terminal_reward else 0.0
        result = StepResult(
            observation=self.observe(),
            reward=reward,
            done=done,
            info={
                "action": action,
                "average_qfi": average,
                "qfi": values,
                "t": t_stop,
            },
        )
        return result
