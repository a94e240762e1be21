# -*- coding: utf-8 -*-
"""Run Configuration.

A run is fully determined by its parameter file, the ``--override`` list,
the seed and the thread count. The effective parameter block (file with
overrides applied) is what the manifest records.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import json
import os
import pathlib
from typing import Any
from typing import Dict
from typing import Iterable
from typing import Optional
from typing import Tuple

# Third-Party Imports
import numpy as np

# Local Imports
from .schema import PPO_SECTION
from .schema import canonical_key
from .schema import convert_value
from .schema import normalize_block
from .. import settings
from ..errors import ConfigError
from ..errors import MissingFileError
from ..experiments import SweepAxis
from ..experiments import SweepSpec
from ..metrology import DisplacementFrame
from ..model import Mode
from ..model import OmegaUnit
from ..model import PhysicalParams
from ..model import rotation_from_input
from ..model import thermal_occupation
from ..model import to_ratio
from ..oracle import FockConfig
from ..rl import BanditEnv
from ..rl import GyroEnv
from ..rl import PpoConfig
from ..rl import default_omega_grid
from ..utils import slugify
from ..utils import to_integer
from ..wrappers import JsonFileWrapper

__all__ = [
    "COMMANDS",
    "RunConfig",
    "apply_overrides",
    "build_params",
    "load_parameters",
    "resolve_threads",
]


COMMANDS = (
    "simulate",
    "sweep",
    "scaling",
    "baseline",
    "train",
    "eval",
    "oracle-check",
    "selftest",
)

# Ratio key, SI key, field of PhysicalParams.
_RATES = (
    ("kappa_over_omega_m", "kappa_si", "kappa"),
    ("gamma_m_over_omega_m", "gamma_m_si", "gamma_m"),
    ("j_over_omega_m", "j_si", "j_coupling"),
    ("epsilon_over_omega_m", "epsilon_si", "epsilon"),
)

_DIRECT = {
    "refractive_index": "refractive_index",
    "mass_kg": "mass",
    "radius_m": "radius",
    "wavelength_m": "wavelength",
    "delta_c_over_omega_m": "delta_c",
    "g0_over_omega_m": "g0_override",
    "sagnac_slope": "sagnac_slope_override",
}


def load_parameters(path: os.PathLike) -> Dict[str, Any]:
    """Read and validate a parameter file.

    ``//`` and ``#`` line comments are stripped before parsing.

    Args:
        path: JSON parameter file.

    Returns:
        Normalized parameter block.

    Raises:
        MissingFileError: when `path` does not exist.
        ConfigError: when the file is not a JSON object.
        UnknownKeyError: when a key is not in the schema.

    """
    path = pathlib.Path(path)
    if not path.is_file():
        raise MissingFileError(path)

    try:
        with JsonFileWrapper(path, read_only=True).open("r") as file:
            raw = file.load()
    except (json.JSONDecodeError, ValueError) as error:
        raise ConfigError(f"cannot parse {path}: {error}") from error

    if not isinstance(raw, dict):
        raise ConfigError(f"{path} must contain a JSON object")

    result = normalize_block(raw)
    return result


def apply_overrides(
    block: Dict[str, Any], overrides: Iterable[str]
) -> Dict[str, Any]:
    """Apply ``key=value`` overrides on top of `block`.

    ``ppo.<name>=value`` sets one PPO hyperparameter.

    Raises:
        ConfigError: when an override has no ``=``.
        UnknownKeyError: when a key is not in the schema.

    """
    result = dict(block)
    result[PPO_SECTION] = dict(block.get(PPO_SECTION, {}))
    for override in overrides:
        key, separator, value = override.partition("=")
        key = key.strip()
        if not separator or not key:
            raise ConfigError(f"override '{override}' is not key=value")

        if key.startswith(PPO_SECTION + "."):
            name = key[len(PPO_SECTION) + 1 :]
            result[PPO_SECTION][name] = convert_value(name, value, ppo=True)
        else:
            result[canonical_key(key)] = convert_value(key, value)

    if not result[PPO_SECTION]:
        del result[PPO_SECTION]
    return result


def build_params(block: Dict[str, Any]) -> PhysicalParams:
    """Physical parameters of a normalized block.

    Raises:
        ConfigError: when a value violates a physical bound.

    """
    omega_m = block.get("omega_m_rad_s", settings.DEFAULT_OMEGA_M)
    fields: Dict[str, Any] = {"omega_m": omega_m}
    for ratio_key, si_key, name in _RATES:
        if ratio_key in block:
            fields[name] = block[ratio_key]
        elif si_key in block:
            fields[name] = to_ratio(block[si_key], omega_m)

    for key, name in _DIRECT.items():
        if key in block:
            fields[name] = block[key]

    if "n_bar_m" in block:
        fields["n_bar_m"] = block["n_bar_m"]
    elif "temperature_k" in block:
        try:
            fields["n_bar_m"] = thermal_occupation(
                omega_m, block["temperature_k"]
            )
        except ValueError as error:
            raise ConfigError(str(error)) from error

    if "omega_rad_s" in block:
        fields["rotation"] = block["omega_rad_s"]
    elif "omega_hz" in block:
        fields["rotation"] = rotation_from_input(
            block["omega_hz"], block.get("omega_input_unit", OmegaUnit.HZ)
        )

    if "drive" in block:
        fields["drive_direction"] = Mode(block["drive"])

    try:
        result = PhysicalParams(**fields)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"invalid physical parameters: {error}") from error

    return result


def resolve_threads(value: Optional[int] = None) -> int:
    """Thread count from the flag, the environment, or ``1``.

    Raises:
        ConfigError: when the count is not a positive integer.

    """
    source = "--threads"
    if value is None:
        value = os.environ.get(settings.THREADS_ENVIRONMENT_VARIABLE)
        source = settings.THREADS_ENVIRONMENT_VARIABLE

    if value is None:
        return 1

    try:
        result = to_integer(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"{source}: {error}") from error

    if result < 1:
        raise ConfigError(f"{source} must be >= 1, got {result}")

    return result


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Resolved command-line run.

    Args:
        command: Command name.
        output_dir: Directory receiving every output.
        block: Effective parameter block (file with overrides applied).
        params_file (optional): Parameter file. Default ``None``.
        overrides (optional): Overrides as given. Default ``()``.
        seed (optional): Seed. Default ``0``.
        threads (optional): Width of the parallel map. Default ``1``.
        plot_data (optional): Also write two-column ``.dat`` files.
            Default ``False``.

    Raises:
        ConfigError: when `command` is unknown or `output_dir` is not a
            writable directory.

    """

    command: str
    output_dir: pathlib.Path
    block: Dict[str, Any] = dataclasses.field(default_factory=dict)
    params_file: Optional[pathlib.Path] = None
    overrides: Tuple[str, ...] = ()
    seed: int = 0
    threads: int = 1
    plot_data: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command '{self.command}'")

        output_dir = pathlib.Path(self.output_dir)
        if output_dir.exists() and not output_dir.is_dir():
            raise ConfigError(f"{output_dir} is not a directory")

        if output_dir.exists() and not os.access(output_dir, os.W_OK):
            raise ConfigError(f"{output_dir} is not writable")

        object.__setattr__(self, "output_dir", output_dir)
        object.__setattr__(self, "overrides", tuple(self.overrides))

    @classmethod
    def from_files(
        cls,
        command: str,
        output_dir: os.PathLike,
        params_file: Optional[os.PathLike] = None,
        overrides: Iterable[str] = (),
        **kwargs: Any,
    ) -> RunConfig:
        """Load `params_file` and apply `overrides`."""
        path = pathlib.Path(params_file) if params_file else None
        block = load_parameters(path) if path else {}
        overrides = tuple(overrides)
        result = cls(
            command=command,
            output_dir=pathlib.Path(output_dir),
            block=apply_overrides(block, overrides),
            params_file=path,
            overrides=overrides,
            **kwargs,
        )
        return result

    @property
    def stem(self) -> str:
        """Stem of output file names."""
        name = self.params_file.stem if self.params_file else self.command
        return slugify(name)

    @property
    def params(self) -> PhysicalParams:
        """Physical parameters."""
        return build_params(self.block)

    def get(self, key: str, default: Any = None) -> Any:
        """Value of a canonical key."""
        return self.block.get(key, default)

    def to_manifest(self) -> Dict[str, Any]:
        """Run description recorded in the manifest."""
        result = {
            "command": self.command,
            "params_file": str(self.params_file or ""),
            "overrides": list(self.overrides),
            "effective_parameters": self.block,
            "physical_parameters": self.params.to_dict(),
            "seed": self.seed,
            "threads": self.threads,
        }
        return result

    # ------------------------------------------------------------------------
    # Studies
    # ------------------------------------------------------------------------
    def _directions(self) -> Tuple[Mode, ...]:
        return tuple(Mode(d) for d in self.get("directions", []))

    def _omegas(self) -> Tuple[float, ...]:
        hz = self.get("omega_values_hz", [])
        unit = self.get("omega_input_unit", OmegaUnit.HZ)
        return tuple(rotation_from_input(value, unit) for value in hz)

    def _common(self) -> Dict[str, Any]:
        result = {
            "params": self.params,
            "directions": self._directions(),
            "tol": self.get("tol", settings.DEFAULT_TOLERANCE),
            "frame": DisplacementFrame(
                self.get("frame", DisplacementFrame.OUTPUT.value)
            ),
            "cold_start": self.get("cold_start", False),
            "threads": self.threads,
        }
        return result

    def time_spec(self) -> SweepSpec:
        """Dynamics run sampled evenly on ``[0, t_end]``."""
        t_end = self.get("t_end_over_omega_m", 20.0)
        samples = self.get("samples", 101)
        if samples < 2:
            raise ConfigError(f"samples must be >= 2, got {samples}")

        result = SweepSpec(
            axis=SweepAxis.TIME,
            values=tuple(np.linspace(0.0, t_end, samples)),
            epsilons=tuple(self.get("epsilon_values", [])),
            **self._common(),
        )
        return result

    def _delta_c_values(self, bounds: Tuple[float, float], points: int):
        if "delta_c_values" in self.block:
            return tuple(self.block["delta_c_values"])

        low = self.get("delta_c_min_over_omega_m", bounds[0])
        high = self.get("delta_c_max_over_omega_m", bounds[1])
        if points < 2 or not low < high:
            raise ConfigError("detuning grid needs >= 2 points and min < max")

        return tuple(np.linspace(low, high, points))

    def detuning_spec(self) -> SweepSpec:
        """Steady-state sweep over the detuning grid."""
        values = self._delta_c_values(
            settings.DEFAULT_ACTION_BOUNDS, self.get("delta_c_points", 61)
        )
        result = SweepSpec(
            axis=SweepAxis.DETUNING,
            values=values,
            omegas=self._omegas(),
            **self._common(),
        )
        return result

    def omega_spec(self) -> SweepSpec:
        """Steady-state sweep over ``omega_values_hz``."""
        values = self._omegas() or tuple(self._omega_grid())
        result = SweepSpec(
            axis=SweepAxis.OMEGA, values=values, **self._common()
        )
        return result

    def scaling_spec(self) -> SweepSpec:
        """Steady-state sweep over ``epsilon_values``."""
        values = self.get("epsilon_values", [1000.0, 2000.0, 4000.0, 6000.0])
        result = SweepSpec(
            axis=SweepAxis.EPSILON,
            values=tuple(values),
            omegas=self._omegas()[:1],
            **self._common(),
        )
        return result

    def _action_bounds(self) -> Tuple[float, float]:
        low, high = settings.DEFAULT_ACTION_BOUNDS
        result = (
            self.get("action_min_over_omega_m", low),
            self.get("action_max_over_omega_m", high),
        )
        if not result[0] < result[1]:
            raise ConfigError(f"action bounds must increase, got {result}")

        return result

    def _omega_grid(self):
        try:
            result = default_omega_grid(
                self.get("grid_points", settings.DEFAULT_GRID_POINTS),
                (
                    self.get("band_min_hz", settings.DEFAULT_BAND_HZ[0]),
                    self.get("band_max_hz", settings.DEFAULT_BAND_HZ[1]),
                ),
                self.get("zero_guard", False),
                self.get("omega_input_unit", OmegaUnit.HZ),
            )
        except ValueError as error:
            raise ConfigError(str(error)) from error

        return result

    def baseline_spec(self) -> SweepSpec:
        """Constant-detuning episodes over the action grid."""
        bounds = self._action_bounds()
        values = self._delta_c_values(bounds, self.get("baseline_points", 31))
        result = SweepSpec(
            axis=SweepAxis.DETUNING,
            values=values,
            omega_grid=tuple(self._omega_grid()),
            n_steps=self.get("n_steps", settings.DEFAULT_EPISODE_STEPS),
            dtau=self.get("dtau_over_omega_m", settings.DEFAULT_STEP_DURATION),
            action_bounds=bounds,
            **self._common(),
        )
        return result

    # ------------------------------------------------------------------------
    # Control
    # ------------------------------------------------------------------------
    def environment(self):
        """Training environment: the bandit or the gyroscope ensemble."""
        if self.get("bandit", False):
            return BanditEnv(
                optimum=self.get("bandit_optimum", 0.7),
                action_bounds=self._action_bounds(),
            )

        try:
            result = GyroEnv(
                self.params,
                omega_grid=self._omega_grid(),
                n_steps=self.get("n_steps", settings.DEFAULT_EPISODE_STEPS),
                dtau=self.get(
                    "dtau_over_omega_m", settings.DEFAULT_STEP_DURATION
                ),
                action_bounds=self._action_bounds(),
                reward_scale=self.get(
                    "reward_scale", settings.DEFAULT_REWARD_SCALE
                ),
                tol=self.get("tol", settings.DEFAULT_TOLERANCE),
                terminal_reward=self.get("terminal_reward", False),
                frame=self.get("frame", DisplacementFrame.OUTPUT.value),
                cold_start=self.get("cold_start", False),
            )
        except (TypeError, ValueError) as error:
            raise ConfigError(f"invalid environment: {error}") from error

        return result

    def ppo_config(self) -> PpoConfig:
        """Hyperparameters; the run seed wins over ``ppo.seed``."""
        values = dict(self.get(PPO_SECTION, {}))
        values["seed"] = self.seed
        try:
            result = PpoConfig.from_dict(values)
        except (TypeError, ValueError) as error:
            raise ConfigError(f"invalid PPO configuration: {error}") from error

        return result

    def fock_config(self) -> FockConfig:
        """Truncation of the density-matrix integrator."""
        try:
            result = FockConfig(
                n_cav_ccw=self.get("fock_ccw", 8),
                n_cav_cw=self.get("fock_cw", 8),
                n_mech=self.get("fock_mech", 8),
                dt=self.get("oracle_dt", settings.MAX_ORACLE_STEP),
                dissipation=self.get("dissipation", True),
            )
        except (TypeError, ValueError) as error:
            raise ConfigError(f"invalid truncation: {error}") from error

        return result
