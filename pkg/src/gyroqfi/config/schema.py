# -*- coding: utf-8 -*-
"""Parameter Schema.

Every key of a parameter file, with its converter, unit and meaning.
Physical inputs carry their unit in the key name; rates given in units of
the mechanical frequency win over their SI counterparts.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
from typing import Any
from typing import Callable
from typing import Dict
from typing import Mapping
from typing import Optional

# Local Imports
from ..errors import ConfigError
from ..errors import UnknownKeyError
from ..metrology import DisplacementFrame
from ..model import Mode
from ..model import OmegaUnit
from ..rl import PpoConfig
from ..utils import to_boolean
from ..utils import to_float
from ..utils import to_float_list
from ..utils import to_integer
from ..utils import to_text_list

__all__ = [
    "ALIASES",
    "PARAMETER_SCHEMA",
    "PPO_SECTION",
    "ParameterSpec",
    "canonical_key",
    "convert_value",
    "describe_schema",
    "normalize_block",
]


PPO_SECTION = "ppo"


@dataclasses.dataclass(frozen=True)
class ParameterSpec:
    """One parameter-file key."""

    key: str
    converter: Callable[[Any], Any]
    unit: str
    description: str
    section: str = "physics"


def _direction(value: Any) -> str:
    return Mode(str(value).strip().lower()).value


def _directions(value: Any) -> list:
    return [_direction(item) for item in to_text_list(value)]


def _frame(value: Any) -> str:
    return DisplacementFrame(str(value).strip().lower()).value


def _omega_unit(value: Any) -> str:
    return OmegaUnit(str(value).strip().lower()).value


def _spec(*args: Any, **kwargs: Any) -> ParameterSpec:
    return ParameterSpec(*args, **kwargs)


_SPECS = [
    # physics
    _spec("refractive_index", to_float, "1", "refractive index"),
    _spec("mass_kg", to_float, "kg", "resonator mass"),
    _spec("radius_m", to_float, "m", "resonator radius"),
    _spec("wavelength_m", to_float, "m", "pump wavelength"),
    _spec("omega_m_rad_s", to_float, "rad/s", "mechanical frequency"),
    _spec("kappa_over_omega_m", to_float, "omega_m", "cavity decay rate"),
    _spec("kappa_si", to_float, "rad/s", "cavity decay rate"),
    _spec(
        "gamma_m_over_omega_m", to_float, "omega_m", "mechanical decay rate"
    ),
    _spec("gamma_m_si", to_float, "rad/s", "mechanical decay rate"),
    _spec("j_over_omega_m", to_float, "omega_m", "backscattering coupling"),
    _spec("j_si", to_float, "rad/s", "backscattering coupling"),
    _spec("epsilon_over_omega_m", to_float, "omega_m", "drive amplitude"),
    _spec("epsilon_si", to_float, "rad/s", "drive amplitude"),
    _spec("n_bar_m", to_float, "1", "thermal phonon occupation"),
    _spec("temperature_k", to_float, "K", "bath temperature (sets n_bar_m)"),
    _spec(
        "delta_c_over_omega_m", to_float, "omega_m", "pump-cavity detuning"
    ),
    _spec("drive", _direction, "ccw|cw", "driven optical mode"),
    _spec("omega_hz", to_float, "Hz", "rotation rate"),
    _spec("omega_rad_s", to_float, "rad/s", "rotation rate"),
    _spec(
        "omega_input_unit",
        _omega_unit,
        "hz|rad_per_s",
        "how values of the _hz rotation keys are read",
    ),
    _spec("g0_over_omega_m", to_float, "omega_m", "coupling override"),
    _spec("sagnac_slope", to_float, "1", "Sagnac slope override"),
    # run
    _spec("t_end_over_omega_m", to_float, "1/omega_m", "final time", "run"),
    _spec("samples", to_integer, "count", "sample times in [0, t_end]", "run"),
    _spec("tol", to_float, "1", "integrator tolerance", "run"),
    _spec("frame", _frame, "output|intracavity", "displacement", "run"),
    _spec("cold_start", to_boolean, "bool", "mechanics in ground", "run"),
    # sweeps
    _spec("directions", _directions, "ccw|cw list", "drives", "sweep"),
    _spec(
        "epsilon_values", to_float_list, "omega_m list", "drives", "sweep"
    ),
    _spec("omega_values_hz", to_float_list, "Hz list", "rotations", "sweep"),
    _spec(
        "delta_c_values", to_float_list, "omega_m list", "detunings", "sweep"
    ),
    _spec("delta_c_min_over_omega_m", to_float, "omega_m", "grid", "sweep"),
    _spec("delta_c_max_over_omega_m", to_float, "omega_m", "grid", "sweep"),
    _spec("delta_c_points", to_integer, "count", "grid points", "sweep"),
    # episodes
    _spec("grid_points", to_integer, "count", "rotation grid", "episode"),
    _spec("band_min_hz", to_float, "Hz", "lower band edge", "episode"),
    _spec("band_max_hz", to_float, "Hz", "upper band edge", "episode"),
    _spec("zero_guard", to_boolean, "bool", "avoid omega = 0", "episode"),
    _spec("n_steps", to_integer, "count", "episode length", "episode"),
    _spec(
        "dtau_over_omega_m", to_float, "1/omega_m", "step length", "episode"
    ),
    _spec(
        "action_min_over_omega_m", to_float, "omega_m", "bound", "episode"
    ),
    _spec(
        "action_max_over_omega_m", to_float, "omega_m", "bound", "episode"
    ),
    _spec("baseline_points", to_integer, "count", "action grid", "episode"),
    _spec("reward_scale", to_float, "1", "reward divisor", "episode"),
    _spec("terminal_reward", to_boolean, "bool", "reward at end", "episode"),
    _spec("iterations", to_integer, "count", "PPO iterations", "episode"),
    _spec("bandit", to_boolean, "bool", "train on the bandit", "episode"),
    _spec("bandit_optimum", to_float, "1", "bandit optimum", "episode"),
    # oracle
    _spec("fock_ccw", to_integer, "levels", "ccw truncation", "oracle"),
    _spec("fock_cw", to_integer, "levels", "cw truncation", "oracle"),
    _spec("fock_mech", to_integer, "levels", "phonon truncation", "oracle"),
    _spec("oracle_dt", to_float, "1/omega_m", "fixed step", "oracle"),
    _spec("dissipation", to_boolean, "bool", "apply baths", "oracle"),
]

PARAMETER_SCHEMA: Dict[str, ParameterSpec] = {
    spec.key: spec for spec in _SPECS
}

ALIASES = {
    "epsilon": "epsilon_over_omega_m",
    "kappa": "kappa_over_omega_m",
    "gamma_m": "gamma_m_over_omega_m",
    "J": "j_over_omega_m",
    "delta_c": "delta_c_over_omega_m",
    "t_end": "t_end_over_omega_m",
    "dtau": "dtau_over_omega_m",
}


def _ppo_converters() -> Dict[str, Callable[[Any], Any]]:
    results: Dict[str, Callable[[Any], Any]] = {}
    for name, default in PpoConfig().to_dict().items():
        if isinstance(default, list):
            results[name] = lambda v: [to_integer(x) for x in to_text_list(v)]
        elif isinstance(default, int):
            results[name] = to_integer
        else:
            results[name] = to_float
    return results


def canonical_key(key: str) -> str:
    """Resolve aliases and reject unknown keys.

    Raises:
        UnknownKeyError: when `key` is not in the schema.

    """
    key = ALIASES.get(key, key)
    if key not in PARAMETER_SCHEMA:
        raise UnknownKeyError(key)

    return key


def convert_value(key: str, value: Any, ppo: bool = False) -> Any:
    """Convert `value` with the converter of `key`.

    Raises:
        UnknownKeyError: when `key` is not in the schema.
        ConfigError: when the value does not convert.

    """
    if ppo:
        converters = _ppo_converters()
        if key not in converters:
            raise UnknownKeyError(f"{PPO_SECTION}.{key}")
        converter = converters[key]
    else:
        converter = PARAMETER_SCHEMA[canonical_key(key)].converter

    try:
        result = converter(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"invalid value for '{key}': {error}") from error

    return result


def normalize_block(block: Mapping[str, Any]) -> Dict[str, Any]:
    """Validate a raw parameter block.

    Args:
        block: Keys as written in a parameter file.

    Returns:
        Block with canonical keys and converted values.

    Raises:
        UnknownKeyError: when a key is not in the schema.
        ConfigError: when a value does not convert.

    """
    result: Dict[str, Any] = {}
    for key, value in block.items():
        if key == PPO_SECTION:
            if not isinstance(value, Mapping):
                raise ConfigError(f"'{PPO_SECTION}' must be an object")

            result[PPO_SECTION] = {
                name: convert_value(name, item, ppo=True)
                for name, item in value.items()
            }
            continue

        result[canonical_key(key)] = convert_value(key, value)

    return result


def describe_schema(width: Optional[int] = None) -> str:
    """Help text listing every key with its unit."""
    width = width or max(len(key) for key in PARAMETER_SCHEMA) + 2
    lines = ["parameter keys:"]
    for spec in _SPECS:
        lines.append(
            f"  {spec.key:<{width}} [{spec.unit}] {spec.description}"
        )
    ppo_keys = ", ".join(PpoConfig().to_dict())
    lines.append(f"  {PPO_SECTION + '.<key>':<{width}} PPO: {ppo_keys}")
    aliases = ", ".join(f"{a}={k}" for a, k in ALIASES.items())
    lines.append(f"aliases: {aliases}")
    result = "\n".join(lines)
    return result
