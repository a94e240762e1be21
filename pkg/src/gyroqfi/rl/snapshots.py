# -*- coding: utf-8 -*-
"""Policy Snapshots.

Snapshots are versioned JSON documents. Weights are stored per tensor, in
``state_dict`` order (actor layers, actor log-std, critic layers), as flat
row-major arrays together with their shapes.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import os
import pathlib
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

# Third-Party Imports
import numpy as np
import torch

# Local Imports
from .networks import ActorCritic
from .ppo import PpoConfig
from .. import settings
from ..errors import ConfigError
from ..wrappers import JsonFileWrapper

__all__ = [
    "PolicySnapshot",
    "load_snapshot",
    "model_from_snapshot",
    "save_snapshot",
    "snapshot_from_model",
]


@dataclasses.dataclass(frozen=True)
class PolicySnapshot:
    """Serializable state of a trained policy.

    Attributes:
        config: Hyperparameters.
        observation_dim: Length of observations.
        action_bounds: Lower and upper action bound.
        weights: Tensors as ``{"name", "shape", "values"}`` records.
        step_count: PPO iterations completed.
        normalizers: Observation feature scales of the environment.
        format_version: Snapshot format.

    """

    config: PpoConfig
    observation_dim: int
    action_bounds: Tuple[float, float]
    weights: List[Dict[str, Any]]
    step_count: int = 0
    normalizers: Dict[str, Any] = dataclasses.field(default_factory=dict)
    format_version: int = settings.SNAPSHOT_FORMAT_VERSION

    def to_dict(self) -> Dict[str, Any]:
        """Return the snapshot as a JSON-compatible dictionary."""
        result = {
            "format_version": self.format_version,
            "config": self.config.to_dict(),
            "observation_dim": self.observation_dim,
            "action_bounds": list(self.action_bounds),
            "step_count": self.step_count,
            "normalizers": self.normalizers,
            "weights": self.weights,
        }
        return result

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> PolicySnapshot:
        """Rebuild a snapshot.

        Raises:
            ConfigError: when the format version is not supported or a
                field is missing.

        """
        version = values.get("format_version")
        if version != settings.SNAPSHOT_FORMAT_VERSION:
            message = f"unsupported snapshot format version {version!r}"
            raise ConfigError(message)

        try:
            result = cls(
                config=PpoConfig.from_dict(values["config"]),
                observation_dim=int(values["observation_dim"]),
                action_bounds=tuple(values["action_bounds"]),
                weights=list(values["weights"]),
                step_count=int(values.get("step_count", 0)),
                normalizers=dict(values.get("normalizers", {})),
                format_version=version,
            )
        except KeyError as error:
            message = f"snapshot is missing field {error.args[0]!r}"
            raise ConfigError(message) from error

        return result


def snapshot_from_model(
    model: ActorCritic,
    cfg: PpoConfig,
    step_count: int = 0,
    normalizers: Optional[Dict[str, Any]] = None,
) -> PolicySnapshot:
    """Capture the weights of `model`."""
    weights = [
        {
            "name": name,
            "shape": list(tensor.shape),
            "values": tensor.detach().cpu().numpy().ravel().tolist(),
        }
        for name, tensor in model.state_dict().items()
    ]
    result = PolicySnapshot(
        config=cfg,
        observation_dim=model.observation_dim,
        action_bounds=tuple(model.action_bounds),
        weights=weights,
        step_count=step_count,
        normalizers=dict(normalizers or {}),
    )
    return result


def model_from_snapshot(snapshot: PolicySnapshot) -> ActorCritic:
    """Rebuild the networks stored in `snapshot`.

    Raises:
        ConfigError: when a stored tensor does not match the architecture.

    """
    cfg = snapshot.config
    model = ActorCritic(
        snapshot.observation_dim,
        cfg.hidden_sizes,
        snapshot.action_bounds,
        cfg.log_std_init,
    )
    expected = model.state_dict()
    state = {}
    for record in snapshot.weights:
        name = record["name"]
        if name not in expected:
            raise ConfigError(f"unexpected tensor {name!r} in snapshot")

        values = np.asarray(record["values"], dtype=np.float32)
        tensor = torch.from_numpy(values.reshape(record["shape"]))
        if tensor.shape != expected[name].shape:
            raise ConfigError(f"tensor {name!r} has the wrong shape")
        state[name] = tensor

    missing = sorted(set(expected).difference(state))
    if missing:
        raise ConfigError(f"snapshot is missing tensor {missing[0]!r}")

    model.load_state_dict(state)
    model.eval()
    return model


def save_snapshot(path: os.PathLike, snapshot: PolicySnapshot) -> None:
    """Write `snapshot` to a `.json` file."""
    wrapper = JsonFileWrapper(pathlib.Path(path))
    with wrapper.open("w") as file:
        file.dump(snapshot.to_dict())


def load_snapshot(path: os.PathLike) -> PolicySnapshot:
    """Read a snapshot from a `.json` file."""
    wrapper = JsonFileWrapper(pathlib.Path(path), read_only=True)
    with wrapper.open("r") as file:
        result = PolicySnapshot.from_dict(file.load())
    return result
