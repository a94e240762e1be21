# -*- coding: utf-8 -*-
"""Proximal Policy Optimization.

Each update maximizes ``L_clip - c1 L_value + c2 S`` over several passes
of shuffled minibatches, with

    L_clip = E[min(p A, clip(p, 1 - eps, 1 + eps) A)],  p = pi_new / pi_old

"""

# Standard Library Imports
from __future__ import annotations
import copy
import dataclasses
import logging
from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

# Third-Party Imports
import torch

# Local Imports
from .advantages import RolloutBatch
from .networks import ActorCritic
from ..errors import NonFiniteLoss
from ..errors import UnknownKeyError

__all__ = [
    "PpoConfig",
    "PpoLosses",
    "clipped_surrogate",
    "make_optimizer",
    "ppo_update",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")


@dataclasses.dataclass(frozen=True)
class PpoConfig:
    """Hyperparameters of the agent.

    Raises:
        ValueError: when `clip_epsilon` is outside ``(0, 1)`` or a count,
            rate or coefficient is not positive.

    """

    clip_epsilon: float = 0.2
    value_coeff: float = 0.5
    entropy_coeff: float = 0.01
    discount: float = 0.99
    gae_lambda: float = 0.95
    learning_rate: float = 3e-4
    epochs_per_update: int = 10
    minibatch_size: int = 64
    hidden_sizes: Tuple[int, ...] = (64, 64)
    episodes_per_update: int = 32
    max_grad_norm: float = 0.5
    log_std_init: float = -0.5
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "hidden_sizes", tuple(self.hidden_sizes))
        if not 0.0 < self.clip_epsilon < 1.0:
            value = self.clip_epsilon
            message = f"clip_epsilon must lie in (0, 1), got {value}"
            raise ValueError(message)

        for name in (
            "value_coeff",
            "discount",
            "gae_lambda",
            "learning_rate",
            "epochs_per_update",
            "minibatch_size",
            "episodes_per_update",
            "max_grad_norm",
        ):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")

        if self.entropy_coeff < 0:
            raise ValueError("entropy_coeff must be >= 0")

        if not self.hidden_sizes or min(self.hidden_sizes) < 1:
            raise ValueError("hidden_sizes must be positive widths")

        if self.seed < 0:
            raise ValueError("seed must be >= 0")

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> PpoConfig:
        """Build a config.

        Raises:
            UnknownKeyError: when `values` holds an unknown key.

        """
        known = {field.name for field in dataclasses.fields(cls)}
        unknown = sorted(set(values).difference(known))
        if unknown:
            raise UnknownKeyError(unknown[0])

        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        """Return the config as a plain dictionary."""
        result = dataclasses.asdict(self)
        result["hidden_sizes"] = list(self.hidden_sizes)
        return result

    def replace(self, **changes) -> PpoConfig:
        """Return a copy with `changes` applied."""
        return dataclasses.replace(self, **changes)


@dataclasses.dataclass(frozen=True)
class PpoLosses:
    """Mean losses of the last update."""

    policy_loss: float
    value_loss: float
    entropy: float
    approx_kl: float


def clipped_surrogate(
    ratio: torch.Tensor, advantages: torch.Tensor, clip_epsilon: float
) -> torch.Tensor:
    """Mean clipped surrogate objective."""
    unclipped = ratio * advantages
    clipped = torch.clamp(ratio, 1.0 - clip_epsilon, 1.0 + clip_epsilon)
    result = torch.min(unclipped, clipped * advantages).mean()
    return result


def make_optimizer(model: ActorCritic, cfg: PpoConfig) -> torch.optim.Adam:
    """Single Adam optimizer over actor and critic."""
    return torch.optim.Adam(model.parameters(), lr=cfg.learning_rate)


def _tensor(values) -> torch.Tensor:
    return torch.as_tensor(values, dtype=torch.float32)


def ppo_update(
    model: ActorCritic,
    optimizer: torch.optim.Optimizer,
    batch: RolloutBatch,
    cfg: PpoConfig,
    generator: Optional[torch.Generator] = None,
) -> PpoLosses:
    """Run one PPO update on `batch`.

    Args:
        model: Actor and critic, updated in place.
        optimizer: Optimizer over ``model.parameters()``.
        batch: Transitions with advantages and value targets.
        cfg: Hyperparameters.
        generator (optional): Random generator for minibatch shuffling.
            Default ``None``.

    Returns:
        Mean losses over the last epoch.

    Raises:
        NonFiniteLoss: when a loss becomes NaN or infinite; the weights
            and optimizer state are restored first.

    """
    model_state = copy.deepcopy(model.state_dict())
    optimizer_state = copy.deepcopy(optimizer.state_dict())
    observations = _tensor(batch.observations)
    actions = _tensor(batch.actions)
    old_log_probs = _tensor(batch.log_probs)
    advantages = _tensor(batch.advantages)
    targets = _tensor(batch.targets)

    size = len(batch)
    totals = {"policy": 0.0, "value": 0.0, "entropy": 0.0, "kl": 0.0}
    for epoch in range(cfg.epochs_per_update):
        totals = dict.fromkeys(totals, 0.0)
        order = torch.randperm(size, generator=generator)
        for start in range(0, size, cfg.minibatch_size):
            index = order[start : start + cfg.minibatch_size]
            log_probs, entropy, values = model.evaluate(
                observations[index], actions[index]
            )
            ratio = torch.exp(log_probs - old_log_probs[index])
            policy_loss = -clipped_surrogate(
                ratio, advantages[index], cfg.clip_epsilon
            )
            value_loss = torch.mean((values - targets[index]) ** 2)
            entropy_mean = entropy.mean()
            loss = (
                policy_loss
                + cfg.value_coeff * value_loss
                - cfg.entropy_coeff * entropy_mean
            )
            if not torch.isfinite(loss):
                model.load_state_dict(model_state)
                optimizer.load_state_dict(optimizer_state)
                raise NonFiniteLoss(
                    f"non-finite loss in epoch {epoch}",
                    diagnostics={
                        "epoch": epoch,
                        "policy_loss": float(policy_loss),
                        "value_loss": float(value_loss),
                    },
                )

            optimizer.zero_grad()
            loss.backward()
            torch.nn.utils.clip_grad_norm_(
                model.parameters(), cfg.max_grad_norm
            )
            optimizer.step()

            weight = len(index) / size
            totals["policy"] += weight * float(policy_loss)
            totals["value"] += weight * float(value_loss)
            totals["entropy"] += weight * float(entropy_mean)
            totals["kl"] += weight * float(
                torch.mean(old_log_probs[index] - log_probs.detach())
            )

    result = PpoLosses(
        policy_loss=totals["policy"],
        value_loss=totals["value"],
        entropy=totals["entropy"],
        approx_kl=totals["kl"],
    )
    log.debug("ppo update: %s", result)
    return result
