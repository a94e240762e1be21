# -*- coding: utf-8 -*-
"""Advantage Estimation.

Generalized advantage estimation over complete episodes::

    delta_t = r_t + gamma V(s_{t+1}) (1 - done_t) - V(s_t)
    A_t = delta_t + gamma lambda (1 - done_t) A_{t+1}

Value targets are ``A_t + V(s_t)``.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import numpy as np

__all__ = [
    "RolloutBatch",
    "advantage_estimates",
    "normalize_advantages",
]


def advantage_estimates(
    rewards: Sequence[float],
    values: Sequence[float],
    dones: Sequence[bool],
    discount: float,
    gae_lambda: float,
    last_value: float = 0.0,
) -> Tuple[np.ndarray, np.ndarray]:
    """Advantages and value targets of consecutive transitions.

    Args:
        rewards: Rewards ``r_t``.
        values: Critic values ``V(s_t)``.
        dones: Whether the episode ended after step ``t``.
        discount: Discount factor.
        gae_lambda: Bias-variance parameter.
        last_value (optional): Value after the final transition when the
            batch ends mid-episode. Default ``0.0``.

    Returns:
        Advantages and value targets.

    """
    rewards = np.asarray(rewards, dtype=float)
    values = np.asarray(values, dtype=float)
    dones = np.asarray(dones, dtype=float)
    if not rewards.shape == values.shape == dones.shape:
        raise ValueError("rewards, values and dones must have equal length")

    advantages = np.zeros_like(rewards)
    running = 0.0
    next_value = last_value
    for t in reversed(range(rewards.size)):
        nonterminal = 1.0 - dones[t]
        delta = rewards[t] + discount * next_value * nonterminal - values[t]
        running = delta + discount * gae_lambda * nonterminal * running
        advantages[t] = running
        next_value = values[t]

    targets = advantages + values
    return advantages, targets


def normalize_advantages(advantages: np.ndarray) -> np.ndarray:
    """Shift to zero mean and scale to unit standard deviation.

    A constant input maps to zeros.

    """
    advantages = np.asarray(advantages, dtype=float)
    centered = advantages - advantages.mean()
    std = centered.std()
    if std < 1e-12:
        return centered

    result = centered / std
    return result


@dataclasses.dataclass(frozen=True)
class RolloutBatch:
    """Transitions collected with one policy.

    Attributes:
        observations: Observations, shape ``(T, observation_dim)``.
        actions: Sampled (unclamped) actions.
        log_probs: Log probabilities under the collecting policy.
        advantages: Advantage estimates.
        targets: Value targets.

    """

    observations: np.ndarray
    actions: np.ndarray
    log_probs: np.ndarray
    advantages: np.ndarray
    targets: np.ndarray

    def __post_init__(self) -> None:
        size = len(self.actions)
        if size == 0:
            raise ValueError("batch must not be empty")

        for name in ("observations", "log_probs", "advantages", "targets"):
            if len(getattr(self, name)) != size:
                message = f"{name} must have {size} entries"
                raise ValueError(message)

    def __len__(self) -> int:
        return len(self.actions)
