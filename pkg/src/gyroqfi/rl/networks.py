# -*- coding: utf-8 -*-
"""Actor and Critic Networks.

Both networks are tanh multilayer perceptrons. The actor parameterizes a
Gaussian policy whose mean is squashed into the action bounds and whose
log standard deviation is a free, state-independent parameter.

"""

# Standard Library Imports
from typing import Optional
from typing import Sequence
from typing import Tuple

# Third-Party Imports
import torch
from torch import nn
from torch.distributions import Normal

__all__ = ["Actor", "ActorCritic", "Critic", "build_mlp"]


def build_mlp(
    in_features: int, hidden_sizes: Sequence[int], out_features: int
) -> nn.Sequential:
    """Stack linear layers with tanh activations between them."""
    layers = []
    width = in_features
    for size in hidden_sizes:
        layers.extend([nn.Linear(width, size), nn.Tanh()])
        width = size
    layers.append(nn.Linear(width, out_features))
    result = nn.Sequential(*layers)
    return result


class Actor(nn.Module):
    """Gaussian policy over a bounded scalar action.

    Args:
        observation_dim: Length of observations.
        hidden_sizes: Widths of the hidden layers.
        action_bounds: Lower and upper action bound.
        log_std_init (optional): Initial log standard deviation.
            Default ``-0.5``.

    """

    def __init__(
        self,
        observation_dim: int,
        hidden_sizes: Sequence[int],
        action_bounds: Tuple[float, float],
        log_std_init: float = -0.5,
    ) -> None:
        super().__init__()
        self.body = build_mlp(observation_dim, hidden_sizes, 1)
        self.log_std = nn.Parameter(torch.full((1,), float(log_std_init)))
        low, high = action_bounds
        self.register_buffer(
            "center", torch.tensor([0.5 * (low + high)], dtype=torch.float32)
        )
        self.register_buffer(
            "half_width",
            torch.tensor([0.5 * (high - low)], dtype=torch.float32),
        )

    def mean(self, observations: torch.Tensor) -> torch.Tensor:
        """Mean action, inside the bounds."""
        raw = self.body(observations)
        result = self.center + self.half_width * torch.tanh(raw)
        return result.squeeze(-1)

    def distribution(self, observations: torch.Tensor) -> Normal:
        """Action distribution at `observations`."""
        mean = self.mean(observations)
        result = Normal(mean, self.log_std.exp().expand_as(mean))
        return result


class Critic(nn.Module):
    """State-value estimate."""

    def __init__(
        self, observation_dim: int, hidden_sizes: Sequence[int]
    ) -> None:
        super().__init__()
        self.body = build_mlp(observation_dim, hidden_sizes, 1)

    def forward(self, observations: torch.Tensor) -> torch.Tensor:
        """Values of `observations`."""
        return self.body(observations).squeeze(-1)


class ActorCritic(nn.Module):
    """Actor and critic trained by one optimizer.

    Args:
        observation_dim: Length of observations.
        hidden_sizes: Widths of the hidden layers of both networks.
        action_bounds: Lower and upper action bound.
        log_std_init (optional): Initial log standard deviation.
            Default ``-0.5``.

    """

    def __init__(
        self,
        observation_dim: int,
        hidden_sizes: Sequence[int],
        action_bounds: Tuple[float, float],
        log_std_init: float = -0.5,
    ) -> None:
        super().__init__()
        self.observation_dim = observation_dim
        self.hidden_sizes = tuple(hidden_sizes)
        self.action_bounds = tuple(action_bounds)
        self.actor = Actor(
            observation_dim, hidden_sizes, action_bounds, log_std_init
        )
        self.critic = Critic(observation_dim, hidden_sizes)

    @torch.no_grad()
    def act(
        self,
        observation: torch.Tensor,
        deterministic: bool = False,
        generator: Optional[torch.Generator] = None,
    ) -> Tuple[float, float, float]:
        """Choose an action for one observation.

        Args:
            observation: Observation vector.
            deterministic (optional): Return the mean action. Default
                ``False``.
            generator (optional): Random generator for sampling. Default
                ``None``.

        Returns:
            Action, its log probability and the state value.

        """
        batch = observation.unsqueeze(0)
        distribution = self.actor.distribution(batch)
        if deterministic:
            action = distribution.mean
        else:
            noise = torch.randn(distribution.mean.shape, generator=generator)
            action = distribution.mean + distribution.stddev * noise
        log_prob = distribution.log_prob(action)
        value = self.critic(batch)
        return float(action[0]), float(log_prob[0]), float(value[0])

    def evaluate(
        self, observations: torch.Tensor, actions: torch.Tensor
    ) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
        """Log probabilities, entropies and values of a batch."""
        distribution = self.actor.distribution(observations)
        log_probs = distribution.log_prob(actions)
        entropy = distribution.entropy()
        values = self.critic(observations)
        return log_probs, entropy, values
