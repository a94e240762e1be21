# -*- coding: utf-8 -*-
"""Training Loop.

Alternates rollout collection with PPO updates, evaluates the mean policy
after every update and keeps the best snapshot by evaluation return.

"""

# Standard Library Imports
from __future__ import annotations
import dataclasses
import logging
import math
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

# Third-Party Imports
import numpy as np
import torch

# Local Imports
from .advantages import RolloutBatch
from .advantages import advantage_estimates
from .advantages import normalize_advantages
from .environments import AbstractEnvironment
from .environments import GyroEnv
from .networks import ActorCritic
from .ppo import PpoConfig
from .ppo import make_optimizer
from .ppo import ppo_update
from .snapshots import PolicySnapshot
from .snapshots import model_from_snapshot
from .snapshots import snapshot_from_model
from .. import settings
from ..metrology import precision
from ..progress import AbstractProgressBar
from ..progress import NullProgressBar

__all__ = [
    "EpisodeTrace",
    "LEARNING_CURVE_COLUMNS",
    "LearningCurveRecord",
    "PolicyEvaluation",
    "TrainingResult",
    "evaluate_policy",
    "run_episode",
    "train",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")

LEARNING_CURVE_COLUMNS = (
    "iteration",
    "eval_return",
    "mean_reward",
    "policy_loss",
    "value_loss",
    "entropy",
)


@dataclasses.dataclass(frozen=True)
class EpisodeTrace:
    """One episode played by a fixed decision rule.

    Attributes:
        actions: Clamped actions.
        times: Times after each step, preceded by ``0``.
        average_qfi: Band-averaged Fisher information at `times`; the
            first entry is ``0``.
        rewards: Rewards.
        final_qfi: Per-rate Fisher information after the last step.
        diagnostics: Failure record when the episode was aborted.

    """

    actions: List[float]
    times: List[float]
    average_qfi: List[float]
    rewards: List[float]
    final_qfi: List[float]
    diagnostics: Optional[Dict] = None

    @property
    def total_reward(self) -> float:
        """Undiscounted return."""
        return float(sum(self.rewards))

    @property
    def best_average_qfi(self) -> float:
        """Largest band average along the episode."""
        return float(max(self.average_qfi))


def run_episode(
    env: AbstractEnvironment, choose: Callable[[np.ndarray], float]
) -> EpisodeTrace:
    """Play one episode, asking `choose` for each action."""
    observation = env.reset()
    step_duration = getattr(env, "dtau", 1.0)
    actions, rewards = [], []
    times, averages = [0.0], [0.0]
    final_qfi: List[float] = []
    diagnostics = None
    done = False
    while not done:
        outcome = env.step(choose(observation))
        observation, done = outcome.observation, outcome.done
        actions.append(outcome.info["action"])
        rewards.append(outcome.reward)
        if "diagnostics" in outcome.info:
            diagnostics = outcome.info["diagnostics"]
            break

        times.append(times[-1] + step_duration)
        averages.append(outcome.info.get("average_qfi", outcome.reward))
        final_qfi = list(outcome.info.get("qfi", []))

    result = EpisodeTrace(
        actions=actions,
        times=times,
        average_qfi=averages,
        rewards=rewards,
        final_qfi=final_qfi,
        diagnostics=diagnostics,
    )
    return result


@dataclasses.dataclass(frozen=True)
class PolicyEvaluation:
    """Deterministic episode of a policy.

    Attributes:
        trace: Episode trace with the schedule and band-average trace.
        mean_precision: Mean over the rotation grid of ``1/sqrt(F)``
            after the last step; ``nan`` without Fisher information.

    """

    trace: EpisodeTrace
    mean_precision: float

    @property
    def eval_return(self) -> float:
        """Undiscounted return."""
        return self.trace.total_reward


def evaluate_policy(
    policy: Union[ActorCritic, PolicySnapshot], env: AbstractEnvironment
) -> PolicyEvaluation:
    """Play one episode with the mean action of `policy`.

    Args:
        policy: Networks or a snapshot of them.
        env: Environment.

    Returns:
        Schedule, band-average trace and mean precision.

    """
    model = (
        model_from_snapshot(policy)
        if isinstance(policy, PolicySnapshot)
        else policy
    )

    def choose(observation: np.ndarray) -> float:
        tensor = torch.as_tensor(observation, dtype=torch.float32)
        action, _, _ = model.act(tensor, deterministic=True)
        return action

    trace = run_episode(env, choose)
    mean_precision = (
        float(np.mean([precision(value) for value in trace.final_qfi]))
        if trace.final_qfi
        else math.nan
    )
    result = PolicyEvaluation(trace=trace, mean_precision=mean_precision)
    return result


@dataclasses.dataclass(frozen=True)
class LearningCurveRecord:
    """Metrics of one training iteration."""

    iteration: int
    eval_return: float
    mean_reward: float
    policy_loss: float
    value_loss: float
    entropy: float

    def to_row(self) -> list:
        """Values ordered as ``LEARNING_CURVE_COLUMNS``."""
        return [getattr(self, name) for name in LEARNING_CURVE_COLUMNS]


@dataclasses.dataclass(frozen=True)
class TrainingResult:
    """Outcome of a training run.

    Attributes:
        snapshot: Best snapshot by evaluation return.
        final_snapshot: Snapshot after the last iteration.
        curve: One record per iteration.
        best_evaluation: Evaluation of the best snapshot.

    """

    snapshot: PolicySnapshot
    final_snapshot: PolicySnapshot
    curve: List[LearningCurveRecord]
    best_evaluation: PolicyEvaluation


@dataclasses.dataclass
class _Episode:
    observations: List[np.ndarray] = dataclasses.field(default_factory=list)
    actions: List[float] = dataclasses.field(default_factory=list)
    log_probs: List[float] = dataclasses.field(default_factory=list)
    values: List[float] = dataclasses.field(default_factory=list)
    rewards: List[float] = dataclasses.field(default_factory=list)
    averages: List[float] = dataclasses.field(default_factory=list)


def _collect(
    env: AbstractEnvironment,
    model: ActorCritic,
    episodes: int,
    generator: torch.Generator,
) -> List[_Episode]:
    results = []
    for _ in range(episodes):
        episode = _Episode()
        observation = env.reset()
        done = False
        while not done:
            tensor = torch.as_tensor(observation, dtype=torch.float32)
            action, log_prob, value = model.act(tensor, generator=generator)
            outcome = env.step(action)
            episode.observations.append(observation)
            episode.actions.append(action)
            episode.log_probs.append(log_prob)
            episode.values.append(value)
            episode.rewards.append(outcome.reward)
            episode.averages.append(outcome.info.get("average_qfi", 0.0))
            observation, done = outcome.observation, outcome.done
        results.append(episode)
    return results


def _calibrate_reward_scale(
    env: AbstractEnvironment, episodes: List[_Episode]
) -> None:
    """Rescale rewards when the configured scale makes them vanish."""
    if not isinstance(env, GyroEnv):
        return

    rewards = np.concatenate([episode.rewards for episode in episodes])
    averages = np.abs(np.concatenate([e.averages for e in episodes]))
    magnitude = float(np.mean(np.abs(rewards)))
    typical = float(np.mean(averages))
    if magnitude >= settings.MIN_REWARD_MAGNITUDE or typical <= 0.0:
        return

    factor = env.reward_scale / typical
    log.info(
        "reward scale %.3g gives mean |r| = %.3g; using %.3g",
        env.reward_scale,
        magnitude,
        typical,
    )
    env.reward_scale = typical
    for episode in episodes:
        episode.rewards = [reward * factor for reward in episode.rewards]


def _batch(episodes: List[_Episode], cfg: PpoConfig) -> RolloutBatch:
    observations, actions, log_probs = [], [], []
    advantages, targets = [], []
    for episode in episodes:
        dones = [False] * (len(episode.rewards) - 1) + [True]
        episode_advantages, episode_targets = advantage_estimates(
            episode.rewards,
            episode.values,
            dones,
            cfg.discount,
            cfg.gae_lambda,
        )
        observations.extend(episode.observations)
        actions.extend(episode.actions)
        log_probs.extend(episode.log_probs)
        advantages.append(episode_advantages)
        targets.append(episode_targets)

    result = RolloutBatch(
        observations=np.asarray(observations, dtype=np.float32),
        actions=np.asarray(actions, dtype=np.float32),
        log_probs=np.asarray(log_probs, dtype=np.float32),
        advantages=normalize_advantages(np.concatenate(advantages)),
        targets=np.concatenate(targets),
    )
    return result


def _normalizers(env: AbstractEnvironment) -> Dict:
    if isinstance(env, GyroEnv):
        return {
            "reward_scale": env.reward_scale,
            "omega_grid": env.omega_grid.tolist(),
            "n_steps": env.n_steps,
            "dtau": env.dtau,
        }

    return {}


def train(
    env: AbstractEnvironment,
    cfg: PpoConfig,
    iterations: int,
    evaluation_env: Optional[AbstractEnvironment] = None,
    progress_bar: Optional[AbstractProgressBar] = None,
) -> TrainingResult:
    """Train a policy on `env`.

    Args:
        env: Training environment.
        cfg: Hyperparameters; ``cfg.seed`` fixes every random draw.
        iterations: Number of rollout-and-update iterations.
        evaluation_env (optional): Environment for the deterministic
            evaluation after each iteration. Default `env`.
        progress_bar (optional): Progress bar. Default silent.

    Returns:
        Best and final snapshots and the learning curve.

    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")

    torch.manual_seed(cfg.seed)
    generator = torch.Generator().manual_seed(cfg.seed)
    evaluation_env = evaluation_env or env
    progress_bar = progress_bar or NullProgressBar(iterations)
    model = ActorCritic(
        env.observation_dim,
        cfg.hidden_sizes,
        env.action_bounds,
        cfg.log_std_init,
    )
    optimizer = make_optimizer(model, cfg)

    curve: List[LearningCurveRecord] = []
    best: Optional[Tuple[float, PolicySnapshot, PolicyEvaluation]] = None
    for iteration in range(1, iterations + 1):
        episodes = _collect(env, model, cfg.episodes_per_update, generator)
        if iteration == 1:
            _calibrate_reward_scale(env, episodes)
            same_kind = isinstance(env, GyroEnv) and isinstance(
                evaluation_env, GyroEnv
            )
            if same_kind and evaluation_env is not env:
                evaluation_env.reward_scale = env.reward_scale

        losses = ppo_update(
            model, optimizer, _batch(episodes, cfg), cfg, generator
        )
        evaluation = evaluate_policy(model, evaluation_env)
        mean_reward = float(
            np.mean([sum(episode.rewards) for episode in episodes])
        )
        record = LearningCurveRecord(
            iteration=iteration,
            eval_return=evaluation.eval_return,
            mean_reward=mean_reward,
            policy_loss=losses.policy_loss,
            value_loss=losses.value_loss,
            entropy=losses.entropy,
        )
        curve.append(record)
        if best is None or record.eval_return > best[0]:
            snapshot = snapshot_from_model(
                model, cfg, iteration, _normalizers(env)
            )
            best = (record.eval_return, snapshot, evaluation)

        progress_bar.update()
        progress_bar.set_postfix(
            eval_return=record.eval_return, mean_reward=mean_reward
        )
        log.debug("iteration %d: %s", iteration, record)

    progress_bar.close()
    result = TrainingResult(
        snapshot=best[1],
        final_snapshot=snapshot_from_model(
            model, cfg, iterations, _normalizers(env)
        ),
        curve=curve,
        best_evaluation=best[2],
    )
    return result
