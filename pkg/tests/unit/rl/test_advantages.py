# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.rl import RolloutBatch
from gyroqfi.rl import advantage_estimates
from gyroqfi.rl import normalize_advantages


def test_single_terminal_step_advantage_is_reward_minus_value() -> None:
    advantages, targets = advantage_estimates([1.0], [0.25], [True], 0.9, 0.8)
    np.testing.assert_allclose(advantages, [0.75])
    np.testing.assert_allclose(targets, [1.0])


def test_matches_hand_computed_estimates() -> None:
    rewards, values, dones = [1.0, 2.0], [0.5, 1.0], [False, True]
    gamma, lam = 0.9, 0.8
    delta1 = 2.0 - 1.0
    delta0 = 1.0 + gamma * 1.0 - 0.5
    advantages, targets = advantage_estimates(
        rewards, values, dones, gamma, lam
    )
    np.testing.assert_allclose(
        advantages, [delta0 + gamma * lam * delta1, delta1]
    )
    np.testing.assert_allclose(targets, advantages + np.array(values))


def test_does_not_bootstrap_across_episodes() -> None:
    advantages, _ = advantage_estimates(
        [1.0, 1.0], [0.0, 10.0], [True, True], 0.99, 0.95
    )
    np.testing.assert_allclose(advantages, [1.0, -9.0])


def test_bootstraps_from_last_value() -> None:
    advantages, _ = advantage_estimates(
        [0.0], [0.0], [False], 0.5, 1.0, last_value=2.0
    )
    np.testing.assert_allclose(advantages, [1.0])


def test_raises_error_for_mismatched_lengths() -> None:
    with pytest.raises(ValueError, match="equal length"):
        advantage_estimates([1.0, 2.0], [0.0], [True], 0.9, 0.9)


def test_normalizes_to_zero_mean_and_unit_deviation() -> None:
    result = normalize_advantages(np.array([1.0, 2.0, 3.0, 10.0]))
    assert result.mean() == pytest.approx(0.0, abs=1e-12)
    assert result.std() == pytest.approx(1.0)


def test_constant_advantages_normalize_to_zero() -> None:
    result = normalize_advantages(np.full(5, 3.0))
    np.testing.assert_array_equal(result, np.zeros(5))


def test_raises_error_for_empty_batch() -> None:
    empty = np.zeros(0)
    with pytest.raises(ValueError, match="must not be empty"):
        RolloutBatch(np.zeros((0, 1)), empty, empty, empty, empty)


def test_raises_error_for_ragged_batch() -> None:
    one, two = np.zeros(1), np.zeros(2)
    with pytest.raises(ValueError, match="log_probs must have 1 entries"):
        RolloutBatch(np.zeros((1, 1)), one, two, one, one)
