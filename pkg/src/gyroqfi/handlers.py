# -*- coding: utf-8 -*-
"""Handlers.

One handler per command. Every handler stages its tables on the output
unit of work and commits them together with the manifest; event handlers
report what was written.

"""

# Standard Library Imports
import logging
import math
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Type

# Third-Party Imports
import numpy as np

# Local Imports
from . import messages
from .dynamics import AMPLITUDE_LABELS
from .dynamics import MOMENT_LABELS
from .dynamics import trajectory_columns
from .errors import ConfigError
from .errors import MissingFileError
from .errors import NumericalError
from .experiments import SweepAxis
from .experiments import local_minima
from .experiments import run_detuning_sweep
from .experiments import run_fixed_detuning_baseline
from .experiments import run_omega_sweep
from .experiments import run_qfi_dynamics
from .experiments import run_scaling_study
from .experiments.studies import BASELINE_COLUMNS
from .experiments.studies import TRACE_COLUMNS
from .experiments.studies import VALUE_COLUMNS
from .progress import make_progress_bar
from .rl import LEARNING_CURVE_COLUMNS
from .rl import EpisodeTrace
from .rl import GyroEnv
from .rl import evaluate_policy
from .rl import load_snapshot
from .rl import train
from .selftest import SELFTEST_COLUMNS
from .selftest import CheckResult
from .selftest import oracle_deviation
from .selftest import run_selftest
from .units_of_work import OutputUnitOfWork
from .utils import output_stem

__all__ = [
    "COMMAND_HANDLERS",
    "EVENT_HANDLERS",
    "SCHEDULE_COLUMNS",
    "check_oracle",
    "evaluate_policy_snapshot",
    "log_output_written",
    "log_run_completed",
    "run_baseline",
    "run_scaling",
    "run_selftest_checks",
    "run_simulation",
    "run_sweep",
    "train_policy",
]


# Initialize logger.
log = logging.getLogger("gyroqfi")

SCHEDULE_COLUMNS = ("step", "t", "delta_c", "average_qfi")


def _hz(omega: float) -> float:
    return omega / (2.0 * math.pi)


def _schedule_rows(trace: EpisodeTrace) -> List[list]:
    # The last row carries the final average and no action.
    results = []
    for step, (t, average) in enumerate(zip(trace.times, trace.average_qfi)):
        action = trace.actions[step] if step < len(trace.actions) else None
        delta_c = math.nan if action is None else action
        results.append([step, t, delta_c, average])
    return results


# ----------------------------------------------------------------------------
# Studies
# ----------------------------------------------------------------------------
def run_simulation(
    command: messages.RunSimulation,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> List[Dict[str, Any]]:
    """Fisher-information dynamics, one table per series."""
    run = command.run
    spec = run.time_spec()
    with uow:
        uow.begin(run.to_manifest())
        result = run_qfi_dynamics(
            spec,
            make_progress_bar(
                "simulate",
                len(spec.directions) * len(spec.epsilons) * len(spec.omegas),
                show_progress,
            ),
        )
        for series in result.series:
            stem = output_stem(
                run.stem, series.direction.value, series.epsilon
            )
            if len(spec.omegas) > 1:
                stem += f"_omega{_hz(series.omega):g}hz"
            uow.add_table(stem, series.columns, series.rows())
            if run.plot_data:
                uow.add_curve(
                    stem,
                    ("t", "qfi"),
                    np.column_stack([series.times, series.qfi]).tolist(),
                )

        summary = result.summary()
        uow.record(series=summary)
        uow.commit()

    return summary


def run_sweep(
    command: messages.RunSweep,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Steady-state sweep over detuning or rotation rate."""
    run = command.run
    if command.axis is SweepAxis.DETUNING:
        spec, study = run.detuning_spec(), run_detuning_sweep
        keys = [(d, o) for d in spec.directions for o in spec.omegas]
        total = len(keys) * len(spec.values)
    elif command.axis is SweepAxis.OMEGA:
        spec, study = run.omega_spec(), run_omega_sweep
        keys = [(d, None) for d in spec.directions]
        total = len(keys) * len(spec.values)
    else:
        raise ConfigError(f"cannot sweep over {command.axis.value}")

    with uow:
        uow.begin(run.to_manifest())
        sweep = study(
            spec, make_progress_bar(command.axis.value, total, show_progress)
        )
        stem = f"{run.stem}_{command.axis.value}"
        uow.add_table(stem, sweep.columns, sweep.rows())

        optima = []
        for direction, omega in keys:
            curve = sweep.curve(direction, omega)
            best = sweep.optimum(direction, omega)
            summary = {
                "direction": direction.value,
                "omega_hz": None if omega is None else _hz(omega),
                "value": best.value,
                "delta_omega": best.steady.delta_omega,
                "local_minima": len(
                    local_minima([p.steady.delta_omega for p in curve])
                ),
                "converged": all(p.steady.converged for p in curve),
            }
            optima.append(summary)
            if run.plot_data:
                suffix = direction.value
                if omega is not None:
                    suffix += f"_omega{_hz(omega):g}hz"
                uow.add_curve(
                    f"{stem}_{suffix}",
                    (VALUE_COLUMNS[command.axis], "delta_omega"),
                    [[p.value, p.steady.delta_omega] for p in curve],
                )

        uow.record(optima=optima)
        uow.commit()

    result = {"optima": optima}
    return result


def run_scaling(
    command: messages.RunScaling,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Steady Fisher information against photon number."""
    run = command.run
    spec = run.scaling_spec()
    with uow:
        uow.begin(run.to_manifest())
        result = run_scaling_study(
            spec, make_progress_bar("scaling", len(spec.values), show_progress)
        )
        stem = f"{run.stem}_scaling"
        uow.add_table(stem, result.columns, result.rows())
        if run.plot_data:
            uow.add_curve(
                stem,
                ("n_photons", "qfi"),
                [
                    [p.steady.n_photons, p.steady.qfi]
                    for p in result.sweep.points
                ],
            )
        uow.record(slope=result.slope)
        uow.commit()

    return {"slope": result.slope}


def run_baseline(
    command: messages.RunBaseline,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Constant-detuning episodes and the best of them."""
    run = command.run
    spec = run.baseline_spec()
    with uow:
        uow.begin(run.to_manifest())
        result = run_fixed_detuning_baseline(
            spec,
            make_progress_bar("baseline", len(spec.values), show_progress),
        )
        uow.add_table(f"{run.stem}_baseline", BASELINE_COLUMNS, result.rows())
        uow.add_table(
            f"{run.stem}_baseline_trace",
            TRACE_COLUMNS,
            result.best_trace_rows(),
        )
        summary = {
            "best_delta_c": result.best.delta_c,
            "best_max_average_qfi": result.best.max_average_qfi,
            "t_at_max": result.best.t_at_max,
        }
        uow.record(**summary)
        uow.commit()

    return summary


# ----------------------------------------------------------------------------
# Control
# ----------------------------------------------------------------------------
def train_policy(
    command: messages.TrainPolicy,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Train a detuning policy and play its best snapshot."""
    run = command.run
    iterations = command.iterations or run.get("iterations", 100)
    if iterations < 1:
        raise ConfigError(f"iterations must be >= 1, got {iterations}")

    env, evaluation_env = run.environment(), run.environment()
    cfg = run.ppo_config()
    with uow:
        uow.begin(run.to_manifest())
        result = train(
            env,
            cfg,
            iterations,
            evaluation_env=evaluation_env,
            progress_bar=make_progress_bar(
                "train", iterations, show_progress or command.show_progress
            ),
        )
        uow.add_table(
            f"{run.stem}_learning_curve",
            LEARNING_CURVE_COLUMNS,
            [record.to_row() for record in result.curve],
        )
        uow.add_document(f"{run.stem}_policy", result.snapshot.to_dict())
        uow.add_document(
            f"{run.stem}_policy_final", result.final_snapshot.to_dict()
        )
        uow.add_table(
            f"{run.stem}_schedule",
            SCHEDULE_COLUMNS,
            _schedule_rows(result.best_evaluation.trace),
        )
        summary = {
            "iterations": iterations,
            "best_iteration": result.snapshot.step_count,
            "eval_return": result.best_evaluation.eval_return,
            "mean_precision": result.best_evaluation.mean_precision,
            "reward_scale": getattr(env, "reward_scale", None),
        }
        uow.record(**summary)
        uow.commit()

    return summary


def evaluate_policy_snapshot(
    command: messages.EvaluatePolicy,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Play one deterministic episode of a saved policy.

    Raises:
        MissingFileError: when the snapshot does not exist.
        ConfigError: when the snapshot does not fit the environment.
        NumericalError: when the episode is aborted.

    """
    run = command.run
    if not command.snapshot.is_file():
        raise MissingFileError(command.snapshot)

    snapshot = load_snapshot(command.snapshot)
    env = run.environment()
    if snapshot.observation_dim != env.observation_dim:
        message = (
            f"snapshot expects {snapshot.observation_dim} observation "
            f"features, the environment has {env.observation_dim}"
        )
        raise ConfigError(message)

    if isinstance(env, GyroEnv) and "reward_scale" in snapshot.normalizers:
        env.reward_scale = snapshot.normalizers["reward_scale"]

    with uow:
        uow.begin(run.to_manifest())
        evaluation = evaluate_policy(snapshot, env)
        if evaluation.trace.diagnostics is not None:
            raise NumericalError(
                "evaluation episode aborted",
                diagnostics=evaluation.trace.diagnostics,
            )

        uow.add_table(
            f"{run.stem}_evaluation",
            SCHEDULE_COLUMNS,
            _schedule_rows(evaluation.trace),
        )
        summary = {
            "snapshot": str(command.snapshot),
            "eval_return": evaluation.eval_return,
            "mean_precision": evaluation.mean_precision,
        }
        uow.record(**summary)
        uow.commit()

    return summary


# ----------------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------------
def check_oracle(
    command: messages.CheckOracle,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> Dict[str, Any]:
    """Moment solver against the density-matrix integrator."""
    run = command.run
    p, config = run.params, run.fock_config()
    t_end = run.get("t_end_over_omega_m", 10.0)
    samples = run.get("samples", 20)
    if samples < 1 or not t_end > 0.0:
        raise ConfigError("oracle check needs samples >= 1 and t_end > 0")

    times = np.linspace(t_end / samples, t_end, samples)
    with uow:
        uow.begin(run.to_manifest())
        deviation, moments, oracle = oracle_deviation(
            p, config, times, run.get("tol", 1e-10)
        )
        uow.add_table(
            f"{run.stem}_moments", trajectory_columns(), moments.rows()
        )
        uow.add_table(
            f"{run.stem}_oracle", trajectory_columns(), oracle.rows()
        )
        labels = [*AMPLITUDE_LABELS, *MOMENT_LABELS]
        uow.add_table(
            f"{run.stem}_deviation",
            ["t", *labels, "max"],
            [
                [t, *row.tolist(), float(np.max(row))]
                for t, row in zip(times, deviation)
            ],
        )
        summary = {
            "dims": list(config.dims),
            "max_deviation": float(np.max(deviation)),
        }
        uow.record(**summary)
        uow.commit()

    return summary


def run_selftest_checks(
    command: messages.RunSelftest,
    uow: OutputUnitOfWork,
    show_progress: bool = False,
) -> List[CheckResult]:
    """Run the consistency checks and tabulate them."""
    run = command.run
    with uow:
        uow.begin(run.to_manifest())
        progress_bar = make_progress_bar("selftest", None, show_progress)
        results = run_selftest(command.include_slow, progress_bar)
        uow.add_table(
            "selftest", SELFTEST_COLUMNS, [r.to_row() for r in results]
        )
        uow.record(passed=all(r.passed for r in results))
        uow.commit()

    return results


# ----------------------------------------------------------------------------
# Events
# ----------------------------------------------------------------------------
def log_output_written(event: messages.OutputWritten) -> None:
    log.info("wrote %s (%d rows)", event.path, event.rows)


def log_run_completed(event: messages.RunCompleted) -> None:
    log.info(
        "%s finished in %.1f s, outputs in %s",
        event.command,
        event.wall_time,
        event.output_dir,
    )


COMMAND_HANDLERS: Dict[Type[messages.BaseCommand], Callable] = {
    messages.RunSimulation: run_simulation,
    messages.RunSweep: run_sweep,
    messages.RunScaling: run_scaling,
    messages.RunBaseline: run_baseline,
    messages.TrainPolicy: train_policy,
    messages.EvaluatePolicy: evaluate_policy_snapshot,
    messages.CheckOracle: check_oracle,
    messages.RunSelftest: run_selftest_checks,
}

EVENT_HANDLERS: Dict[Type[messages.BaseEvent], List[Callable]] = {
    messages.OutputWritten: [log_output_written],
    messages.RunCompleted: [log_run_completed],
}
