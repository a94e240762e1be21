# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import json
import pathlib
import typing

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi import messages
from gyroqfi import settings
from gyroqfi.cli import parse_and_dispatch
from gyroqfi.errors import NonFinite
from gyroqfi.handlers import COMMAND_HANDLERS

SMALL_RUN = [
    "--override",
    "t_end=2",
    "--override",
    "samples=3",
    "--override",
    "tol=1e-6",
    "--override",
    "epsilon=50",
    "--override",
    "omega_hz=2000",
]

BANDIT_RUN = [
    "--override",
    "bandit=true",
    "--override",
    "ppo.episodes_per_update=8",
    "--override",
    "ppo.hidden_sizes=4",
]


def _manifest(output_dir: pathlib.Path) -> dict:
    path = output_dir / settings.MANIFEST_FILENAME
    return json.loads(path.read_text())


def test_selftest_passes(
    output_dir: pathlib.Path, capsys: pytest.CaptureFixture
) -> None:
    status = parse_and_dispatch(["selftest", "--output-dir", str(output_dir)])
    assert status == 0
    assert "PASS linear_cavity" in capsys.readouterr().out
    assert (output_dir / "selftest.csv").is_file()


def test_simulate_writes_table_and_manifest(
    output_dir: pathlib.Path,
) -> None:
    argv = ["simulate", "--output-dir", str(output_dir), *SMALL_RUN]
    assert parse_and_dispatch([*argv, "--plot-data"]) == 0

    table = output_dir / "simulate_ccw_eps50.csv"
    lines = table.read_text().splitlines()
    assert lines[0].startswith("t,qfi,delta_omega")
    assert len(lines) == 4
    assert (output_dir / "simulate_ccw_eps50.dat").is_file()
    manifest = _manifest(output_dir)
    assert manifest["command"] == "simulate"
    assert "simulate_ccw_eps50.csv" in manifest["outputs"]


def test_parameter_file_names_outputs(
    output_dir: pathlib.Path,
    make_json_file: typing.Callable[..., pathlib.Path],
) -> None:
    path = make_json_file("small.json", {"epsilon": 50, "drive": "cw"})
    argv = ["simulate", "--params", str(path), "--output-dir"]
    status = parse_and_dispatch([*argv, str(output_dir), *SMALL_RUN[:6]])
    assert status == 0
    assert (output_dir / "small_cw_eps50.csv").is_file()


def test_bad_override_exits_with_invalid_input(
    output_dir: pathlib.Path, capsys: pytest.CaptureFixture
) -> None:
    argv = ["simulate", "--output-dir", str(output_dir)]
    status = parse_and_dispatch([*argv, "--override", "epsilon"])
    assert status == 1
    assert "is not key=value" in capsys.readouterr().err
    assert not output_dir.exists()


def test_missing_parameter_file_exits_with_invalid_input(
    output_dir: pathlib.Path, tempdir: str
) -> None:
    missing = str(pathlib.Path(tempdir) / "missing.json")
    argv = ["simulate", "--params", missing, "--output-dir", str(output_dir)]
    assert parse_and_dispatch(argv) == 1


def test_unknown_command_exits_with_invalid_input() -> None:
    assert parse_and_dispatch(["spin"]) == 1


def test_numerical_failure_writes_diagnostics(
    output_dir: pathlib.Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    def fail(command: messages.RunSimulation, uow: object) -> None:
        raise NonFinite("state is not finite", diagnostics={"t": 1.5})

    monkeypatch.setitem(COMMAND_HANDLERS, messages.RunSimulation, fail)
    argv = ["simulate", "--output-dir", str(output_dir)]
    assert parse_and_dispatch(argv) == 2

    path = output_dir / settings.DIAGNOSTICS_FILENAME
    diagnostics = json.loads(path.read_text())
    assert diagnostics["error"] == "NonFinite"
    assert diagnostics["t"] == 1.5
    assert not (output_dir / settings.MANIFEST_FILENAME).exists()


def test_train_then_evaluate_bandit(tempdir: str) -> None:
    train_dir = pathlib.Path(tempdir) / "train"
    argv = ["train", "--output-dir", str(train_dir), "--iterations", "2"]
    assert parse_and_dispatch([*argv, *BANDIT_RUN]) == 0

    snapshot = train_dir / "train_policy.json"
    assert (train_dir / "train_learning_curve.csv").is_file()
    assert (train_dir / "train_policy_final.json").is_file()
    assert _manifest(train_dir)["results"]["iterations"] == 2

    eval_dir = pathlib.Path(tempdir) / "eval"
    argv = ["eval", "--output-dir", str(eval_dir), "--snapshot"]
    assert parse_and_dispatch([*argv, str(snapshot), *BANDIT_RUN]) == 0
    assert (eval_dir / "eval_evaluation.csv").is_file()


def test_eval_rejects_missing_snapshot(
    output_dir: pathlib.Path, tempdir: str
) -> None:
    snapshot = str(pathlib.Path(tempdir) / "none.json")
    argv = ["eval", "--output-dir", str(output_dir), "--snapshot", snapshot]
    assert parse_and_dispatch(argv) == 1


@pytest.mark.slow
def test_oracle_check_agrees(output_dir: pathlib.Path) -> None:
    argv = [
        "oracle-check",
        "--output-dir",
        str(output_dir),
        "--override",
        "t_end=1",
        "--override",
        "samples=2",
        "--override",
        "epsilon=0.2",
        "--override",
        "J=0",
        "--override",
        "n_bar_m=0",
        "--override",
        "g0_over_omega_m=0.02",
    ]
    assert parse_and_dispatch(argv) == 0
    assert _manifest(output_dir)["results"]["max_deviation"] < 1e-3
