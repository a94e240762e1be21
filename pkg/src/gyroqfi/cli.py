# -*- coding: utf-8 -*-
"""Command-Line Interface.

Usage:
    gyroqfi <command> [--params FILE] [--override KEY=VALUE ...]
        [--output-dir DIR] [--seed N] [--threads N] [--plot-data]

Exit status is 0 on success, 1 on invalid input and 2 on a numerical
failure, in which case ``diagnostics.json`` is written to the output
directory.

"""

# Standard Library Imports
import argparse
import logging
import pathlib
import sys
from typing import Any
from typing import Dict
from typing import List
from typing import NoReturn
from typing import Optional
from typing import Sequence

# Local Imports
from . import __version__
from . import messages
from . import settings
from .bootstrap import bootstrap
from .config import COMMANDS
from .config import RunConfig
from .config import describe_schema
from .config import resolve_threads
from .errors import ConfigError
from .errors import NumericalError
from .errors import ValidationError
from .experiments import SweepAxis
from .selftest import CheckResult
from .units_of_work import OutputUnitOfWork
from .wrappers import JsonFileWrapper

__all__ = ["build_parser", "main", "parse_and_dispatch", "write_diagnostics"]


# Initialize logger.
log = logging.getLogger("gyroqfi")

EXIT_SUCCESS = 0
EXIT_INVALID_INPUT = 1
EXIT_NUMERICAL_FAILURE = 2

_HELP = {
    "simulate": "Fisher-information dynamics at constant detuning.",
    "sweep": "Steady-state sweep over detuning or rotation rate.",
    "scaling": "Steady-state Fisher information against photon number.",
    "baseline": "Constant-detuning episodes of the control task.",
    "train": "Train a detuning policy with PPO.",
    "eval": "Play one deterministic episode of a saved policy.",
    "oracle-check": "Compare moments with the density-matrix integrator.",
    "selftest": "Run the built-in consistency checks.",
}


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising instead of exiting on bad usage."""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(message)


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--params", type=pathlib.Path, help="JSON parameter file"
    )
    parser.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one parameter; repeatable",
    )
    parser.add_argument(
        "--output-dir",
        type=pathlib.Path,
        default=pathlib.Path("output"),
        help="output directory (default: %(default)s)",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--threads",
        type=int,
        help=(
            "width of the parallel map "
            f"(default: ${settings.THREADS_ENVIRONMENT_VARIABLE} or 1)"
        ),
    )
    parser.add_argument(
        "--plot-data",
        action="store_true",
        help="also write two-column .dat files",
    )
    parser.add_argument(
        "--progress", action="store_true", help="show progress bars"
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="lower the log level; repeatable",
    )


def build_parser() -> ArgumentParser:
    """Parser of every subcommand."""
    parser = ArgumentParser(
        prog="gyroqfi",
        description="Quantum Fisher information of a spinning "
        "optomechanical gyroscope.",
        epilog=describe_schema(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command in COMMANDS:
        subparser = subparsers.add_parser(
            command,
            help=_HELP[command],
            epilog=describe_schema(),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        _add_common_arguments(subparser)
        if command == "sweep":
            subparser.add_argument(
                "--axis",
                choices=[SweepAxis.DETUNING.value, SweepAxis.OMEGA.value],
                default=SweepAxis.DETUNING.value,
            )
        elif command == "train":
            subparser.add_argument("--iterations", type=int)
        elif command == "eval":
            subparser.add_argument(
                "--snapshot", type=pathlib.Path, required=True
            )
        elif command == "selftest":
            subparser.add_argument(
                "--slow",
                action="store_true",
                help="include the density-matrix comparison",
            )
    return parser


def _log_level(args: argparse.Namespace) -> int:
    level = logging.getLevelName(args.log_level)
    result = max(logging.DEBUG, level - 10 * args.verbose)
    return result


def _command(args: argparse.Namespace, run: RunConfig):
    if args.command == "simulate":
        return messages.RunSimulation(run)
    if args.command == "sweep":
        return messages.RunSweep(run, SweepAxis(args.axis))
    if args.command == "scaling":
        return messages.RunScaling(run)
    if args.command == "baseline":
        return messages.RunBaseline(run)
    if args.command == "train":
        return messages.TrainPolicy(run, args.iterations, args.progress)
    if args.command == "eval":
        return messages.EvaluatePolicy(run, args.snapshot)
    if args.command == "oracle-check":
        return messages.CheckOracle(run)
    return messages.RunSelftest(run, args.slow)


def write_diagnostics(
    output_dir: pathlib.Path, diagnostics: Dict[str, Any]
) -> pathlib.Path:
    """Write ``diagnostics.json`` and return its path."""
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / settings.DIAGNOSTICS_FILENAME
    with JsonFileWrapper(path).open("w") as file:
        file.dump(diagnostics)
    return path


def _report_selftest(results: List[CheckResult]) -> int:
    for result in results:
        print(f"{result.label} {result.name}")
    passed = all(result.passed for result in results)
    return EXIT_SUCCESS if passed else EXIT_NUMERICAL_FAILURE


def parse_and_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command.

    Args:
        argv (optional): Arguments without the program name. Default
            ``sys.argv[1:]``.

    Returns:
        Exit status.

    """
    output_dir: Optional[pathlib.Path] = None
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            format="%(asctime)s %(levelname)s %(name)s: %(message)s"
        )
        log.setLevel(_log_level(args))
        output_dir = args.output_dir
        run = RunConfig.from_files(
            args.command,
            args.output_dir,
            args.params,
            args.override,
            seed=args.seed,
            threads=resolve_threads(args.threads),
            plot_data=args.plot_data,
        )
        uow = OutputUnitOfWork(run.output_dir)
        bus = bootstrap(uow, args.progress)
        result = bus.handle(_command(args, run))
    except ValidationError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NumericalError as error:
        path = write_diagnostics(
            output_dir or pathlib.Path("."), error.diagnostics
        )
        print(f"error: {error} (diagnostics in {path})", file=sys.stderr)
        return EXIT_NUMERICAL_FAILURE

    if args.command == "selftest":
        return _report_selftest(result)

    return EXIT_SUCCESS


def main() -> NoReturn:
    """Console entry point."""
    sys.exit(parse_and_dispatch())
