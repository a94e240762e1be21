# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import pathlib

# Local Imports
from gyroqfi import messages
from gyroqfi.bootstrap import bind_dependencies
from gyroqfi.bootstrap import bootstrap
from gyroqfi.units_of_work import OutputUnitOfWork


def _handler(command: messages.BaseCommand, uow: str) -> tuple:
    return command, uow


def test_binds_only_accepted_dependencies() -> None:
    handler = bind_dependencies(
        _handler, {"uow": "output", "show_progress": True}
    )
    assert handler.keywords == {"uow": "output"}
    assert handler("command") == ("command", "output")


def test_bus_writes_through_unit_of_work(output_dir: pathlib.Path) -> None:
    uow = OutputUnitOfWork(output_dir)
    bus = bootstrap(uow)
    assert bus.uow is uow
